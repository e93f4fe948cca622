mod common;

use common::*;

#[test]
fn oracle_rank_and_span() {
    let v = vec![vec![1, 2, 0], vec![2, 4, 0], vec![0, 1, 1]];
    assert_eq!(rank(&v, 5), 2);
    assert_eq!(rank(&v, 2), 2);
    assert!(in_span(&v, &[1, 3, 1], 5));
    assert!(!in_span(&v, &[0, 0, 1], 5));
}

#[test]
fn oracle_sees_the_obvious_cohomology() {
    // x over F_p: 0 -> R/(x) -> R/(x^a) by x^(a-1); injective, cokernel R/(x^(a-1)).
    for a in 1..=4 {
        let o = Orthant::new(3, &[1], a);
        assert_eq!(o.cohomology_dim(0), 0);
        assert_eq!(o.cohomology_dim(1), (a - 1) as usize);
    }
    // The top class never dies; everything below does so immediately.
    let o = Orthant::new(2, &[1, 1], 2);
    assert_eq!(o.cohomology_dim(1), 0);
    let mut one = vec![0; o.dim(2)];
    one[o.coordinate(2, &Cell { mask: 3, exps: vec![0, 0] }).unwrap()] = 1;
    assert_eq!(o.death_level(2, &one, 8), None);
}

#[test]
fn oracle_differential_squares_to_zero() {
    for (p, d) in oracle_instances() {
        for a in 1..=3 {
            let o = Orthant::new(p, &d, a);
            for i in 0..d.len().saturating_sub(1) {
                for v in o.boundaries(i + 1) {
                    assert!(o.is_cocycle(i + 1, &v));
                }
            }
        }
    }
}

#[test]
fn engine_agrees_with_oracle() {
    let mut all = Vec::new();
    for (p, d) in oracle_instances() {
        for a in 1..=4 {
            all.extend(disagreements(p, &d, a, 7 + a as u64));
        }
    }
    assert!(all.is_empty(), "{all:#?}");
}
