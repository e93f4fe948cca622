use std::sync::Arc;

use fedder::fpmod::{FPModule, Matrix, ModuleGb, ModuleMap};
use fedder::groebner::Ideal;
use fedder::polyring::{parse_polynomial, Monomial, Polynomial, RingContext, TermOrder};
use proptest::prelude::*;

#[test]
fn kernel_of_the_f2_difference_map() {
    let ctx = RingContext::new(2, &["x", "y"], TermOrder::DegRevLex).unwrap();
    let p = |s: &str| parse_polynomial(s, &ctx).unwrap();
    let source = Arc::new(
        FPModule::direct_sum(
            &ctx,
            &[Ideal::new(&ctx, vec![p("y"), p("x^2")]), Ideal::new(&ctx, vec![p("x"), p("y^2")])],
            None,
        )
        .unwrap(),
    );
    let target = Arc::new(FPModule::cyclic(&Ideal::new(&ctx, vec![p("x^2"), p("y^2")])));
    // u, v |-> y u - x v; over F_2 the sign is invisible.
    let matrix = Matrix::from_columns(&ctx, 1, &[vec![p("y")], vec![p("x")]]).unwrap();
    let phi = ModuleMap::new(source.clone(), target, matrix).unwrap();
    assert!(phi.is_well_defined().unwrap());

    let gens = phi.kernel_generators().unwrap();
    let with_relations = |extra: Vec<Vec<Polynomial>>| {
        let mut all = source.relations().to_vec();
        all.extend(extra);
        ModuleGb::new(&ctx, 2, &all).unwrap()
    };
    let expected = vec![p("x"), p("y")];
    assert!(with_relations(gens.clone()).contains(&expected).unwrap());
    let span = with_relations(vec![expected.clone()]);
    for g in &gens {
        assert!(span.contains(g).unwrap(), "{g:?}");
    }
    assert!(phi.apply(&expected).unwrap().iter().all(|c| c.is_zero()));
    assert!(!phi.apply(&[p("x"), p("0")]).unwrap().iter().all(|c| c.is_zero()));
}

fn poly(ctx: &Arc<RingContext>, t: &[(Vec<u32>, i64)]) -> Polynomial {
    Polynomial::from_terms(ctx, t.iter().map(|(e, c)| (Monomial::from(e.clone()), *c)).collect::<Vec<_>>())
}

fn terms() -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec((prop::collection::vec(0u32..3, 2), -5i64..5), 0..3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Maps `R/(x^a, y^b)^2 → R/(x^a, y^b)`: the kernel generators are killed,
    /// and anything killed lies in their span.
    #[test]
    fn kernels_are_exact(
        p in prop::sample::select(vec![2u64, 3]),
        a in 1u32..4,
        b in 1u32..4,
        m1 in terms(),
        m2 in terms(),
        probe in prop::collection::vec(terms(), 2),
    ) {
        let ctx = RingContext::new(p, &["x", "y"], TermOrder::DegRevLex).unwrap();
        let mono = |e: Vec<u32>| Polynomial::term(&ctx, Monomial::from(e), 1);
        let ideal = Ideal::new(&ctx, vec![mono(vec![a, 0]), mono(vec![0, b])]);
        let source = Arc::new(FPModule::direct_sum(&ctx, &[ideal.clone(), ideal.clone()], None).unwrap());
        let target = Arc::new(FPModule::cyclic(&ideal));
        let matrix = Matrix::from_columns(&ctx, 1, &[vec![poly(&ctx, &m1)], vec![poly(&ctx, &m2)]]).unwrap();
        let phi = ModuleMap::new(source.clone(), target.clone(), matrix).unwrap();
        prop_assert!(phi.is_well_defined().unwrap());
        let gens = phi.kernel_generators().unwrap();
        for g in &gens {
            prop_assert!(target.is_zero_element(&phi.apply(g).unwrap()).unwrap());
        }
        let mut all = source.relations().to_vec();
        all.extend(gens);
        let span = ModuleGb::new(&ctx, 2, &all).unwrap();
        let v: Vec<Polynomial> = probe.iter().map(|t| poly(&ctx, t)).collect();
        if target.is_zero_element(&phi.apply(&v).unwrap()).unwrap() {
            prop_assert!(span.contains(&v).unwrap());
        }
        // (m2 w, -m1 w) is always killed.
        let w = &v[0];
        let syzygy = vec![&poly(&ctx, &m2) * w, -&(&poly(&ctx, &m1) * w)];
        prop_assert!(span.contains(&syzygy).unwrap());
    }
}
