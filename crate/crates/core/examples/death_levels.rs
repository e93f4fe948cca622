//! Follows cocycles through the transition maps until they become
//! coboundaries, and shows that the top class never does.
//!
//! cargo run --example death_levels

use fedder::ddelta::{top_class_persistence, verify_vanishing, Schedule};
use fedder::groebner::RegSeqContext;
use fedder::polyring::{parse_polynomial, RingContext, TermOrder};

fn main() -> fedder::Result<()> {
    let ctx = RingContext::new(2, &["x", "y"], TermOrder::DegRevLex)?;
    let f = vec![parse_polynomial("x + y", &ctx)?, parse_polynomial("x*y", &ctx)?];
    let rs = RegSeqContext::new(&ctx, f)?;

    for a in [2, 3] {
        for i in 0..rs.codim() {
            for schedule in [Schedule::Geometric, Schedule::Unit] {
                let report = verify_vanishing(&rs, i, a, a * 4, schedule)?;
                println!(
                    "a={a} H^{i} {schedule:>9}: {} cocycle generators, cohomology rank {}, max death {:?}, tested {:?}",
                    report.generators.len(),
                    report.cohomology_generators,
                    report.max_death_level(),
                    report.levels_tested
                );
            }
        }
    }
    let top = top_class_persistence(&rs, 2, 16, Schedule::Geometric)?;
    println!("top class {}: death {:?}", top.generators[0].generator, top.generators[0].death_level);

    let tight = verify_vanishing(&rs, 1, 2, 1, Schedule::Geometric)?;
    println!("bound below the level: all died = {}", tight.all_died());
    println!("{}", serde_json::to_string_pretty(&tight).unwrap());
    Ok(())
}
