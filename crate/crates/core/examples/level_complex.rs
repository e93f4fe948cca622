//! Builds one finite level of the DD complex, checks its identities and
//! prints it as a Graphviz diagram.
//!
//! cargo run --example level_complex > level.dot

use fedder::ddelta::build_level;
use fedder::fpmod::format_vector;
use fedder::groebner::RegSeqContext;
use fedder::polyring::{parse_polynomial, RingContext, TermOrder};

fn main() -> fedder::Result<()> {
    let ctx = RingContext::new(2, &["x", "y", "z"], TermOrder::DegRevLex)?;
    let f = ["x", "y", "z"].iter().map(|s| parse_polynomial(s, &ctx)).collect::<fedder::Result<Vec<_>>>()?;
    let rs = RegSeqContext::new(&ctx, f)?;
    let level = build_level(&rs, 2)?;

    for i in 0..=level.codim() {
        for s in level.labels(i) {
            let gens: Vec<String> = level.summand_ideal(*s).gens().iter().map(|g| g.to_string()).collect();
            eprintln!("degree {i}, summand {s}: R/({})", gens.join(", "));
        }
    }
    eprintln!("d.d = 0: {}", level.complex().is_complex()?);
    eprintln!("cosimplicial identity failures: {}", level.semi_cosimplicial_failures()?.len());
    eprintln!("embedding failures: {}", level.embedding_failures()?.len());
    for i in 0..=level.codim() {
        let h = level.complex().cohomology(i)?;
        let gens: Vec<String> = h.generators.iter().map(|g| format_vector(g)).collect();
        eprintln!("H^{i}: {gens:?}");
    }
    print!("{}", level.to_dot());
    Ok(())
}
