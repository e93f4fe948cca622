//! The short exact sequences 0 → K_n → Q_n → Q_{n-1} → 0 that filter a
//! level by the last index.
//!
//! cargo run --example filtration

use fedder::ddelta::{build_level, quotient_and_kernel_complexes};
use fedder::groebner::RegSeqContext;
use fedder::polyring::{parse_polynomial, RingContext, TermOrder};

fn main() -> fedder::Result<()> {
    let ctx = RingContext::new(3, &["x", "y", "z"], TermOrder::DegRevLex)?;
    let f = ["x", "y", "z"].iter().map(|s| parse_polynomial(s, &ctx)).collect::<fedder::Result<Vec<_>>>()?;
    let rs = RegSeqContext::new(&ctx, f)?;
    let level = build_level(&rs, 2)?;
    for n in 1..=rs.codim() {
        let fil = quotient_and_kernel_complexes(&level, n)?;
        let ranks = |l: &fedder::ddelta::DDeltaLevel| (0..=l.codim()).map(|i| l.labels(i).len()).collect::<Vec<_>>();
        println!(
            "n={n}: Q_n ranks {:?}, Q_(n-1) ranks {:?}, K_n ranks {:?} (shifted), exact: {}",
            ranks(&fil.quotient),
            ranks(&fil.previous),
            ranks(&fil.kernel),
            fil.certificate.holds()
        );
    }
    Ok(())
}
