//! Classes {{r / f^a}} of the top local cohomology and the natural and
//! Fedder Frobenius actions on them.
//!
//! cargo run --example cech_classes

use fedder::cech::{phi_embed, phi_section, CechClass};
use fedder::groebner::RegSeqContext;
use fedder::polyring::{parse_polynomial, RingContext, TermOrder};
use fedder::IndexSet;

fn main() -> fedder::Result<()> {
    let ctx = RingContext::new(3, &["x", "y"], TermOrder::DegRevLex)?;
    let p = |s: &str| parse_polynomial(s, &ctx).unwrap();
    let rs = RegSeqContext::new(&ctx, vec![p("x"), p("y")])?;

    let xi = CechClass::new(&rs, &p("x*y + 1"), 2)?;
    println!("xi = {xi}");
    println!("same class at level 4: {}", xi.raise_to(4)?);
    println!("x y^2 xi is zero: {}", xi.scale(&p("x*y^2"))?.is_zero());
    println!("F_nat(xi) = {}", xi.f_nat()?);
    println!("F_fed(xi) = {}", xi.f_fed()?);

    let mut g = CechClass::one_over(&rs, 2)?;
    for e in 1..=3 {
        g = g.f_fed()?;
        println!(
            "F_fed^{e}(1/f^2) = {g}  (= 1/f^{}: {})",
            3u32.pow(e) + 1,
            g.equals(&CechClass::one_over(&rs, 3u32.pow(e) + 1)?)?
        );
    }

    // The annihilator of f_1 is a copy of R/(f_1, f_2^a).
    let first = IndexSet::from_labels([1]);
    let eta = phi_embed(&p("y + 2"), 3, first, &rs)?;
    println!("phi({}) = {eta}, killed by f_1: {}", p("y + 2"), eta.annihilated_by(first)?);
    println!("F_fed keeps it there: {}", eta.f_fed()?.annihilated_by(first)?);
    println!("section recovers {}", phi_section(&eta, first)?);
    Ok(())
}
