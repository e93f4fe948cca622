//! Groebner bases, membership, colons and intersections, and the colon
//! identities of bracket powers of a regular sequence.
//!
//! cargo run --example ideals

use fedder::groebner::{Ideal, RegSeqContext};
use fedder::polyring::{parse_polynomial, RingContext, TermOrder};

fn main() -> fedder::Result<()> {
    let ctx = RingContext::new(2, &["x", "y"], TermOrder::DegRevLex)?;
    let p = |s: &str| parse_polynomial(s, &ctx);

    let i = Ideal::new(&ctx, vec![p("x^2 + y")?, p("x*y")?]);
    println!("GB(x^2+y, xy) = {:?}", strings(i.groebner_basis()?));
    println!("y^2 in I: {}", i.contains(&p("y^2")?)?);
    println!("x^3 mod I = {}", i.normal_form(&p("x^3")?)?);
    println!("(I : x) = {:?}", strings(i.colon(&p("x")?)?.groebner_basis()?));
    let j = Ideal::new(&ctx, vec![p("x")?]);
    println!("I ∩ (x) = {:?}", strings(i.intersect(&j)?.groebner_basis()?));

    // Bracket powers of the sequence x + y, xy.
    let rs = RegSeqContext::new(&ctx, vec![p("x + y")?, p("x*y")?])?;
    println!("certified permutable: {}", rs.certificate().holds());
    for (a, b) in [(1, 3), (2, 5)] {
        let fb = rs.bracket_power(b)?;
        let fa = rs.bracket_power(a)?;
        let colon = fb.colon(&rs.f_prod().pow((b - a) as u64)?)?;
        println!("(f^[{b}] : f^{}) = f^[{a}]: {}", b - a, colon.equals(&fa)?);
        let expected = Ideal::principal(&rs.f_prod().pow((b - a) as u64)?).sum(&fb);
        println!("(f^[{b}] : f^[{a}]) = (f^{}) + f^[{b}]: {}", b - a, fb.colon_ideal(&fa)?.equals(&expected)?);
    }

    match RegSeqContext::new(&ctx, vec![p("x")?, p("x*y")?]) {
        Err(e) => println!("x, xy: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}

fn strings(gb: &[fedder::polyring::Polynomial]) -> Vec<String> {
    gb.iter().map(|g| g.to_string()).collect()
}
