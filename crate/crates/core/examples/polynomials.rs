//! Arithmetic in F_p[x, y, z]: parsing, printing, term orders and Frobenius.
//!
//! cargo run --example polynomials

use fedder::polyring::{parse_polynomial, RingContext, TermOrder};

fn main() -> fedder::Result<()> {
    for order in [TermOrder::DegRevLex, TermOrder::Lex, TermOrder::GrLex] {
        let ctx = RingContext::new(3, &["x", "y", "z"], order)?;
        let f = parse_polynomial("x*z^2 + y^3 + 2*x^2*y", &ctx)?;
        // Terms print from the leading one down.
        println!("{order:>9}: {f}");
    }

    let ctx = RingContext::new(3, &["x", "y"], TermOrder::DegRevLex)?;
    let f = parse_polynomial("x + y", &ctx)?;
    let g = parse_polynomial("x*y + 2", &ctx)?;
    println!("f = {f}, g = {g}");
    println!("f + g   = {}", &f + &g);
    println!("f * g   = {}", &f * &g);
    println!("f^3     = {}", f.pow(3)?);
    // In characteristic 3 the cube is additive.
    println!("F(f)    = {}", f.frobenius(1)?);
    println!("F^2(g)  = {}", g.frobenius(2)?);

    match parse_polynomial("x + q", &ctx) {
        Err(e) => println!("parse error: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
