//! Finitely presented modules: a map between quotients over F_2, its
//! kernel, and the cohomology of a Koszul complex.
//!
//! cargo run --example modules

use std::sync::Arc;

use fedder::fpmod::{format_vector, ChainComplex, FPModule, Matrix, ModuleMap};
use fedder::groebner::Ideal;
use fedder::polyring::{parse_polynomial, RingContext, TermOrder};

fn main() -> fedder::Result<()> {
    let ctx = RingContext::new(2, &["x", "y"], TermOrder::DegRevLex)?;
    let p = |s: &str| parse_polynomial(s, &ctx).unwrap();

    // R/(y, x^2) ⊕ R/(x, y^2) → R/(x^2, y^2), (u, v) ↦ y u - x v.
    let source = Arc::new(FPModule::direct_sum(
        &ctx,
        &[Ideal::new(&ctx, vec![p("y"), p("x^2")]), Ideal::new(&ctx, vec![p("x"), p("y^2")])],
        None,
    )?);
    let target = Arc::new(FPModule::cyclic(&Ideal::new(&ctx, vec![p("x^2"), p("y^2")])));
    let phi = ModuleMap::new(source, target, Matrix::from_columns(&ctx, 1, &[vec![p("y")], vec![p("x")]])?)?;
    println!("well defined: {}", phi.is_well_defined()?);
    for g in phi.kernel()?.generators {
        println!("kernel generator {}", format_vector(&g));
    }

    // Koszul complex of x, y: R → R^2 → R.
    let r1 = Arc::new(FPModule::free(&ctx, 1));
    let r2 = Arc::new(FPModule::free(&ctx, 2));
    let r1b = Arc::new(FPModule::free(&ctx, 1));
    let d0 = Matrix::from_columns(&ctx, 2, &[vec![p("x"), p("y")]])?;
    let d1 = Matrix::from_columns(&ctx, 1, &[vec![p("y")], vec![p("x")]])?;
    let koszul = ChainComplex::new(
        vec![r1.clone(), r2.clone(), r1b.clone()],
        vec![ModuleMap::new(r1, r2.clone(), d0)?, ModuleMap::new(r2, r1b, d1)?],
    )?;
    println!("d.d = 0: {}", koszul.is_complex()?);
    for i in 0..koszul.len() {
        let h = koszul.cohomology(i)?;
        let gens: Vec<String> = h.generators.iter().map(|g| format_vector(g)).collect();
        println!("H^{i}: generators {gens:?}, relations {}", h.module.relations().len());
    }
    Ok(())
}
