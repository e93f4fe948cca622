//! Ideal-level identities behind the Fedder action: the augmentation, the
//! kernel of the structure morphism, and the codimension two decomposition.
//!
//! cargo run --example structure_kernels

use fedder::ddelta::{verify_augmentation, verify_codim2_v, verify_structure_kernels};
use fedder::groebner::RegSeqContext;
use fedder::polyring::{parse_polynomial, RingContext, TermOrder};

fn main() -> fedder::Result<()> {
    for p in [2, 3] {
        let ctx = RingContext::new(p, &["x", "y"], TermOrder::DegRevLex)?;
        let f = vec![parse_polynomial("x + y", &ctx)?, parse_polynomial("x*y", &ctx)?];
        let rs = RegSeqContext::new(&ctx, f)?;
        println!("{}", rs.describe());
        for a in 1..=3 {
            let r = verify_augmentation(&rs, a)?;
            println!("  augmentation a={a}: {} (f^[a] : f) = {:?}", r.holds(), r.colon_by_product);
        }
        for e in [1, 2] {
            let k = verify_structure_kernels(&rs, e)?;
            println!("  structure kernel q={}: {} colon = {:?}", k.q, k.holds, k.colon);
            let v = verify_codim2_v(&rs, e)?;
            println!(
                "  codim 2 q={}: colons {} {}, intersection {}",
                v.q, v.colon_f_holds, v.colon_g_holds, v.intersection_holds
            );
        }
    }
    Ok(())
}
