//! Finitely presented modules over `F_p[x_1..x_n]`, maps between them and
//! cochain complexes with computable cohomology.

mod complex;
mod map;
mod module;

pub use complex::{ChainComplex, Cohomology};
pub use map::{Kernel, Matrix, ModuleMap, SemilinearMap};
pub use module::{
    basis_vector, format_vector, is_zero_vector, module_normal_form, zero_vector, FPModule, ModuleGb, Vector,
};
