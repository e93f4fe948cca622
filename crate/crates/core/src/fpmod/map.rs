use std::fmt;
use std::sync::Arc;

use super::module::{basis_vector, eliminate, is_zero_vector, zero_vector, FPModule, Vector};
use crate::error::{Error, Result};
use crate::polyring::{Polynomial, RingContext};

/// A dense `rows × cols` polynomial matrix acting on column vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    ctx: Arc<RingContext>,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            f.write_str(&row.join(", "))?;
        }
        f.write_str("]")
    }
}

impl Matrix {
    pub fn zero(ctx: &Arc<RingContext>, rows: usize, cols: usize) -> Self {
        Matrix { ctx: ctx.clone(), rows, cols, entries: vec![Polynomial::zero(ctx); rows * cols] }
    }

    pub fn identity(ctx: &Arc<RingContext>, n: usize) -> Self {
        let mut m = Matrix::zero(ctx, n, n);
        for i in 0..n {
            m.set(i, i, Polynomial::one(ctx));
        }
        m
    }

    /// Builds the matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(ctx: &Arc<RingContext>, rows: usize, columns: &[Vector]) -> Result<Self> {
        let mut m = Matrix::zero(ctx, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::InvalidArgument(format!("column {j} has length {}, expected {rows}", col.len())));
            }
            for (i, e) in col.iter().enumerate() {
                m.set(i, j, e.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Polynomial) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn apply(&self, v: &[Polynomial]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::InvalidArgument(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut acc = Polynomial::zero(&self.ctx);
            for (j, x) in v.iter().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() && !x.is_zero() {
                    acc = acc.checked_add(&a.checked_mul(x)?)?;
                }
            }
            out.push(acc);
        }
        Ok(out)
    }

    /// `self · other`.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::InvalidArgument(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(&self.ctx);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.checked_add(&a.checked_mul(b)?)?;
                    }
                }
                entries.push(acc);
            }
        }
        Ok(Matrix { ctx: self.ctx.clone(), rows: self.rows, cols: other.cols, entries })
    }

    /// Entrywise Frobenius `a ↦ a^(p^e)`.
    pub fn frobenius(&self, e: u32) -> Result<Matrix> {
        let entries = self.entries.iter().map(|a| a.frobenius(e)).collect::<Result<_>>()?;
        Ok(Matrix { ctx: self.ctx.clone(), rows: self.rows, cols: self.cols, entries })
    }
}

/// An R-linear map between finitely presented modules, given by a matrix on
/// the free covers.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    source: Arc<FPModule>,
    target: Arc<FPModule>,
    matrix: Matrix,
}

impl ModuleMap {
    pub fn new(source: Arc<FPModule>, target: Arc<FPModule>, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != target.rank() || matrix.cols() != source.rank() {
            return Err(Error::InvalidArgument(format!(
                "{}x{} matrix between ranks {} and {}",
                matrix.rows(),
                matrix.cols(),
                source.rank(),
                target.rank()
            )));
        }
        Ok(ModuleMap { source, target, matrix })
    }

    pub fn source(&self) -> &Arc<FPModule> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FPModule> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    fn ctx(&self) -> &Arc<RingContext> {
        self.source.ctx()
    }

    /// Image of a representative, reduced in the target.
    pub fn apply(&self, v: &[Polynomial]) -> Result<Vector> {
        self.target.reduce(&self.matrix.apply(v)?)
    }

    /// Whether every source relation maps into the target relations.
    pub fn is_well_defined(&self) -> Result<bool> {
        for rel in self.source.relations() {
            if !self.target.is_zero_element(&self.matrix.apply(rel)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether the induced map on quotients is zero.
    pub fn is_zero_map(&self) -> Result<bool> {
        for col in self.matrix.columns() {
            if !self.target.is_zero_element(&col)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &ModuleMap) -> Result<ModuleMap> {
        if next.source.rank() != self.target.rank() {
            return Err(Error::InvalidArgument("composition of incompatible maps".into()));
        }
        ModuleMap::new(self.source.clone(), next.target.clone(), next.matrix.mul(&self.matrix)?)
    }

    /// Representatives `v` of the source with `φ(v) ∈ N_target`, generating
    /// the kernel together with the source relations.
    pub fn kernel_generators(&self) -> Result<Vec<Vector>> {
        let (m, n) = (self.target.rank(), self.source.rank());
        let ctx = self.ctx();
        // (φ e_k ; e_k) and (rel ; 0): the syzygy part is the preimage of N.
        let mut gens: Vec<(Vector, Vector)> =
            (0..n).map(|k| (self.matrix.column(k), basis_vector(ctx, n, k))).collect();
        gens.extend(self.target.relations().iter().map(|r| (r.clone(), zero_vector(ctx, n))));
        let mut out = Vec::new();
        for v in eliminate(ctx, m, n, &gens)? {
            let v = self.source.reduce(&v)?;
            if !is_zero_vector(&v) && !out.contains(&v) {
                out.push(v);
            }
        }
        Ok(out)
    }

    /// The kernel as a presented module with its inclusion into the source.
    pub fn kernel(&self) -> Result<Kernel> {
        let generators = self.kernel_generators()?;
        let module = Arc::new(subquotient(self.ctx(), self.source.rank(), &generators, self.source.relations())?);
        let matrix = Matrix::from_columns(self.ctx(), self.source.rank(), &generators)?;
        let inclusion = ModuleMap { source: module.clone(), target: self.source.clone(), matrix };
        Ok(Kernel { module, inclusion, generators })
    }
}

/// Presentation of the submodule generated by `gens` inside `R^n / ⟨sub⟩`.
pub(crate) fn subquotient(ctx: &Arc<RingContext>, n: usize, gens: &[Vector], sub: &[Vector]) -> Result<FPModule> {
    let t = gens.len();
    let mut pairs: Vec<(Vector, Vector)> =
        gens.iter().enumerate().map(|(k, g)| (g.clone(), basis_vector(ctx, t, k))).collect();
    pairs.extend(sub.iter().map(|s| (s.clone(), zero_vector(ctx, t))));
    let relations = if t == 0 { Vec::new() } else { eliminate(ctx, n, t, &pairs)? };
    FPModule::new(ctx, t, relations)
}

#[derive(Clone, Debug)]
pub struct Kernel {
    pub module: Arc<FPModule>,
    pub inclusion: ModuleMap,
    /// Images of the kernel generators in the source, reduced.
    pub generators: Vec<Vector>,
}

/// A map `v ↦ A · F^e(v)` where `F` raises every coordinate to the `p^e`-th
/// power; additive and `p^e`-linear.
#[derive(Clone, Debug)]
pub struct SemilinearMap {
    source: Arc<FPModule>,
    target: Arc<FPModule>,
    matrix: Matrix,
    frobenius: u32,
}

impl SemilinearMap {
    pub fn new(source: Arc<FPModule>, target: Arc<FPModule>, matrix: Matrix, frobenius: u32) -> Result<Self> {
        if matrix.rows() != target.rank() || matrix.cols() != source.rank() {
            return Err(Error::InvalidArgument("matrix shape does not match module ranks".into()));
        }
        Ok(SemilinearMap { source, target, matrix, frobenius })
    }

    pub fn source(&self) -> &Arc<FPModule> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FPModule> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn frobenius_power(&self) -> u32 {
        self.frobenius
    }

    pub fn apply(&self, v: &[Polynomial]) -> Result<Vector> {
        let twisted: Vector = v.iter().map(|x| x.frobenius(self.frobenius)).collect::<Result<_>>()?;
        self.target.reduce(&self.matrix.apply(&twisted)?)
    }

    /// Relations map into relations after twisting, so the map descends.
    pub fn is_well_defined(&self) -> Result<bool> {
        for rel in self.source.relations() {
            let twisted: Vector = rel.iter().map(|x| x.frobenius(self.frobenius)).collect::<Result<_>>()?;
            if !self.target.is_zero_element(&self.matrix.apply(&twisted)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::Ideal;
    use crate::polyring::{parse_polynomial, TermOrder};

    #[test]
    fn kernel_of_multiplication() {
        let ctx = RingContext::new(3, &["x", "y"], TermOrder::DegRevLex).unwrap();
        let p = |s: &str| parse_polynomial(s, &ctx).unwrap();
        let m = Arc::new(FPModule::cyclic(&Ideal::new(&ctx, vec![p("x^3")])));
        let phi =
            ModuleMap::new(m.clone(), m.clone(), Matrix::from_columns(&ctx, 1, &[vec![p("x")]]).unwrap()).unwrap();
        assert!(phi.is_well_defined().unwrap());
        let k = phi.kernel().unwrap();
        assert_eq!(k.generators, vec![vec![p("x^2")]]);
        // The kernel is R/(x) generated by x^2.
        assert!(k.module.is_zero_element(&[p("x")]).unwrap());
        assert!(!k.module.is_zero_element(&[p("1")]).unwrap());
    }

    #[test]
    fn kernel_of_map_to_f2_quotient() {
        let ctx = RingContext::new(2, &["x", "y"], TermOrder::DegRevLex).unwrap();
        let p = |s: &str| parse_polynomial(s, &ctx).unwrap();
        let src = Arc::new(FPModule::free(&ctx, 1));
        let tgt = Arc::new(FPModule::cyclic(&Ideal::new(&ctx, vec![p("x"), p("y")])));
        let phi = ModuleMap::new(src, tgt, Matrix::identity(&ctx, 1)).unwrap();
        let gens = phi.kernel_generators().unwrap();
        let expected = Ideal::new(&ctx, vec![p("x"), p("y")]);
        let got = Ideal::new(&ctx, gens.into_iter().map(|mut v| v.remove(0)).collect());
        assert!(got.equals(&expected).unwrap());
    }

    #[test]
    fn semilinear_frobenius() {
        let ctx = RingContext::new(2, &["x", "y"], TermOrder::DegRevLex).unwrap();
        let p = |s: &str| parse_polynomial(s, &ctx).unwrap();
        let m = Arc::new(FPModule::free(&ctx, 1));
        let f = SemilinearMap::new(m.clone(), m, Matrix::identity(&ctx, 1), 1).unwrap();
        assert_eq!(f.apply(&[p("x+y")]).unwrap(), vec![p("x^2+y^2")]);
    }
}
