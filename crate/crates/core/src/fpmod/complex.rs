use std::sync::{Arc, OnceLock};

use super::map::{subquotient, ModuleMap};
use super::module::{basis_vector, is_zero_vector, FPModule, ModuleGb, Vector};
use crate::error::{Error, Result};
use crate::polyring::Polynomial;

/// A cochain complex `M_0 → M_1 → .. → M_k` of finitely presented modules.
#[derive(Debug)]
pub struct ChainComplex {
    terms: Vec<Arc<FPModule>>,
    maps: Vec<ModuleMap>,
    boundaries: Vec<OnceLock<ModuleGb>>,
}

/// `H^i` with representatives of its generators in `M_i`.
#[derive(Clone, Debug)]
pub struct Cohomology {
    pub degree: usize,
    pub module: FPModule,
    pub generators: Vec<Vector>,
}

impl Cohomology {
    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }
}

impl ChainComplex {
    /// `maps[i]` goes from `terms[i]` to `terms[i+1]`.
    pub fn new(terms: Vec<Arc<FPModule>>, maps: Vec<ModuleMap>) -> Result<Self> {
        if terms.is_empty() || maps.len() + 1 != terms.len() {
            return Err(Error::InvalidArgument(format!("{} terms with {} maps", terms.len(), maps.len())));
        }
        for (i, m) in maps.iter().enumerate() {
            if m.source().rank() != terms[i].rank() || m.target().rank() != terms[i + 1].rank() {
                return Err(Error::InvalidArgument(format!("map {i} does not match its terms")));
            }
        }
        let boundaries = terms.iter().map(|_| OnceLock::new()).collect();
        Ok(ChainComplex { terms, maps, boundaries })
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn term(&self, i: usize) -> &Arc<FPModule> {
        &self.terms[i]
    }

    pub fn terms(&self) -> &[Arc<FPModule>] {
        &self.terms
    }

    pub fn map(&self, i: usize) -> &ModuleMap {
        &self.maps[i]
    }

    pub fn maps(&self) -> &[ModuleMap] {
        &self.maps
    }

    /// Whether every map is well defined and consecutive compositions vanish.
    pub fn is_complex(&self) -> Result<bool> {
        for m in &self.maps {
            if !m.is_well_defined()? {
                return Ok(false);
            }
        }
        for w in self.maps.windows(2) {
            if !w[0].then(&w[1])?.is_zero_map()? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Basis of `im ∂^{i-1} + N_i` inside the free cover of `M_i`.
    pub fn boundary_gb(&self, i: usize) -> Result<&ModuleGb> {
        if let Some(gb) = self.boundaries[i].get() {
            return Ok(gb);
        }
        let mut gens: Vec<Vector> = self.terms[i].relations().to_vec();
        if i > 0 {
            gens.extend(self.maps[i - 1].matrix().columns());
        }
        let gb = ModuleGb::new(self.terms[i].ctx(), self.terms[i].rank(), &gens)?;
        Ok(self.boundaries[i].get_or_init(|| gb))
    }

    pub fn is_coboundary(&self, i: usize, v: &[Polynomial]) -> Result<bool> {
        self.boundary_gb(i)?.contains(v)
    }

    pub fn is_cocycle(&self, i: usize, v: &[Polynomial]) -> Result<bool> {
        match self.maps.get(i) {
            Some(m) => Ok(is_zero_vector(&m.apply(v)?)),
            None => Ok(true),
        }
    }

    /// Representatives generating the cocycles of degree `i`.
    pub fn cocycle_generators(&self, i: usize) -> Result<Vec<Vector>> {
        match self.maps.get(i) {
            Some(m) => m.kernel_generators(),
            None => {
                let (ctx, n) = (self.terms[i].ctx(), self.terms[i].rank());
                Ok((0..n).map(|k| basis_vector(ctx, n, k)).collect())
            }
        }
    }

    /// `H^i = ker ∂^i / im ∂^{i-1}`; generators are cocycle representatives
    /// in normal form modulo coboundaries, zero ones dropped.
    pub fn cohomology(&self, i: usize) -> Result<Cohomology> {
        let term = &self.terms[i];
        let boundary = self.boundary_gb(i)?;
        let mut generators: Vec<Vector> = Vec::new();
        for z in self.cocycle_generators(i)? {
            let z = boundary.normal_form(&z)?;
            if !is_zero_vector(&z) && !generators.contains(&z) {
                generators.push(z);
            }
        }
        let module = subquotient(term.ctx(), term.rank(), &generators, &boundary.elements())?;
        Ok(Cohomology { degree: i, module, generators })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpmod::Matrix;
    use crate::groebner::Ideal;
    use crate::polyring::{parse_polynomial, RingContext, TermOrder};

    #[test]
    fn koszul_complex_on_variables() {
        let ctx = RingContext::new(3, &["x", "y"], TermOrder::DegRevLex).unwrap();
        let p = |s: &str| parse_polynomial(s, &ctx).unwrap();
        let r1 = Arc::new(FPModule::free(&ctx, 1));
        let r2 = Arc::new(FPModule::free(&ctx, 2));
        let r1b = Arc::new(FPModule::free(&ctx, 1));
        let d0 = Matrix::from_columns(&ctx, 2, &[vec![p("x"), p("y")]]).unwrap();
        let d1 = Matrix::from_columns(&ctx, 1, &[vec![p("2*y")], vec![p("x")]]).unwrap();
        let cx = ChainComplex::new(
            vec![r1.clone(), r2.clone(), r1b.clone()],
            vec![ModuleMap::new(r1, r2.clone(), d0).unwrap(), ModuleMap::new(r2, r1b, d1).unwrap()],
        )
        .unwrap();
        assert!(cx.is_complex().unwrap());
        assert!(cx.cohomology(0).unwrap().is_zero());
        assert!(cx.cohomology(1).unwrap().is_zero());
        let h2 = cx.cohomology(2).unwrap();
        assert_eq!(h2.generators, vec![vec![p("1")]]);
        // H^2 ≅ R/(x, y).
        let ann = Ideal::new(&ctx, h2.module.relations().iter().map(|r| r[0].clone()).collect());
        assert!(ann.equals(&Ideal::new(&ctx, vec![p("x"), p("y")])).unwrap());
        assert!(cx.is_coboundary(2, &[p("x+y^2")]).unwrap());
    }
}
