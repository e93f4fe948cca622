use crate::error::{Error, Result};

/// Exponent vector of a monomial. Arithmetic is checked and never wraps.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl From<Vec<u32>> for Monomial {
    fn from(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    pub fn checked_pow(&self, k: u64) -> Result<Monomial> {
        self.0
            .iter()
            .map(|&e| (e as u64).checked_mul(k).and_then(|v| u32::try_from(v).ok()).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.0.iter().zip(&other.0).map(|(a, b)| b.checked_sub(*a)).collect::<Option<Vec<_>>>().map(Monomial)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_is_an_error() {
        let m = Monomial::from(vec![u32::MAX, 0]);
        assert_eq!(m.checked_mul(&Monomial::var(2, 0)), Err(Error::ExponentOverflow));
        assert_eq!(Monomial::from(vec![1 << 20]).checked_pow(1 << 12), Err(Error::ExponentOverflow));
        assert_eq!(m.checked_mul(&Monomial::var(2, 1)).unwrap().exponents(), &[u32::MAX, 1]);
    }

    #[test]
    fn divisibility() {
        let a = Monomial::from(vec![1, 2]);
        let b = Monomial::from(vec![3, 2]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&b).unwrap().exponents(), &[2, 0]);
        assert_eq!(a.lcm(&Monomial::from(vec![0, 5])).exponents(), &[1, 5]);
        assert!(Monomial::from(vec![1, 0]).is_coprime(&Monomial::from(vec![0, 4])));
    }
}
