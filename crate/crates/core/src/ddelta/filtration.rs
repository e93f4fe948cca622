use serde::Serialize;

use super::level::DDeltaLevel;
use crate::error::{Error, Result};
use crate::polyring::Polynomial;
use crate::subset::IndexSet;

/// The short exact sequence `0 → K_n → Q_n → Q_{n-1} → 0` of quotient
/// complexes of a level, where `Q_n` keeps the summands `S ⊆ [n]` and `K_n`
/// those with `n ∈ S`.
#[derive(Debug)]
pub struct Filtration {
    pub n: usize,
    /// `Q_n`, built directly over `R / (f_{n+1}, .., f_c)`.
    pub quotient: DDeltaLevel,
    /// `Q_{n-1}`.
    pub previous: DDeltaLevel,
    /// The complex of `f_1..f_{n-1}` over `R / (f_{n+1}, .., f_c, f_n^a)`;
    /// its degree `i` is degree `i+1` of `K_n`, the label `S'` standing for
    /// `S' ∪ {n}`.
    pub kernel: DDeltaLevel,
    pub certificate: SesCertificate,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SesCertificate {
    /// `Q_n` agrees with the restriction of the full level to `S ⊆ [n]`.
    pub quotient_is_restriction: bool,
    /// Termwise the summands of `Q_n` split into those of `K_n` and `Q_{n-1}`.
    pub ranks_add: bool,
    /// Deleting `n` from `S` matches `K_n` with the shifted smaller complex,
    /// ideals and differentials included.
    pub kernel_matches_shift: bool,
    /// Dropping the `K_n` summands commutes with the differentials.
    pub projection_is_chain_map: bool,
    pub mismatches: Vec<String>,
}

impl SesCertificate {
    pub fn holds(&self) -> bool {
        self.quotient_is_restriction && self.ranks_add && self.kernel_matches_shift && self.projection_is_chain_map
    }
}

/// Entry of the differential of `level` from `s` to `t`, where both are
/// summands of it.
fn entry(level: &DDeltaLevel, s: IndexSet, t: IndexSet) -> &Polynomial {
    level.differential(s.len()).get(level.summand_index(t), level.summand_index(s))
}

/// Pairs of summands `(S, T)` with `T = S ∪ {j}` in a complex of length `m`.
fn edges(m: usize) -> impl Iterator<Item = (IndexSet, IndexSet)> {
    IndexSet::all_subsets(m).flat_map(move |s| (0..m).filter(move |&j| !s.contains(j)).map(move |j| (s, s.with(j))))
}

/// Builds and certifies the sequence for `1 ≤ n ≤ c`.
pub fn quotient_and_kernel_complexes(level: &DDeltaLevel, n: usize) -> Result<Filtration> {
    let rs = level.rs();
    let c = level.codim();
    if n == 0 || n > c || !level.base().is_empty() {
        return Err(Error::InvalidArgument(format!("filtration index {n} outside 1..={c} of a full level")));
    }
    let a = level.level();
    let f = rs.sequence();
    let tail: Vec<Polynomial> = f[n..c].to_vec();
    let quotient = DDeltaLevel::build(rs, a, n, tail.clone())?;
    let previous = DDeltaLevel::build(rs, a, n - 1, {
        let mut b = vec![f[n - 1].clone()];
        b.extend(tail.iter().cloned());
        b
    })?;
    let kernel = DDeltaLevel::build(rs, a, n - 1, {
        let mut b = tail.clone();
        b.push(f[n - 1].pow(a as u64)?);
        b
    })?;

    let mut cert = SesCertificate::default();
    let nth = n - 1;

    let mut ok = true;
    for s in IndexSet::all_subsets(n) {
        if !quotient.summand_ideal(s).equals(level.summand_ideal(s))? {
            ok = false;
            cert.mismatches.push(format!("J_{s} differs from the full level"));
        }
    }
    for (s, t) in edges(n) {
        if entry(&quotient, s, t) != entry(level, s, t) {
            ok = false;
            cert.mismatches.push(format!("differential {s} -> {t} differs from the full level"));
        }
    }
    cert.quotient_is_restriction = ok;

    cert.ranks_add = (0..=n).all(|i| {
        let k = if i == 0 { 0 } else { kernel.labels(i - 1).len() };
        let q = if i < n { previous.labels(i).len() } else { 0 };
        quotient.labels(i).len() == k + q
    });

    let mut ok = true;
    for s in IndexSet::all_subsets(n - 1) {
        let big = s.with(nth);
        if !kernel.summand_ideal(s).equals(quotient.summand_ideal(big))? {
            ok = false;
            cert.mismatches.push(format!("kernel summand {big} differs from shifted {s}"));
        }
    }
    for (s, t) in edges(n - 1) {
        if entry(&kernel, s, t) != entry(&quotient, s.with(nth), t.with(nth)) {
            ok = false;
            cert.mismatches.push(format!("kernel differential {} -> {} differs", s.with(nth), t.with(nth)));
        }
    }
    cert.kernel_matches_shift = ok;

    let mut ok = true;
    for s in IndexSet::all_subsets(n - 1) {
        if !previous.summand_ideal(s).equals(quotient.summand_ideal(s))? {
            ok = false;
            cert.mismatches.push(format!("quotient summand {s} differs"));
        }
    }
    for (s, t) in edges(n - 1) {
        if entry(&previous, s, t) != entry(&quotient, s, t) {
            ok = false;
            cert.mismatches.push(format!("projected differential {s} -> {t} differs"));
        }
    }
    cert.projection_is_chain_map = ok;

    Ok(Filtration { n, quotient, previous, kernel, certificate: cert })
}
