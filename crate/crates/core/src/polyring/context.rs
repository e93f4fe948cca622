use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::Monomial;
use crate::error::{Error, Result};

/// Monomial orders supported by the Gröbner engine.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TermOrder {
    #[default]
    DegRevLex,
    Lex,
    GrLex,
}

impl TermOrder {
    /// Compares two exponent vectors; `Greater` means `a` is the larger term.
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match self {
            TermOrder::Lex => ea.cmp(eb),
            TermOrder::GrLex => a.degree().cmp(&b.degree()).then_with(|| ea.cmp(eb)),
            TermOrder::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for (x, y) in ea.iter().zip(eb).rev() {
                    if x != y {
                        // smaller exponent in the last differing variable wins
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TermOrder::DegRevLex => "degrevlex",
            TermOrder::Lex => "lex",
            TermOrder::GrLex => "grlex",
        })
    }
}

impl std::str::FromStr for TermOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "degrevlex" => Ok(TermOrder::DegRevLex),
            "lex" => Ok(TermOrder::Lex),
            "grlex" => Ok(TermOrder::GrLex),
            other => Err(Error::InvalidContext(format!("unknown term order `{other}`"))),
        }
    }
}

/// Caps that turn runaway Gröbner computations into [`Error::BudgetExceeded`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Largest total degree allowed for a new basis element.
    pub max_degree: u64,
    /// Largest number of S-pairs processed in a single basis computation.
    pub max_pairs: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_degree: 1 << 16, max_pairs: 500_000 }
    }
}

/// The ring F_p[x_1..x_n] together with its monomial order and budget.
#[derive(Clone, Debug)]
pub struct RingContext {
    p: u32,
    vars: Vec<String>,
    order: TermOrder,
    budget: Budget,
}

impl PartialEq for RingContext {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.vars == other.vars && self.order == other.order
    }
}

impl Eq for RingContext {}

fn valid_var_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl RingContext {
    pub fn new<S: AsRef<str>>(p: u64, vars: &[S], order: TermOrder) -> Result<Arc<Self>> {
        if !(2..=(1u64 << 31)).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidContext(format!("{p} is not a prime in [2, 2^31]")));
        }
        if vars.is_empty() {
            return Err(Error::InvalidContext("no variables".into()));
        }
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if !valid_var_name(v) {
                return Err(Error::InvalidContext(format!("invalid variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidContext(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Arc::new(RingContext { p: p as u32, vars, order, budget: Budget::default() }))
    }

    /// Same ring with a different budget.
    pub fn with_budget(&self, budget: Budget) -> Arc<Self> {
        Arc::new(RingContext { budget, ..self.clone() })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    pub(crate) fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (s % self.p as u64) as u32
    }

    pub(crate) fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub(crate) fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub(crate) fn inv(&self, a: u32) -> u32 {
        debug_assert!(a != 0);
        let p = self.p as u64;
        let mut base = a as u64 % p;
        let mut exp = p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc as u32
    }

    /// Reduces a signed integer to its least nonnegative residue.
    pub fn reduce(&self, c: i64) -> u32 {
        c.rem_euclid(self.p as i64) as u32
    }
}
