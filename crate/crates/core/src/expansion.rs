//! Finite expansions `Σ_m C_m · B_{i−2m}` in a generalized basis.

use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::family::FamilyParams;
use crate::poly::Poly;
use crate::rational::Rational;
use crate::seq::SeqCache;

/// What is being expanded: a monomial `x^i` or a class member of degree `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Basis {
    Monomial,
    Family(FamilyParams),
}

impl Basis {
    /// The degree-`i` element itself.
    pub fn element(&self, i: usize) -> Poly {
        match self {
            Basis::Monomial => Poly::monomial(Rational::one(), i),
            Basis::Family(f) => SeqCache::new(f.clone()).get(i),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::Monomial => write!(f, "x^i"),
            Basis::Family(p) => write!(f, "{p}"),
        }
    }
}

/// One term `coeff · target_{degree − 2m}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub m: usize,
    pub coeff: Rational,
}

/// `source_i = Σ_m coeff_m · target_{i−2m}` with `0 ≤ m ≤ ⌊i/2⌋`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnExpansion {
    pub source: Basis,
    pub target: FamilyParams,
    pub degree: usize,
    pub terms: Vec<Term>,
}

impl ConnExpansion {
    /// Coefficient at shift `m` (zero if absent).
    pub fn coeff(&self, m: usize) -> Rational {
        self.terms
            .iter()
            .find(|t| t.m == m)
            .map(|t| t.coeff.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Index of the target basis element at shift `m`.
    pub fn basis_index(&self, m: usize) -> usize {
        self.degree - 2 * m
    }

    /// Right-hand side expanded with recurrence-generated target polynomials.
    pub fn expand(&self) -> Poly {
        self.expand_with(&SeqCache::new(self.target.clone()))
    }

    pub fn expand_with(&self, cache: &SeqCache) -> Poly {
        self.terms.iter().fold(Poly::zero(), |acc, t| {
            &acc + &cache.get(self.basis_index(t.m)).scale(&t.coeff)
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "source": self.source.to_string(),
            "target": self.target.to_string(),
            "degree": self.degree,
            "terms": self.terms.iter().map(|t| json!({
                "m": t.m,
                "index": self.basis_index(t.m),
                "coeff": t.coeff.to_string(),
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for ConnExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lhs = match &self.source {
            Basis::Monomial => format!("x^{}", self.degree),
            Basis::Family(p) => format!("{}_{}[{},{}]", p.kind, self.degree, p.a, p.b),
        };
        write!(f, "{lhs} =")?;
        let mut first = true;
        for t in self.terms.iter().filter(|t| !t.coeff.is_zero()) {
            let sep = if first { " " } else { " + " };
            first = false;
            write!(
                f,
                "{sep}({}) {}_{}[{},{}]",
                t.coeff,
                self.target.kind,
                self.basis_index(t.m),
                self.target.a,
                self.target.b
            )?;
        }
        if first {
            write!(f, " 0")?;
        }
        Ok(())
    }
}
