//! The six classical integer sequences obtained at `x = 1` and the
//! identities linking them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::connect::connect;
use crate::error::{Error, Result};
use crate::family::{FamilyParams, Kind};
use crate::rational::{int, Rational};
use crate::seq::c_coeff;

/// `F, P, 𝓕` come from `φ` rows and are shifted by one (`F_{n} = φ_{n−1}(1)`,
/// `F_0 = 0`); `L, Q, f` come from `ψ` rows unshifted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NumberFamily {
    Fibonacci,
    Pell,
    Fermat,
    Lucas,
    PellLucas,
    FermatLucas,
}

impl NumberFamily {
    pub const ALL: [NumberFamily; 6] = [
        NumberFamily::Fibonacci,
        NumberFamily::Pell,
        NumberFamily::Fermat,
        NumberFamily::Lucas,
        NumberFamily::PellLucas,
        NumberFamily::FermatLucas,
    ];

    /// Integer `(a, b)` of the row.
    pub fn coefficients(self) -> (i64, i64) {
        use NumberFamily::*;
        match self {
            Fibonacci | Lucas => (1, 1),
            Pell | PellLucas => (2, 1),
            Fermat | FermatLucas => (3, -2),
        }
    }

    pub fn kind(self) -> Kind {
        use NumberFamily::*;
        match self {
            Fibonacci | Pell | Fermat => Kind::Phi,
            Lucas | PellLucas | FermatLucas => Kind::Psi,
        }
    }

    pub fn params(self) -> FamilyParams {
        let (a, b) = self.coefficients();
        FamilyParams::new(self.kind(), int(a), int(b)).expect("nonzero row parameters")
    }

    /// Classical index of the class member of degree `i`.
    pub fn classical_index(self, i: usize) -> usize {
        match self.kind() {
            Kind::Phi => i + 1,
            Kind::Psi => i,
        }
    }

    pub fn symbol(self) -> &'static str {
        use NumberFamily::*;
        match self {
            Fibonacci => "F",
            Pell => "P",
            Fermat => "𝓕",
            Lucas => "L",
            PellLucas => "Q",
            FermatLucas => "f",
        }
    }
}

impl fmt::Display for NumberFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use NumberFamily::*;
        f.write_str(match self {
            Fibonacci => "fibonacci",
            Pell => "pell",
            Fermat => "fermat",
            Lucas => "lucas",
            PellLucas => "pell-lucas",
            FermatLucas => "fermat-lucas",
        })
    }
}

impl FromStr for NumberFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<NumberFamily> {
        use NumberFamily::*;
        Ok(match s.trim() {
            "F" => Fibonacci,
            "P" => Pell,
            "𝓕" => Fermat,
            "L" => Lucas,
            "Q" => PellLucas,
            "f" => FermatLucas,
            other => match other.to_ascii_lowercase().replace('_', "-").as_str() {
                "fibonacci" => Fibonacci,
                "pell" => Pell,
                "fermat" => Fermat,
                "lucas" => Lucas,
                "pell-lucas" => PellLucas,
                "fermat-lucas" => FermatLucas,
                _ => return Err(Error::UnknownFamily(s.to_string())),
            },
        })
    }
}

/// Growable table of one sequence, by classical index.
#[derive(Clone, Debug)]
pub struct NumberSeq {
    family: NumberFamily,
    values: Vec<BigInt>,
}

impl NumberSeq {
    pub fn new(family: NumberFamily) -> NumberSeq {
        let (a, _) = family.coefficients();
        let values = match family.kind() {
            Kind::Phi => vec![BigInt::zero(), BigInt::from(1)],
            Kind::Psi => vec![BigInt::from(2), BigInt::from(a)],
        };
        NumberSeq { family, values }
    }

    pub fn family(&self) -> NumberFamily {
        self.family
    }

    /// Value at classical index `n`.
    pub fn get(&mut self, n: usize) -> BigInt {
        let (a, b) = self.family.coefficients();
        while self.values.len() <= n {
            let k = self.values.len();
            let next = &self.values[k - 1] * a + &self.values[k - 2] * b;
            self.values.push(next);
        }
        self.values[n].clone()
    }

    /// Value of the class member of degree `i` at `x = 1`.
    pub fn at_degree(&mut self, i: usize) -> BigInt {
        self.get(self.family.classical_index(i))
    }
}

/// One checked integer identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberCase {
    pub name: String,
    pub i: usize,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl NumberCase {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn to_json(&self) -> Value {
        json!({
            "identity": self.name,
            "i": self.i,
            "lhs": self.lhs.to_string(),
            "rhs": self.rhs.to_string(),
            "pass": self.holds(),
        })
    }
}

/// The six identities whose hypergeometric coefficients sum in closed form,
/// for `2 ≤ i ≤ i_max`.
pub fn number_identity_suite(i_max: usize) -> Vec<NumberCase> {
    use NumberFamily::*;
    let mut seqs: Vec<NumberSeq> = NumberFamily::ALL.iter().map(|&f| NumberSeq::new(f)).collect();
    let mut val = |fam: NumberFamily, n: usize| -> Rational {
        let idx = NumberFamily::ALL.iter().position(|&f| f == fam).unwrap();
        Rational::from_integer(seqs[idx].get(n))
    };
    let mut cases = Vec::new();
    for i in 2..=i_max {
        for (phi, psi, neg_b) in [(Fibonacci, Lucas, -1i64), (Pell, PellLucas, -1), (Fermat, FermatLucas, 2)] {
            let rhs = (0..=i / 2).fold(Rational::zero(), |acc, m| {
                acc + c_coeff(i - 2 * m) * int(neg_b).pow(m as i32) * val(psi, i - 2 * m)
            });
            cases.push(NumberCase {
                name: format!("{}_(i+1) = sum c_(i-2m) ({neg_b})^m {}_(i-2m)", phi.symbol(), psi.symbol()),
                i,
                lhs: val(phi, i + 1),
                rhs,
            });
        }
        for (psi, phi, b) in [(Lucas, Fibonacci, 1i64), (PellLucas, Pell, 1), (FermatLucas, Fermat, -2)] {
            cases.push(NumberCase {
                name: format!("{}_i = {}_(i+1) + ({b}) {}_(i-1)", psi.symbol(), phi.symbol(), phi.symbol()),
                i,
                lhs: val(psi, i),
                rhs: val(phi, i + 1) + int(b) * val(phi, i - 1),
            });
        }
    }
    cases
}

/// `from` at degree `i` written in the `to` numbers, with the connection
/// coefficients evaluated at `x = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossNumber {
    pub from: NumberFamily,
    pub to: NumberFamily,
    pub i: usize,
    /// `(classical index of the target number, coefficient)`.
    pub terms: Vec<(usize, Rational)>,
    pub lhs: BigInt,
    pub rhs: Rational,
}

impl CrossNumber {
    pub fn holds(&self) -> bool {
        Rational::from_integer(self.lhs.clone()) == self.rhs
    }

    pub fn to_json(&self) -> Value {
        json!({
            "from": self.from.to_string(),
            "to": self.to.to_string(),
            "i": self.i,
            "lhs_index": self.from.classical_index(self.i),
            "terms": self.terms.iter().map(|(n, c)| json!({"index": n, "coeff": c.to_string()})).collect::<Vec<_>>(),
            "lhs": self.lhs.to_string(),
            "rhs": self.rhs.to_string(),
            "pass": self.holds(),
        })
    }
}

impl fmt::Display for CrossNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{} =", self.from.symbol(), self.from.classical_index(self.i))?;
        let mut first = true;
        for (n, c) in self.terms.iter().filter(|(_, c)| !c.is_zero()) {
            write!(f, "{}({c}) {}_{n}", if first { " " } else { " + " }, self.to.symbol())?;
            first = false;
        }
        if first {
            write!(f, " 0")?;
        }
        write!(f, "  [{} = {}]", self.lhs, self.rhs)
    }
}

pub fn cross_family_number(i: usize, from: NumberFamily, to: NumberFamily) -> Result<CrossNumber> {
    let e = connect(&from.params(), &to.params(), i)?;
    let mut src = NumberSeq::new(from);
    let mut tgt = NumberSeq::new(to);
    let lhs = src.at_degree(i);
    let mut rhs = Rational::zero();
    let mut terms = Vec::with_capacity(e.terms.len());
    for t in &e.terms {
        let deg = e.basis_index(t.m);
        rhs += &t.coeff * Rational::from_integer(tgt.at_degree(deg));
        terms.push((to.classical_index(deg), t.coeff.clone()));
    }
    Ok(CrossNumber { from, to, i, terms, lhs, rhs })
}

/// Small values as `i64`, for display and tests.
pub fn first_values(family: NumberFamily, count: usize) -> Vec<i64> {
    let mut s = NumberSeq::new(family);
    (0..count).map(|n| s.get(n).to_i64().unwrap_or(i64::MAX)).collect()
}
