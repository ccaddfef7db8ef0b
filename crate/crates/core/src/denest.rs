//! Recognizes `(u + v√d)^{1/k}` as one of the reducible radicals and returns
//! its value as a quadratic surd.
//!
//! The radicand of a reducible radical is `α^k` or `β^k` for the Binet roots
//! of some `(a, b, t)`, so its norm is `(αβ)^k = (−b)^k`. That pins `b` (up
//! to sign for even `k`). Since `ψ^{a,b}_k(t)` depends on `a·t` only, one `a`
//! per `b` suffices; `t` is then located numerically and snapped to the
//! rational roots of `ψ_k(t) = 2u` allowed by the rational root theorem.
//! Every candidate is confirmed by exact powering.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::family::table_parameters;
use crate::radicals::{radical_pair, NestedRadical};
use crate::rational::{divisors, height, int, nth_root_exact, Rational};
use crate::seq::gen_psi;
use crate::surd::Surd;

/// Largest trial divisor when enumerating denominators of `t`.
const DIVISOR_CAP: u64 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DenestStatus {
    Denested,
    NotRecognized,
}

impl fmt::Display for DenestStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DenestStatus::Denested => "denested",
            DenestStatus::NotRecognized => "not_recognized",
        })
    }
}

/// Which of the two conjugate radicands matched.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Plus => "plus",
            Branch::Minus => "minus",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub a: Rational,
    pub b: Rational,
    pub k: u32,
    pub x: Rational,
    pub branch: Branch,
}

impl Witness {
    pub fn to_json(&self) -> Value {
        json!({
            "a": self.a.to_string(),
            "b": self.b.to_string(),
            "k": self.k,
            "x": self.x.to_string(),
            "branch": self.branch.to_string(),
        })
    }
}

#[derive(Clone, Debug)]
pub struct DenestResult {
    pub status: DenestStatus,
    pub value: Option<Surd>,
    pub witness: Option<Witness>,
}

impl DenestResult {
    fn not_recognized() -> DenestResult {
        DenestResult { status: DenestStatus::NotRecognized, value: None, witness: None }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "status": self.status.to_string(),
            "value": self.value.as_ref().map(|v| v.canonical().to_json()),
            "value_text": self.value.as_ref().map(|v| v.canonical().to_string()),
            "witness": self.witness.as_ref().map(Witness::to_json),
        })
    }
}

/// Tries to write the real `k`-th root of `r` as a quadratic surd.
///
/// `search_bound` caps the height of the parameter `b` outside the classical
/// rows. Even `k` with a negative radicand is a domain error.
pub fn denest(r: &NestedRadical, search_bound: u64) -> Result<DenestResult> {
    if search_bound == 0 {
        return Err(Error::OutOfRange("search bound must be at least 1".into()));
    }
    let w = r.radicand();
    if r.k % 2 == 0 && w.signum().is_lt() {
        return Err(Error::Domain(format!("even root of the negative number {w}")));
    }
    let found = if w.is_rational() {
        denest_rational(w.p(), r.k)?
    } else {
        denest_surd(&w, r.k, search_bound)?
    };
    match found {
        Some(res) => {
            let value = res.value.as_ref().expect("denested result carries a value");
            if !value.pow(r.k).value_eq(&w) {
                return Ok(DenestResult::not_recognized());
            }
            Ok(res)
        }
        None => Ok(DenestResult::not_recognized()),
    }
}

/// `(a, b)` to try for a given `b`: classical rows with that `b`, then `a = 1`.
fn parameter_candidates(b: &Rational, search_bound: u64) -> Vec<(Rational, Rational)> {
    let mut out: Vec<(Rational, Rational)> =
        table_parameters().into_iter().filter(|(_, rb)| rb == b).collect();
    if out.is_empty() && height(b) <= BigInt::from(search_bound) {
        out.push((Rational::one(), b.clone()));
    }
    out
}

fn witness_for(a: &Rational, b: &Rational, t: &Rational, k: u32, w: &Surd) -> Result<Option<DenestResult>> {
    let pair = match radical_pair(a, b, t, k) {
        Ok(p) => p,
        Err(Error::Domain(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    let (branch, value) = if pair.radicand_plus.value_eq(w) {
        (Branch::Plus, pair.root_plus)
    } else if pair.radicand_minus.value_eq(w) {
        (Branch::Minus, pair.root_minus)
    } else {
        return Ok(None);
    };
    Ok(Some(DenestResult {
        status: DenestStatus::Denested,
        value: Some(value.canonical()),
        witness: Some(Witness { a: a.clone(), b: b.clone(), k, x: t.clone(), branch }),
    }))
}

fn denest_rational(u: &Rational, k: u32) -> Result<Option<DenestResult>> {
    let Some(rho) = nth_root_exact(u, k) else {
        return Ok(None);
    };
    if rho.is_zero() {
        return Ok(Some(DenestResult { status: DenestStatus::Denested, value: Some(Surd::rational(rho)), witness: None }));
    }
    let w = Surd::rational(u.clone());
    // ρ is a Binet root for every b; take the first row that fits
    for (a, b) in table_parameters() {
        let t = (&rho - &b / &rho) / &a;
        if let Some(res) = witness_for(&a, &b, &t, k, &w)? {
            return Ok(Some(res));
        }
    }
    Ok(Some(DenestResult { status: DenestStatus::Denested, value: Some(Surd::rational(rho)), witness: None }))
}

fn denest_surd(w: &Surd, k: u32, search_bound: u64) -> Result<Option<DenestResult>> {
    let n = w.norm();
    // N = (−b)^k
    let bs: Vec<Rational> = if k % 2 == 1 {
        match nth_root_exact(&n, k) {
            Some(root) => vec![-root],
            None => return Ok(None),
        }
    } else {
        match nth_root_exact(&n, k) {
            Some(root) if !root.is_zero() => vec![root.clone(), -root],
            _ => return Ok(None),
        }
    };
    let wf = w.to_f64();
    let mag = wf.abs().powf(1.0 / k as f64);
    let roots: Vec<f64> = if k % 2 == 1 { vec![mag.copysign(wf)] } else { vec![mag, -mag] };
    for b in bs.iter().filter(|b| !b.is_zero()) {
        for (a, b) in parameter_candidates(b, search_bound) {
            let target = w.p() * int(2);
            let psi = gen_psi(&a, &b, k as usize)?;
            let denominators = root_denominators(psi.coeffs(), &target);
            let bf = crate::rational::to_f64(&b);
            let af = crate::rational::to_f64(&a);
            for rho in &roots {
                let t_approx = (rho - bf / rho) / af;
                if !t_approx.is_finite() {
                    continue;
                }
                for q in &denominators {
                    let qf = q.to_f64().unwrap_or(f64::INFINITY);
                    let center = (t_approx * qf).round();
                    let Some(center) = BigInt::from_f64(center) else {
                        continue;
                    };
                    for delta in -1..=1 {
                        let t = Rational::new(&center + delta, q.clone());
                        if psi.eval(&t) != target {
                            continue;
                        }
                        if let Some(res) = witness_for(&a, &b, &t, k, w)? {
                            return Ok(Some(res));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Denominators allowed for a rational root of `p(t) − target`: divisors of
/// the leading coefficient once the polynomial has integer coefficients.
fn root_denominators(coeffs: &[Rational], target: &Rational) -> Vec<BigInt> {
    let mut all: Vec<Rational> = coeffs.to_vec();
    if all.is_empty() {
        return vec![BigInt::one()];
    }
    all[0] = &all[0] - target;
    let lcm = all.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let lead = (all.last().expect("nonempty") * Rational::from_integer(lcm)).to_integer().abs();
    let mut ds = divisors(&lead, DIVISOR_CAP);
    if ds.is_empty() {
        ds.push(BigInt::one());
    }
    ds
}
