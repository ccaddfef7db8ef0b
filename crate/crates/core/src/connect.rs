//! Connection formulae between the two generalized classes and within each
//! class. Every coefficient is a terminating `₂F₁` at
//! `z = b·r² / (a²·s)`, evaluated exactly.
//!
//! | source      | target      | coefficient of the target member of degree `i−2m` |
//! |-------------|-------------|----------------------------------------------------|
//! | `φ^{a,b}_i` | `ψ^{r,s}`   | `(a/r)^i c_{i−2m} (−s)^m C(i,m) ₂F₁(−m, m−i; −i)` |
//! | `ψ^{r,s}_i` | `φ^{a,b}`   | `i s^m (r/a)^{i−2m} C(i−m,m)/(i−m) ₂F₁(−m, i−m; i−2m+2)` |
//! | `φ^{a,b}_i` | `φ^{r,s}`   | `(a/r)^i (−s)^m C(i,m)(i−2m+1)/(i−m+1) ₂F₁(−m, m−i−1; −i)` |
//! | `ψ^{a,b}_i` | `ψ^{r,s}`   | `(a/r)^i c_{i−2m} (−s)^m C(i,m) ₂F₁(−m, m−i; 1−i)` |

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::expansion::{Basis, ConnExpansion, Term};
use crate::family::{FamilyParams, Kind};
use crate::hyp2f1::hyp;
use crate::poly::Poly;
use crate::rational::{binomial_q, int, pow, Rational};
use crate::seq::{c_coeff, generate, SeqCache};

/// `b·r² / (a²·s)`.
fn z_arg(a: &Rational, b: &Rational, r: &Rational, s: &Rational) -> Rational {
    b * r * r / (a * a * s)
}

fn iq(n: usize) -> Rational {
    int(n as i64)
}

/// `φ^{a,b}_i` in the `ψ^{r,s}` basis.
pub fn connect_phi_to_psi(
    a: &Rational,
    b: &Rational,
    r: &Rational,
    s: &Rational,
    i: usize,
) -> Result<ConnExpansion> {
    let source = FamilyParams::phi(a.clone(), b.clone())?;
    let target = FamilyParams::psi(r.clone(), s.clone())?;
    let z = z_arg(a, b, r, s);
    let lead = pow(&(a / r), i as u32);
    let neg_s = -s;
    let terms = (0..=i / 2)
        .map(|m| {
            let f = hyp(m, iq(m) - iq(i), -iq(i), z.clone())?;
            Ok(Term {
                m,
                coeff: &lead * c_coeff(i - 2 * m) * pow(&neg_s, m as u32) * binomial_q(i, m) * f,
            })
        })
        .collect::<Result<_>>()?;
    Ok(ConnExpansion { source: Basis::Family(source), target, degree: i, terms })
}

/// `A_{m,i}`: coefficient of `φ^{a,b}_{i−2m}` in `ψ^{r,s}_i`, zero outside `0 ≤ m ≤ ⌊i/2⌋`.
pub fn psi_phi_coefficient(
    r: &Rational,
    s: &Rational,
    a: &Rational,
    b: &Rational,
    m: i64,
    i: i64,
) -> Result<Rational> {
    if i < 0 || m < 0 || m > i / 2 {
        return Ok(Rational::zero());
    }
    let (m, i) = (m as usize, i as usize);
    if i == 0 {
        return Ok(int(2));
    }
    let z = z_arg(a, b, r, s);
    let f = hyp(m, iq(i - m), iq(i - 2 * m + 2), z)?;
    Ok(iq(i) * pow(s, m as u32) * pow(&(r / a), (i - 2 * m) as u32) * binomial_q(i - m, m) / iq(i - m) * f)
}

/// `ψ^{r,s}_i` in the `φ^{a,b}` basis.
///
/// Uses the coefficient without a `1/(i−2m+1)` factor: that factor breaks the
/// identity already at `a = b = r = s = 1`, `i = 2`.
pub fn connect_psi_to_phi(
    r: &Rational,
    s: &Rational,
    a: &Rational,
    b: &Rational,
    i: usize,
) -> Result<ConnExpansion> {
    let source = FamilyParams::psi(r.clone(), s.clone())?;
    let target = FamilyParams::phi(a.clone(), b.clone())?;
    let terms = (0..=i / 2)
        .map(|m| {
            Ok(Term { m, coeff: psi_phi_coefficient(r, s, a, b, m as i64, i as i64)? })
        })
        .collect::<Result<_>>()?;
    Ok(ConnExpansion { source: Basis::Family(source), target, degree: i, terms })
}

/// `φ^{a,b}_i` in the `φ^{r,s}` basis.
pub fn connect_phi_to_phi(
    a: &Rational,
    b: &Rational,
    r: &Rational,
    s: &Rational,
    i: usize,
) -> Result<ConnExpansion> {
    let source = FamilyParams::phi(a.clone(), b.clone())?;
    let target = FamilyParams::phi(r.clone(), s.clone())?;
    let z = z_arg(a, b, r, s);
    let lead = pow(&(a / r), i as u32);
    let neg_s = -s;
    let terms = (0..=i / 2)
        .map(|m| {
            let f = hyp(m, iq(m) - iq(i) - int(1), -iq(i), z.clone())?;
            Ok(Term {
                m,
                coeff: &lead * pow(&neg_s, m as u32) * binomial_q(i, m) * iq(i - 2 * m + 1)
                    / iq(i - m + 1)
                    * f,
            })
        })
        .collect::<Result<_>>()?;
    Ok(ConnExpansion { source: Basis::Family(source), target, degree: i, terms })
}

/// `ψ^{a,b}_i` in the `ψ^{r,s}` basis.
pub fn connect_psi_to_psi(
    a: &Rational,
    b: &Rational,
    r: &Rational,
    s: &Rational,
    i: usize,
) -> Result<ConnExpansion> {
    let source = FamilyParams::psi(a.clone(), b.clone())?;
    let target = FamilyParams::psi(r.clone(), s.clone())?;
    let z = z_arg(a, b, r, s);
    let lead = pow(&(a / r), i as u32);
    let neg_s = -s;
    if i == 0 {
        let terms = vec![Term { m: 0, coeff: Rational::one() }];
        return Ok(ConnExpansion { source: Basis::Family(source), target, degree: 0, terms });
    }
    // at i = 1 the lower parameter 1−i is 0, but only m = 0 (an empty sum) occurs
    let terms = (0..=i / 2)
        .map(|m| {
            let f = hyp(m, iq(m) - iq(i), int(1) - iq(i), z.clone())?;
            Ok(Term {
                m,
                coeff: &lead * c_coeff(i - 2 * m) * pow(&neg_s, m as u32) * binomial_q(i, m) * f,
            })
        })
        .collect::<Result<_>>()?;
    Ok(ConnExpansion { source: Basis::Family(source), target, degree: i, terms })
}

/// Dispatches on the two kinds.
pub fn connect(source: &FamilyParams, target: &FamilyParams, i: usize) -> Result<ConnExpansion> {
    let (a, b, r, s) = (&source.a, &source.b, &target.a, &target.b);
    let mut e = match (source.kind, target.kind) {
        (Kind::Phi, Kind::Psi) => connect_phi_to_psi(a, b, r, s, i),
        (Kind::Psi, Kind::Phi) => connect_psi_to_phi(a, b, r, s, i),
        (Kind::Phi, Kind::Phi) => connect_phi_to_phi(a, b, r, s, i),
        (Kind::Psi, Kind::Psi) => connect_psi_to_psi(a, b, r, s, i),
    }?;
    e.source = Basis::Family(source.clone());
    e.target = target.clone();
    Ok(e)
}

/// Outcome of substituting an expansion back into polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub equal: bool,
    /// `lhs − rhs`, coefficientwise.
    pub difference: Poly,
    pub lhs: Poly,
    pub rhs: Poly,
}

impl VerifyReport {
    pub fn to_json(&self) -> Value {
        json!({
            "equal": self.equal,
            "difference": self.difference.to_json(),
            "difference_text": self.difference.to_string(),
        })
    }
}

/// Exact check of an expansion against recurrence-generated polynomials.
pub fn verify_expansion(e: &ConnExpansion) -> VerifyReport {
    let lhs = e.source.element(e.degree);
    let rhs = e.expand();
    let difference = &lhs - &rhs;
    VerifyReport { equal: difference.is_zero(), difference, lhs, rhs }
}

/// Verifies every degree `0..=max_degree` for one ordered pair, reusing one
/// cache per side. Returns `(i, report)` for each degree.
pub fn verify_range(
    source: &FamilyParams,
    target: &FamilyParams,
    max_degree: usize,
) -> Result<Vec<(usize, VerifyReport)>> {
    let src = SeqCache::new(source.clone());
    let tgt = SeqCache::new(target.clone());
    (0..=max_degree)
        .map(|i| {
            let e = connect(source, target, i)?;
            let lhs = src.get(i);
            let rhs = e.expand_with(&tgt);
            let difference = &lhs - &rhs;
            Ok((i, VerifyReport { equal: difference.is_zero(), difference, lhs, rhs }))
        })
        .collect()
}

/// Parallel sweep over many ordered pairs; results keep the input order.
pub fn verify_grid(
    pairs: &[(FamilyParams, FamilyParams)],
    max_degree: usize,
) -> Result<Vec<Vec<(usize, VerifyReport)>>> {
    pairs
        .par_iter()
        .map(|(s, t)| verify_range(s, t, max_degree))
        .collect()
}

/// Residual of `Σ_m coeff_m ψ_{i−2m}` for the closed forms where source and
/// target share parameters: `c_{i−2m}(−b)^m` (φ→ψ) and `ψ_i = φ_i + b·φ_{i−2}` (ψ→φ).
pub fn collapse_coefficients_phi_psi(b: &Rational, i: usize) -> Vec<Rational> {
    let neg_b = -b;
    (0..=i / 2).map(|m| c_coeff(i - 2 * m) * pow(&neg_b, m as u32)).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct TrigReport {
    pub degree: usize,
    pub samples: usize,
    pub max_residual: f64,
}

/// Floating check of `2 sinθ Σ_m c_{i−2m} cos((i−2m)θ) = sin((i+1)θ)`.
pub fn trig_identity_check(i: usize, thetas: &[f64]) -> TrigReport {
    let max_residual = thetas
        .iter()
        .map(|&theta| {
            let sum: f64 = (0..=i / 2)
                .map(|m| {
                    let k = i - 2 * m;
                    let c = if k == 0 { 0.5 } else { 1.0 };
                    c * (k as f64 * theta).cos()
                })
                .sum();
            (2.0 * theta.sin() * sum - ((i + 1) as f64 * theta).sin()).abs()
        })
        .fold(0.0, f64::max);
    TrigReport { degree: i, samples: thetas.len(), max_residual }
}

/// Residual of `r·A_{m,i−1} − r·b·A_{m−1,i−1} + a·s·A_{m−1,i−2} − a·A_{m,i}`.
pub fn lemma1_residual(
    a: &Rational,
    b: &Rational,
    r: &Rational,
    s: &Rational,
    m: usize,
    i: usize,
) -> Result<Rational> {
    let coef = |m: i64, i: i64| psi_phi_coefficient(r, s, a, b, m, i);
    let (m, i) = (m as i64, i as i64);
    Ok(r * coef(m, i - 1)? - r * b * coef(m - 1, i - 1)? + a * s * coef(m - 1, i - 2)?
        - a * coef(m, i)?)
}

/// `true` when every coefficient except the one at `m = 0` vanishes and that one is `1`.
pub fn is_delta(e: &ConnExpansion) -> bool {
    e.terms
        .iter()
        .all(|t| if t.m == 0 { t.coeff.is_one() } else { t.coeff.is_zero() })
}

/// `source_i` as a polynomial, by recurrence; convenience for callers that
/// only hold the parameters.
pub fn source_poly(source: &FamilyParams, i: usize) -> Poly {
    generate(source, i)
}

/// Rejects a zero parameter before building a basis.
pub fn check_nonzero(a: &Rational, name: &'static str) -> Result<()> {
    if a.is_zero() {
        Err(Error::ZeroParameter(name))
    } else {
        Ok(())
    }
}
