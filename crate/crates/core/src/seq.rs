//! Construction of `φ^{a,b}_j` and `ψ^{r,s}_j`: recurrence, power form,
//! inversion of the power form, and Binet roots.
//!
//! ```text
//! φ_j = a·x·φ_{j−1} + b·φ_{j−2},   φ_0 = 1, φ_1 = a·x
//! ψ_j = r·x·ψ_{j−1} + s·ψ_{j−2},   ψ_0 = 2, ψ_1 = r·x
//! ```

use std::sync::RwLock;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::expansion::{Basis, ConnExpansion, Term};
use crate::family::{FamilyParams, Kind};
use crate::poly::Poly;
use crate::rational::{binomial_q, int, pow, rat, Rational};
use crate::surd::Surd;

/// `c_0 = 1/2`, `c_j = 1` for `j ≥ 1`. Compensates for `ψ_0 = 2` in every
/// expansion over a `ψ` basis.
pub fn c_coeff(j: usize) -> Rational {
    if j == 0 {
        rat(1, 2)
    } else {
        Rational::one()
    }
}

fn check_params(a: &Rational, b: &Rational) -> Result<()> {
    if a.is_zero() {
        return Err(Error::ZeroParameter("a"));
    }
    if b.is_zero() {
        return Err(Error::ZeroParameter("b"));
    }
    Ok(())
}

fn seeds(kind: Kind, a: &Rational) -> (Poly, Poly) {
    let first = Poly::monomial(a.clone(), 1);
    match kind {
        Kind::Phi => (Poly::constant(int(1)), first),
        Kind::Psi => (Poly::constant(int(2)), first),
    }
}

fn step(a: &Rational, b: &Rational, prev: &Poly, prev2: &Poly) -> Poly {
    // a·x·prev + b·prev2
    let mut shifted = vec![Rational::zero()];
    shifted.extend(prev.coeffs().iter().map(|c| c * a));
    &Poly::new(shifted) + &prev2.scale(b)
}

/// All members `0..=j` of the class, by recurrence.
pub fn generate_upto(params: &FamilyParams, j: usize) -> Vec<Poly> {
    let (p0, p1) = seeds(params.kind, &params.a);
    let mut out = vec![p0, p1];
    while out.len() <= j {
        let n = out.len();
        let next = step(&params.a, &params.b, &out[n - 1], &out[n - 2]);
        out.push(next);
    }
    out.truncate(j + 1);
    out
}

pub fn generate(params: &FamilyParams, j: usize) -> Poly {
    generate_upto(params, j).pop().expect("nonempty")
}

/// `φ^{a,b}_j` by recurrence.
pub fn gen_phi(a: &Rational, b: &Rational, j: usize) -> Result<Poly> {
    Ok(generate(&FamilyParams::phi(a.clone(), b.clone())?, j))
}

/// `ψ^{r,s}_j` by recurrence.
pub fn gen_psi(r: &Rational, s: &Rational, j: usize) -> Result<Poly> {
    Ok(generate(&FamilyParams::psi(r.clone(), s.clone())?, j))
}

/// `φ^{a,b}_j = Σ_{m ≤ j/2} C(j−m, m) b^m a^{j−2m} x^{j−2m}`.
pub fn phi_power_form(a: &Rational, b: &Rational, j: usize) -> Result<Poly> {
    check_params(a, b)?;
    let mut coeffs = vec![Rational::zero(); j + 1];
    for m in 0..=j / 2 {
        coeffs[j - 2 * m] = binomial_q(j - m, m) * pow(b, m as u32) * pow(a, (j - 2 * m) as u32);
    }
    Ok(Poly::new(coeffs))
}

/// `ψ^{r,s}_j = j · Σ_{m ≤ j/2} s^m r^{j−2m} C(j−m, m)/(j−m) · x^{j−2m}` for `j ≥ 1`, and `2` at `j = 0`.
pub fn psi_power_form(r: &Rational, s: &Rational, j: usize) -> Result<Poly> {
    check_params(r, s)?;
    if j == 0 {
        return Ok(Poly::constant(int(2)));
    }
    let jq = int(j as i64);
    let mut coeffs = vec![Rational::zero(); j + 1];
    for m in 0..=j / 2 {
        coeffs[j - 2 * m] = &jq * pow(s, m as u32) * pow(r, (j - 2 * m) as u32) * binomial_q(j - m, m)
            / int((j - m) as i64);
    }
    Ok(Poly::new(coeffs))
}

/// `x^j = a^{−j} Σ_i (−b)^i C(j,i) (j−2i+1)/(j−i+1) · φ^{a,b}_{j−2i}`.
pub fn invert_phi(a: &Rational, b: &Rational, j: usize) -> Result<ConnExpansion> {
    let target = FamilyParams::phi(a.clone(), b.clone())?;
    let lead = pow(&a.recip(), j as u32);
    let neg_b = -b;
    let terms = (0..=j / 2)
        .map(|i| Term {
            m: i,
            coeff: &lead * pow(&neg_b, i as u32) * binomial_q(j, i) * int((j - 2 * i + 1) as i64)
                / int((j - i + 1) as i64),
        })
        .collect();
    Ok(ConnExpansion { source: Basis::Monomial, target, degree: j, terms })
}

/// `x^j = r^{−j} Σ_i (−s)^i c_{j−2i} C(j,i) · ψ^{r,s}_{j−2i}`.
pub fn invert_psi(r: &Rational, s: &Rational, j: usize) -> Result<ConnExpansion> {
    let target = FamilyParams::psi(r.clone(), s.clone())?;
    let lead = pow(&r.recip(), j as u32);
    let neg_s = -s;
    let terms = (0..=j / 2)
        .map(|i| Term {
            m: i,
            coeff: &lead * pow(&neg_s, i as u32) * c_coeff(j - 2 * i) * binomial_q(j, i),
        })
        .collect();
    Ok(ConnExpansion { source: Basis::Monomial, target, degree: j, terms })
}

/// `a²x² + 4b`, the discriminant of `z² − a·x·z − b`.
pub fn binet_discriminant(a: &Rational, b: &Rational, x: &Rational) -> Rational {
    a * a * x * x + int(4) * b
}

/// `α = (ax + √d)/2`, `β = (ax − √d)/2` over `d = a²x² + 4b`.
pub fn binet_alpha_beta(params: &FamilyParams, x: &Rational) -> Result<(Surd, Surd)> {
    binet_roots(&params.a, &params.b, x)
}

pub fn binet_roots(a: &Rational, b: &Rational, x: &Rational) -> Result<(Surd, Surd)> {
    let d = binet_discriminant(a, b, x);
    if d < Rational::zero() {
        return Err(Error::Domain(format!("a²x² + 4b = {d} < 0")));
    }
    let half = rat(1, 2);
    // built separately: a square d folds into p, after which conj() is the identity
    let alpha = Surd::new(a * x * &half, half.clone(), d.clone())?;
    let beta = Surd::new(a * x * &half, -half, d)?;
    Ok((alpha, beta))
}

/// Memoized members of one class. Readers share the lock; extension takes it
/// exclusively and only appends.
#[derive(Debug)]
pub struct SeqCache {
    params: FamilyParams,
    polys: RwLock<Vec<Poly>>,
}

impl SeqCache {
    pub fn new(params: FamilyParams) -> SeqCache {
        let (p0, p1) = seeds(params.kind, &params.a);
        SeqCache { params, polys: RwLock::new(vec![p0, p1]) }
    }

    pub fn params(&self) -> &FamilyParams {
        &self.params
    }

    pub fn get(&self, j: usize) -> Poly {
        {
            let polys = self.polys.read().expect("cache lock poisoned");
            if let Some(p) = polys.get(j) {
                return p.clone();
            }
        }
        let mut polys = self.polys.write().expect("cache lock poisoned");
        while polys.len() <= j {
            let n = polys.len();
            let next = step(&self.params.a, &self.params.b, &polys[n - 1], &polys[n - 2]);
            polys.push(next);
        }
        polys[j].clone()
    }

    pub fn len(&self) -> usize {
        self.polys.read().expect("cache lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Value of the class member at an exact point via its Binet roots:
/// `(α^{j+1} − β^{j+1})/(α − β)` for `φ`, `α^j + β^j` for `ψ`.
pub fn binet_value(params: &FamilyParams, j: usize, x: &Rational) -> Result<Surd> {
    let (alpha, beta) = binet_alpha_beta(params, x)?;
    match params.kind {
        Kind::Psi => alpha.pow(j as u32).checked_add(&beta.pow(j as u32)),
        Kind::Phi => {
            let num = alpha.pow(j as u32 + 1).checked_sub(&beta.pow(j as u32 + 1))?;
            let den = alpha.checked_sub(&beta)?;
            if den.is_zero() {
                // double root: φ_j = (j+1)·α^j
                return Ok(alpha.pow(j as u32).scale(&int(j as i64 + 1)));
            }
            num.checked_div(&den)
        }
    }
}
