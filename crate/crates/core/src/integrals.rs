//! Chebyshev-weighted integrals over `[−1, 1]` as exact multiples of `π`.
//!
//! * `∫ φ^{a,b}_i T_j / √(1−x²) dx`
//! * `∫ √(1−x²) ψ^{r,s}_i U_j dx`
//!
//! Both vanish for `i + j` odd and for `j > i`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::connect::{connect_phi_to_psi, connect_psi_to_phi};
use crate::error::{Error, Result};
use crate::family::FamilyParams;
use crate::hyp2f1::hyp;
use crate::poly::Poly;
use crate::rational::{binomial_q, int, pow, rat, Rational};
use crate::seq::{gen_phi, gen_psi};

/// `coeff · π`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiMultiple {
    pub coeff: Rational,
}

impl PiMultiple {
    pub fn new(coeff: Rational) -> PiMultiple {
        PiMultiple { coeff }
    }

    pub fn zero() -> PiMultiple {
        PiMultiple::new(Rational::zero())
    }

    pub fn to_f64(&self) -> f64 {
        crate::rational::to_f64(&self.coeff) * std::f64::consts::PI
    }
}

impl fmt::Display for PiMultiple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff.is_zero() {
            write!(f, "0")
        } else if self.coeff.is_one() {
            write!(f, "pi")
        } else {
            write!(f, "{}*pi", self.coeff)
        }
    }
}

/// Which of the two weighted integrals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntegralKind {
    /// Weight `1/√(1−x²)`, integrand `φ_i T_j`.
    PhiT,
    /// Weight `√(1−x²)`, integrand `ψ_i U_j`.
    PsiU,
}

impl fmt::Display for IntegralKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IntegralKind::PhiT => "phiT",
            IntegralKind::PsiU => "psiU",
        })
    }
}

impl FromStr for IntegralKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<IntegralKind> {
        match s.to_ascii_lowercase().as_str() {
            "phit" | "phi-t" => Ok(IntegralKind::PhiT),
            "psiu" | "psi-u" => Ok(IntegralKind::PsiU),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

fn vanishes(i: usize, j: usize) -> bool {
    j > i || (i + j) % 2 == 1
}

/// `∫₋₁¹ φ^{a,b}_i(x) T_j(x) / √(1−x²) dx`.
pub fn integral_phi_t(a: &Rational, b: &Rational, i: usize, j: usize) -> Result<PiMultiple> {
    FamilyParams::phi(a.clone(), b.clone())?;
    if vanishes(i, j) {
        return Ok(PiMultiple::zero());
    }
    let m = (i - j) / 2;
    let z = -int(4) * b / (a * a);
    let f = hyp(m, -int(((i + j) / 2) as i64), -int(i as i64), z)?;
    Ok(PiMultiple::new(pow(&(a / int(2)), i as u32) * binomial_q(i, m) * f))
}

/// `∫₋₁¹ √(1−x²) ψ^{r,s}_i(x) U_j(x) dx`.
pub fn integral_psi_u(r: &Rational, s: &Rational, i: usize, j: usize) -> Result<PiMultiple> {
    FamilyParams::psi(r.clone(), s.clone())?;
    if vanishes(i, j) {
        return Ok(PiMultiple::zero());
    }
    if i == 0 {
        // ψ_0 U_0 = 2 and the weight integrates to π/2
        return Ok(PiMultiple::new(int(1)));
    }
    let m = (i - j) / 2;
    let z = -(r * r) / (int(4) * s);
    let f = hyp(m, int(((i + j) / 2) as i64), int(j as i64 + 2), z)?;
    let coeff = int(i as i64) * pow(&(r / int(2)), j as u32) * binomial_q((i + j) / 2, m)
        * pow(s, m as u32)
        / int((i + j) as i64)
        * f;
    Ok(PiMultiple::new(coeff))
}

/// Same integral computed from the expansion in the Chebyshev basis and
/// orthogonality: `∫T_kT_j w = π` (`k = j = 0`) or `π/2`; `∫U_kU_j w = π/2`.
pub fn orthogonality_oracle(kind: IntegralKind, a: &Rational, b: &Rational, i: usize, j: usize) -> Result<PiMultiple> {
    if j > i || (i + j) % 2 == 1 {
        return Ok(PiMultiple::zero());
    }
    let m = (i - j) / 2;
    Ok(PiMultiple::new(match kind {
        IntegralKind::PhiT => {
            // ψ^{2,−1}_k = 2 T_k
            let e = connect_phi_to_psi(a, b, &int(2), &int(-1), i)?;
            let norm = if j == 0 { int(1) } else { rat(1, 2) };
            int(2) * e.coeff(m) * norm
        }
        IntegralKind::PsiU => {
            let e = connect_psi_to_phi(a, b, &int(2), &int(-1), i)?;
            e.coeff(m) * rat(1, 2)
        }
    }))
}

/// `∫₋₁¹ x^n / √(1−x²) dx / π`.
fn moment_first(n: usize) -> Rational {
    if n % 2 == 1 {
        return Rational::zero();
    }
    let k = n / 2;
    binomial_q(n, k) / pow(&int(4), k as u32)
}

/// `∫₋₁¹ x^n √(1−x²) dx / π`.
fn moment_second(n: usize) -> Rational {
    if n % 2 == 1 {
        return Rational::zero();
    }
    let k = n / 2;
    moment_first(n) / int(2 * (k as i64 + 1))
}

/// Integral of a polynomial against the weight, via exact moments.
pub fn weighted_integral(kind: IntegralKind, p: &Poly) -> PiMultiple {
    let moment = match kind {
        IntegralKind::PhiT => moment_first,
        IntegralKind::PsiU => moment_second,
    };
    PiMultiple::new(
        p.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, c)| c * moment(n))
            .sum(),
    )
}

/// The integrand `φ_i T_j` or `ψ_i U_j` as a polynomial.
pub fn integrand(kind: IntegralKind, a: &Rational, b: &Rational, i: usize, j: usize) -> Result<Poly> {
    Ok(match kind {
        IntegralKind::PhiT => {
            let t = gen_psi(&int(2), &int(-1), j)?.scale(&rat(1, 2));
            &gen_phi(a, b, i)? * &t
        }
        IntegralKind::PsiU => &gen_psi(a, b, i)? * &gen_phi(&int(2), &int(-1), j)?,
    })
}

pub fn closed_form(kind: IntegralKind, a: &Rational, b: &Rational, i: usize, j: usize) -> Result<PiMultiple> {
    match kind {
        IntegralKind::PhiT => integral_phi_t(a, b, i, j),
        IntegralKind::PsiU => integral_psi_u(a, b, i, j),
    }
}

/// Gauss–Chebyshev value minus the closed form.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadReport {
    pub exact: PiMultiple,
    pub nodes: usize,
    pub numeric: f64,
    pub residual: f64,
}

impl QuadReport {
    pub fn to_json(&self) -> Value {
        json!({
            "pi_coeff": self.exact.coeff.to_string(),
            "nodes": self.nodes,
            "numeric": self.numeric,
            "quad_residual": self.residual,
        })
    }
}

/// Runs the `n_nodes`-point Gauss–Chebyshev rule of the matching kind in
/// 256-bit fixed point and compares against the closed form.
pub fn quadrature_check(
    kind: IntegralKind,
    a: &Rational,
    b: &Rational,
    i: usize,
    j: usize,
    n_nodes: usize,
) -> Result<QuadReport> {
    if n_nodes < i + j + 1 {
        return Err(Error::OutOfRange(format!("need at least {} nodes, got {n_nodes}", i + j + 1)));
    }
    let exact = closed_form(kind, a, b, i, j)?;
    let p = integrand(kind, a, b, i, j)?;
    let pi = fixed::pi();
    let n = BigInt::from(n_nodes);
    let mut sum = BigInt::zero();
    for k in 1..=n_nodes {
        let (theta, weight) = match kind {
            IntegralKind::PhiT => (fixed::div_int(&(&pi * BigInt::from(2 * k - 1)), &(&n * 2)), fixed::div_int(&pi, &n)),
            IntegralKind::PsiU => {
                let n1 = &n + 1;
                let theta = fixed::div_int(&(&pi * BigInt::from(k)), &n1);
                let c = fixed::cos(&theta);
                let sin2 = fixed::one() - fixed::mul(&c, &c);
                (theta, fixed::mul(&fixed::div_int(&pi, &n1), &sin2))
            }
        };
        let x = fixed::cos(&theta);
        sum += fixed::mul(&weight, &fixed::eval(&p, &x));
    }
    let exact_fixed = fixed::mul(&fixed::from_rational(&exact.coeff), &pi);
    Ok(QuadReport {
        numeric: fixed::to_f64(&sum),
        residual: fixed::to_f64(&(sum - exact_fixed)),
        exact,
        nodes: n_nodes,
    })
}

/// Signed fixed-point numbers `v / 2^BITS`.
mod fixed {
    use super::*;

    const BITS: usize = 256;

    pub fn one() -> BigInt {
        BigInt::one() << BITS
    }

    pub fn mul(x: &BigInt, y: &BigInt) -> BigInt {
        (x * y) >> BITS
    }

    pub fn div_int(x: &BigInt, n: &BigInt) -> BigInt {
        x / n
    }

    pub fn from_rational(r: &Rational) -> BigInt {
        (r.numer() << BITS) / r.denom()
    }

    pub fn to_f64(x: &BigInt) -> f64 {
        crate::rational::to_f64(&Rational::new(x.clone(), one()))
    }

    /// `atan(1/n)` by its alternating series.
    fn atan_inv(n: u64) -> BigInt {
        let n = BigInt::from(n);
        let n2 = &n * &n;
        let mut power = one() / &n;
        let mut sum = BigInt::zero();
        let mut k = 0u64;
        while !power.is_zero() {
            let term = &power / BigInt::from(2 * k + 1);
            if k % 2 == 0 {
                sum += term;
            } else {
                sum -= term;
            }
            power /= &n2;
            k += 1;
        }
        sum
    }

    /// `16 atan(1/5) − 4 atan(1/239)`.
    pub fn pi() -> BigInt {
        atan_inv(5) * 16 - atan_inv(239) * 4
    }

    /// Taylor series; adequate for `|θ| ≤ π`.
    pub fn cos(theta: &BigInt) -> BigInt {
        let t2 = mul(theta, theta);
        let mut term = one();
        let mut sum = one();
        let mut k = 1u64;
        while !term.is_zero() {
            term = -mul(&term, &t2) / BigInt::from((2 * k - 1) * (2 * k));
            sum += &term;
            k += 1;
        }
        sum
    }

    pub fn eval(p: &Poly, x: &BigInt) -> BigInt {
        p.coeffs()
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| mul(&acc, x) + from_rational(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_values() {
        assert_eq!(integral_phi_t(&int(1), &int(1), 0, 0).unwrap().coeff, int(1));
        assert_eq!(integral_phi_t(&int(1), &int(1), 1, 1).unwrap().coeff, rat(1, 2));
        assert_eq!(integral_phi_t(&int(5), &int(3), 2, 1).unwrap(), PiMultiple::zero());
        assert_eq!(integral_psi_u(&int(1), &int(1), 1, 1).unwrap().coeff, rat(1, 4));
        assert_eq!(integral_psi_u(&int(1), &int(1), 2, 1).unwrap(), PiMultiple::zero());
        // ψ^{2,−1}_2 = 2T_2 = U_2 − U_0
        assert_eq!(integral_psi_u(&int(2), &int(-1), 2, 2).unwrap().coeff, rat(1, 2));
        assert_eq!(integral_psi_u(&int(3), &int(7), 0, 0).unwrap().coeff, int(1));
        assert_eq!(integral_phi_t(&int(1), &int(1), 1, 3).unwrap(), PiMultiple::zero());
    }

    #[test]
    fn closed_forms_match_both_oracles() {
        let rows = [(int(1), int(1)), (int(2), int(1)), (int(3), int(-2)), (rat(1, 2), rat(-3, 5))];
        for kind in [IntegralKind::PhiT, IntegralKind::PsiU] {
            for (a, b) in &rows {
                for i in 0..=14 {
                    for j in 0..=i + 2 {
                        let closed = closed_form(kind, a, b, i, j).unwrap();
                        assert_eq!(closed, orthogonality_oracle(kind, a, b, i, j).unwrap(), "{kind} {a} {b} {i} {j}");
                        let moments = weighted_integral(kind, &integrand(kind, a, b, i, j).unwrap());
                        assert_eq!(closed, moments, "{kind} {a} {b} {i} {j}");
                    }
                }
            }
        }
    }

    #[test]
    fn pi_digits() {
        let pi = fixed::pi();
        assert!((fixed::to_f64(&pi) - std::f64::consts::PI).abs() < 1e-15);
        let c = fixed::cos(&(pi / BigInt::from(3)));
        assert!((fixed::to_f64(&c) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn quadrature() {
        let r = quadrature_check(IntegralKind::PhiT, &int(1), &int(1), 0, 0, 2).unwrap();
        assert!(r.residual.abs() < 1e-12);
        let r = quadrature_check(IntegralKind::PhiT, &int(1), &int(1), 3, 1, 6).unwrap();
        assert!(r.residual.abs() < 1e-10);
        let r = quadrature_check(IntegralKind::PsiU, &int(2), &int(-1), 4, 2, 8).unwrap();
        assert!(r.residual.abs() < 1e-10);
        let r = quadrature_check(IntegralKind::PhiT, &int(3), &int(-2), 20, 20, 42).unwrap();
        assert!(r.residual.abs() < 1e-10, "{}", r.residual);
        assert!(quadrature_check(IntegralKind::PhiT, &int(1), &int(1), 3, 1, 3).is_err());
    }
}
