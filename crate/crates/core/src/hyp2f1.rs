//! Terminating Gauss hypergeometric sums
//!
//! ```text
//! ₂F₁(−m, a₂; b₁ | z) = Σ_{r=0}^{m} (−m)_r (a₂)_r / (b₁)_r · z^r / r!
//! ```
//!
//! evaluated exactly. Each term is built from the previous one; the ratio's
//! numerator is inspected before `b₁ + r` is divided by, so a negative
//! integer `b₁` is harmless as long as the numerator terminates first.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{binomial_q, int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyp2F1Spec {
    /// Termination order; the first numerator parameter is `−m`.
    pub m: usize,
    pub a2: Rational,
    pub b1: Rational,
    pub z: Rational,
}

impl Hyp2F1Spec {
    pub fn new(m: usize, a2: Rational, b1: Rational, z: Rational) -> Self {
        Hyp2F1Spec { m, a2, b1, z }
    }
}

pub fn eval_2f1_terminating(spec: &Hyp2F1Spec) -> Result<Rational> {
    let a1 = -int(spec.m as i64);
    let mut term = Rational::one();
    let mut sum = Rational::one();
    for r in 0..spec.m {
        let rq = int(r as i64);
        let num = (&a1 + &rq) * (&spec.a2 + &rq);
        if num.is_zero() {
            break;
        }
        let den = &spec.b1 + &rq;
        if den.is_zero() {
            return Err(Error::Pole { r });
        }
        term = term * num * &spec.z / (den * int(r as i64 + 1));
        sum += &term;
    }
    Ok(sum)
}

/// `₂F₁(−m, a₂; b₁ | z)` shorthand.
pub fn hyp(m: usize, a2: Rational, b1: Rational, z: Rational) -> Result<Rational> {
    eval_2f1_terminating(&Hyp2F1Spec::new(m, a2, b1, z))
}

/// Closed form `₂F₁(−m, m−i; −i | 1) = 1/C(i, m)` for `0 ≤ m ≤ ⌊i/2⌋`.
pub fn chu_vandermonde(m: usize, i: usize) -> Result<Rational> {
    if m > i / 2 {
        return Err(Error::OutOfRange(format!("m = {m} exceeds floor(i/2) for i = {i}")));
    }
    Ok(binomial_q(i, m).recip())
}

/// Closed form of `₂F₁(−m, i−m; i−2m+2 | 1)`: `1` at `m = 0`, `1/i` at `m = 1`, else `0`.
pub fn eval_2f1_at_unity_psi(m: usize, i: usize) -> Result<Rational> {
    if i == 0 || m > i / 2 {
        return Err(Error::OutOfRange(format!("need i >= 1 and m <= floor(i/2), got m = {m}, i = {i}")));
    }
    Ok(match m {
        0 => Rational::one(),
        1 => int(i as i64).recip(),
        _ => Rational::zero(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    /// Independent oracle: Pochhammer products computed in full, then summed.
    fn brute(m: usize, a2: &Rational, b1: &Rational, z: &Rational) -> Option<Rational> {
        let poch = |a: &Rational, r: usize| (0..r).fold(Rational::one(), |acc, k| acc * (a + int(k as i64)));
        let a1 = -int(m as i64);
        let mut sum = Rational::zero();
        for r in 0..=m {
            let num = poch(&a1, r) * poch(a2, r);
            if num.is_zero() {
                break;
            }
            let den = poch(b1, r);
            if den.is_zero() {
                return None;
            }
            let fact = (1..=r).fold(Rational::one(), |acc, k| acc * int(k as i64));
            sum += num * crate::rational::pow(z, r as u32) / (den * fact);
        }
        Some(sum)
    }

    #[test]
    fn worked_values() {
        assert_eq!(hyp(1, int(-2), int(-3), int(1)).unwrap(), rat(1, 3));
        assert_eq!(hyp(0, rat(7, 3), rat(-5, 2), int(9)).unwrap(), int(1));
        assert_eq!(hyp(4, int(0), rat(1, 2), int(3)).unwrap(), int(1));
    }

    #[test]
    fn pole_is_reported() {
        // (−3)_r never vanishes before b1 = −1 hits zero at r = 1
        assert_eq!(hyp(3, int(5), int(-1), int(1)), Err(Error::Pole { r: 1 }));
    }

    #[test]
    fn closed_forms_agree_with_sum() {
        for i in 0..=30usize {
            for m in 0..=i / 2 {
                let direct = hyp(m, int(m as i64 - i as i64), -int(i as i64), int(1)).unwrap();
                assert_eq!(direct, chu_vandermonde(m, i).unwrap(), "m={m} i={i}");
                if i >= 1 {
                    let direct = hyp(m, int((i - m) as i64), int((i - 2 * m + 2) as i64), int(1)).unwrap();
                    assert_eq!(direct, eval_2f1_at_unity_psi(m, i).unwrap(), "m={m} i={i}");
                }
            }
        }
        assert_eq!(chu_vandermonde(1, 3).unwrap(), rat(1, 3));
        assert_eq!(chu_vandermonde(0, 9).unwrap(), int(1));
        assert_eq!(chu_vandermonde(2, 5).unwrap(), rat(1, 10));
        assert!(chu_vandermonde(3, 5).is_err());
        assert_eq!(eval_2f1_at_unity_psi(0, 5).unwrap(), int(1));
        assert_eq!(eval_2f1_at_unity_psi(1, 5).unwrap(), rat(1, 5));
        assert_eq!(eval_2f1_at_unity_psi(2, 6).unwrap(), int(0));
    }

    #[test]
    fn matches_brute_force() {
        let vals = [rat(1, 2), rat(-3, 4), int(2), rat(5, 3), int(-4)];
        for m in 0..8 {
            for a2 in &vals {
                for b1 in &vals {
                    for z in &vals {
                        let spec = Hyp2F1Spec::new(m, a2.clone(), b1.clone(), z.clone());
                        assert_eq!(eval_2f1_terminating(&spec).ok(), brute(m, a2, b1, z));
                    }
                }
            }
        }
    }
}
