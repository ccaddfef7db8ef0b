//! Exact rational helpers over `num-rational`'s `BigRational`.
//!
//! Canonical text form is `n/d` with `/1` omitted, which is exactly what the
//! `Display` impl of `BigRational` produces. JSON form is a pair of
//! decimal strings `["n", "d"]`.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

/// Arbitrary-precision signed rational, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// `n/d` as a `Rational`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p/q` or a plain integer literal.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let err = || Error::Parse(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| err())?;
            let d: BigInt = d.trim().parse().map_err(|_| err())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| err())?;
            Ok(Rational::from_integer(n))
        }
    }
}

pub fn to_json(r: &Rational) -> Value {
    Value::Array(vec![
        Value::String(r.numer().to_string()),
        Value::String(r.denom().to_string()),
    ])
}

pub fn from_json(v: &Value) -> Result<Rational> {
    let bad = || Error::Parse(v.to_string());
    let arr = v.as_array().ok_or_else(bad)?;
    if arr.len() != 2 {
        return Err(bad());
    }
    let n: BigInt = arr[0].as_str().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    let d: BigInt = arr[1].as_str().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(n, d))
}

/// `r^k` for a nonnegative exponent.
pub fn pow(r: &Rational, k: u32) -> Rational {
    num_traits::pow(r.clone(), k as usize)
}

/// `r^k` for a signed exponent; `r` must be nonzero when `k < 0`.
pub fn powi(r: &Rational, k: i64) -> Result<Rational> {
    if k >= 0 {
        Ok(pow(r, k as u32))
    } else if r.is_zero() {
        Err(Error::DivisionByZero)
    } else {
        Ok(pow(&r.recip(), (-k) as u32))
    }
}

/// `(-1)^k`.
pub fn neg_one_pow(k: usize) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Binomial coefficient C(n, k); zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for t in 0..k {
        acc *= n - t;
        acc /= t + 1;
    }
    acc
}

pub fn binomial_q(n: usize, k: usize) -> Rational {
    Rational::from_integer(binomial(n, k))
}

/// Exact square root if `r` is the square of a rational.
pub fn sqrt_exact(r: &Rational) -> Option<Rational> {
    nth_root_exact(r, 2)
}

/// Exact real `k`-th root if one exists in the rationals. For even `k` the
/// nonnegative root is returned; negative input with even `k` yields `None`.
pub fn nth_root_exact(r: &Rational, k: u32) -> Option<Rational> {
    assert!(k >= 1);
    if r.is_zero() {
        return Some(Rational::zero());
    }
    if r.is_negative() && k % 2 == 0 {
        return None;
    }
    let n = int_nth_root_exact(&r.numer().abs(), k)?;
    let d = int_nth_root_exact(r.denom(), k)?;
    let root = Rational::new(n, d);
    Some(if r.is_negative() { -root } else { root })
}

fn int_nth_root_exact(n: &BigInt, k: u32) -> Option<BigInt> {
    let root = n.nth_root(k);
    if num_traits::pow(root.clone(), k as usize) == *n {
        Some(root)
    } else {
        None
    }
}

const TRIAL_CAP: u64 = 1 << 20;

/// Splits a positive integer `n` as `s^2 * f` with `f` squarefree.
///
/// Trial division runs up to `min(cbrt(n), 2^20)`; once every prime below the
/// cube root is removed the cofactor has at most two prime factors, so a
/// perfect-square test finishes the job exactly.
pub fn squarefree_split(n: &BigInt) -> (BigInt, BigInt) {
    assert!(n.sign() == Sign::Plus, "squarefree_split needs n > 0");
    let mut rest = n.clone();
    let mut square = BigInt::one();
    let mut free = BigInt::one();
    let mut p: u64 = 2;
    loop {
        let limit = rest.cbrt().to_u64().unwrap_or(u64::MAX).min(TRIAL_CAP);
        if p > limit {
            break;
        }
        let bp = BigInt::from(p);
        let mut e = 0u32;
        while rest.is_multiple_of(&bp) {
            rest /= &bp;
            e += 1;
        }
        if e > 0 {
            square *= num_traits::pow(bp.clone(), (e / 2) as usize);
            if e % 2 == 1 {
                free *= &bp;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let r = rest.sqrt();
    if &r * &r == rest {
        square *= r;
    } else {
        free *= rest;
    }
    (square, free)
}

/// Positive divisors of `n`, found by trial division up to `min(sqrt(n), cap)`
/// together with their cofactors. Complete when `n <= cap^2`.
pub fn divisors(n: &BigInt, cap: u64) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return Vec::new();
    }
    let limit = n.sqrt().to_u64().unwrap_or(u64::MAX).min(cap);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d: u64 = 1;
    while d <= limit {
        let bd = BigInt::from(d);
        if n.is_multiple_of(&bd) {
            let co = &n / &bd;
            if co != bd {
                large.push(co);
            }
            small.push(bd);
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Huge numerators/denominators: scale through the bit lengths.
        let nb = r.numer().bits() as i64;
        let db = r.denom().bits() as i64;
        let shift = nb - db;
        let scaled = if shift > 0 {
            Rational::new(r.numer().clone(), r.denom() << (shift as usize))
        } else {
            Rational::new(r.numer() << ((-shift) as usize), r.denom().clone())
        };
        scaled.to_f64().unwrap_or(f64::NAN) * 2f64.powi(shift as i32)
    })
}

/// `max(|numerator|, denominator)`, the usual height of a rational.
pub fn height(r: &Rational) -> BigInt {
    r.numer().abs().max(r.denom().clone())
}
