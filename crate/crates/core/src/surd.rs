//! Quadratic surds `p + q·√d` with rational `p`, `q` and a fixed radicand `d ≥ 0`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// An element of ℚ(√d).
///
/// The radicand is kept as given (a Binet root over `a²x² + 4b` stays over
/// that exact `d`), except that a perfect-square `d` is folded into `p`.
/// [`Surd::canonical`] gives the squarefree-radicand form used for equality.
#[derive(Clone, Debug)]
pub struct Surd {
    p: Rational,
    q: Rational,
    d: Rational,
}

impl Surd {
    pub fn new(p: Rational, q: Rational, d: Rational) -> Result<Surd> {
        if d.is_negative() {
            return Err(Error::Domain(format!("negative radicand {d}")));
        }
        Ok(Surd::fold(p, q, d))
    }

    fn fold(p: Rational, q: Rational, d: Rational) -> Surd {
        if q.is_zero() {
            return Surd { p, q, d };
        }
        match rational::sqrt_exact(&d) {
            Some(root) => Surd { p: p + q * root, q: Rational::zero(), d },
            None => Surd { p, q, d },
        }
    }

    /// The rational `p` embedded with no irrational part.
    pub fn rational(p: Rational) -> Surd {
        Surd { p, q: Rational::zero(), d: Rational::zero() }
    }

    pub fn one() -> Surd {
        Surd::rational(Rational::one())
    }

    /// `√d`.
    pub fn sqrt(d: Rational) -> Result<Surd> {
        Surd::new(Rational::zero(), Rational::one(), d)
    }

    pub fn p(&self) -> &Rational {
        &self.p
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn d(&self) -> &Rational {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn conj(&self) -> Surd {
        Surd { p: self.p.clone(), q: -&self.q, d: self.d.clone() }
    }

    /// `p² − q²d`, the field norm `s · conj(s)`.
    pub fn norm(&self) -> Rational {
        &self.p * &self.p - &self.q * &self.q * &self.d
    }

    fn common_d(&self, other: &Surd) -> Result<Rational> {
        if self.q.is_zero() {
            Ok(other.d.clone())
        } else if other.q.is_zero() || self.d == other.d {
            Ok(self.d.clone())
        } else {
            Err(Error::IncompatibleRadicands(self.d.to_string(), other.d.to_string()))
        }
    }

    pub fn checked_add(&self, other: &Surd) -> Result<Surd> {
        let d = self.common_d(other)?;
        Ok(Surd::fold(&self.p + &other.p, &self.q + &other.q, d))
    }

    pub fn checked_sub(&self, other: &Surd) -> Result<Surd> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Surd) -> Result<Surd> {
        let d = self.common_d(other)?;
        let p = &self.p * &other.p + &self.q * &other.q * &d;
        let q = &self.p * &other.q + &self.q * &other.p;
        Ok(Surd::fold(p, q, d))
    }

    /// `s / t = s · conj(t) / norm(t)`.
    pub fn checked_div(&self, other: &Surd) -> Result<Surd> {
        let n = other.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.checked_mul(&other.conj())?.scale(&n.recip()))
    }

    pub fn neg(&self) -> Surd {
        Surd { p: -&self.p, q: -&self.q, d: self.d.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Surd {
        Surd { p: &self.p * c, q: &self.q * c, d: self.d.clone() }
    }

    pub fn add_rational(&self, c: &Rational) -> Surd {
        Surd { p: &self.p + c, q: self.q.clone(), d: self.d.clone() }
    }

    /// Integer power by repeated squaring; `s^0 = 1`.
    pub fn pow(&self, k: u32) -> Surd {
        let mut result = Surd { p: Rational::one(), q: Rational::zero(), d: self.d.clone() };
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.checked_mul(&base).expect("same radicand");
            }
            k >>= 1;
            if k > 0 {
                base = base.checked_mul(&base).expect("same radicand");
            }
        }
        result
    }

    /// Same value with a squarefree integer radicand (or `q = 0`, `d = 0` when rational).
    pub fn canonical(&self) -> Surd {
        if self.q.is_zero() || self.d.is_zero() {
            return Surd::rational(self.p.clone());
        }
        // √(n/m) = √(n·m)/m, then n·m = s²·f.
        let nm: BigInt = self.d.numer() * self.d.denom();
        let (s, f) = rational::squarefree_split(&nm);
        let q = &self.q * Rational::new(s, self.d.denom().clone());
        if f.is_one() {
            Surd::rational(&self.p + q)
        } else {
            Surd { p: self.p.clone(), q, d: Rational::from_integer(f) }
        }
    }

    /// Field equality, independent of how the radicand is written.
    pub fn value_eq(&self, other: &Surd) -> bool {
        let (a, b) = (self.canonical(), other.canonical());
        a.p == b.p && a.q == b.q && (a.q.is_zero() || a.d == b.d)
    }

    /// Exact sign of the real number `p + q√d`.
    pub fn signum(&self) -> Ordering {
        let sp = self.p.cmp(&Rational::zero());
        let sq = if self.d.is_zero() { Ordering::Equal } else { self.q.cmp(&Rational::zero()) };
        if sq == Ordering::Equal {
            return sp;
        }
        if sp == Ordering::Equal || sp == sq {
            return sq;
        }
        // opposite signs: whichever magnitude dominates
        let p2 = &self.p * &self.p;
        let q2d = &self.q * &self.q * &self.d;
        match p2.cmp(&q2d) {
            Ordering::Greater => sp,
            Ordering::Less => sq,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn abs(&self) -> Surd {
        if self.signum() == Ordering::Less {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn cmp_rational(&self, c: &Rational) -> Ordering {
        self.add_rational(&-c).signum()
    }

    pub fn to_f64(&self) -> f64 {
        rational::to_f64(&self.p) + rational::to_f64(&self.q) * rational::to_f64(&self.d).sqrt()
    }

    /// Decimal expansion rounded to nearest (ties away from zero) with `digits`
    /// fractional digits. Uses integer square roots and exact sign tests only.
    pub fn to_decimal(&self, digits: usize) -> String {
        let scale = num_traits::pow(BigInt::from(10), digits);
        let scale_q = Rational::from_integer(scale.clone());
        let scaled = self.scale(&scale_q);
        // approximate floor of the scaled value, off by at most 2
        let rat_part = scaled.p.floor().to_integer();
        let q2d = &scaled.q * &scaled.q * &scaled.d;
        let root = q2d.floor().to_integer().sqrt();
        let approx: BigInt = if scaled.q.is_negative() { rat_part - root } else { rat_part + root };
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        let mut n: BigInt = approx - 3;
        // find n with scaled - (n + 1/2) < 0; then round-half-up is that n
        loop {
            let upper = Rational::from_integer(n.clone()) + &half;
            if scaled.cmp_rational(&upper) == Ordering::Less {
                break;
            }
            n += 1;
        }
        // ties away from zero for negative values
        if scaled.signum() == Ordering::Less {
            let lower = Rational::from_integer(n.clone()) - &half;
            if scaled.cmp_rational(&lower) == Ordering::Equal {
                n -= 1;
            }
        }
        format_fixed(&n, digits)
    }

    pub fn to_json(&self) -> Value {
        json!({ "p": self.p.to_string(), "q": self.q.to_string(), "d": self.d.to_string() })
    }
}

fn format_fixed(n: &BigInt, digits: usize) -> String {
    let neg = n.is_negative();
    let s = n.abs().to_string();
    let body = if digits == 0 {
        s
    } else {
        let padded = format!("{:0>width$}", s, width = digits + 1);
        let (int_part, frac) = padded.split_at(padded.len() - digits);
        format!("{int_part}.{frac}")
    };
    if neg && body.chars().any(|c| c != '0' && c != '.') {
        format!("-{body}")
    } else {
        body
    }
}

impl PartialEq for Surd {
    fn eq(&self, other: &Surd) -> bool {
        self.value_eq(other)
    }
}

impl Eq for Surd {}

impl From<Rational> for Surd {
    fn from(p: Rational) -> Surd {
        Surd::rational(p)
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            return write!(f, "{}", self.p);
        }
        let mag = self.q.abs();
        let radical = if mag.is_one() {
            format!("sqrt({})", self.d)
        } else {
            format!("{}*sqrt({})", mag, self.d)
        };
        match (self.p.is_zero(), self.q.is_negative()) {
            (true, false) => write!(f, "{radical}"),
            (true, true) => write!(f, "-{radical}"),
            (false, false) => write!(f, "{} + {radical}", self.p),
            (false, true) => write!(f, "{} - {radical}", self.p),
        }
    }
}
