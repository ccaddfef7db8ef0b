//! Nested radicals `(ψ_k/2 ± √(ψ_k²/4 ± b^k))^{1/k}` that reduce to quadratic
//! surds, checked in exact `ℚ(√d)` arithmetic.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::family::FamilyParams;
use crate::rational::{self, int, pow, rat, Rational};
use crate::seq::{binet_discriminant, binet_roots, gen_phi, gen_psi};
use crate::surd::Surd;

/// `(a²x² + 4b)·φ_{k−1}(x)² − ψ_k(x)² − 4(−1)^{k+1}b^k`, which should vanish.
pub fn lemma2_check(a: &Rational, b: &Rational, x: &Rational, k: u32) -> Result<Rational> {
    FamilyParams::phi(a.clone(), b.clone())?;
    let phi = if k == 0 { Rational::zero() } else { gen_phi(a, b, k as usize - 1)?.eval(x) };
    let psi = gen_psi(a, b, k as usize)?.eval(x);
    let sign = if k % 2 == 1 { int(4) } else { int(-4) };
    Ok(binet_discriminant(a, b, x) * &phi * &phi - &psi * &psi - sign * pow(b, k))
}

/// A real `k`-th root of `u + v√d`, kept with a squarefree integer `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NestedRadical {
    pub k: u32,
    pub u: Rational,
    pub v: Rational,
    pub d: Rational,
}

impl NestedRadical {
    pub fn new(k: u32, u: Rational, v: Rational, d: Rational) -> Result<NestedRadical> {
        if k == 0 {
            return Err(Error::OutOfRange("root index must be positive".into()));
        }
        let s = Surd::new(u, v, d)?.canonical();
        Ok(NestedRadical { k, u: s.p().clone(), v: s.q().clone(), d: s.d().clone() })
    }

    pub fn from_surd(k: u32, s: &Surd) -> Result<NestedRadical> {
        NestedRadical::new(k, s.p().clone(), s.q().clone(), s.d().clone())
    }

    pub fn radicand(&self) -> Surd {
        Surd::new(self.u.clone(), self.v.clone(), self.d.clone()).expect("d >= 0")
    }

    pub fn to_f64(&self) -> f64 {
        let w = self.radicand().to_f64();
        let r = w.abs().powf(1.0 / self.k as f64);
        if w < 0.0 { -r } else { r }
    }
}

impl fmt::Display for NestedRadical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})^(1/{})", self.radicand(), self.k)
    }
}

/// Both radicals of one `(a, b, x, k)`, their real roots, and the sum and
/// difference the reduction formulas predict.
#[derive(Clone, Debug)]
pub struct RadicalPair {
    pub a: Rational,
    pub b: Rational,
    pub x: Rational,
    pub k: u32,
    /// `a²x² + 4b`.
    pub d: Rational,
    pub radicand_plus: Surd,
    pub radicand_minus: Surd,
    pub root_plus: Surd,
    pub root_minus: Surd,
    pub sum: Surd,
    pub diff: Surd,
    pub expected_sum: Surd,
    pub expected_diff: Surd,
}

impl RadicalPair {
    /// Sum and difference match the closed forms, and each root raised to
    /// the `k`-th power gives its radicand back.
    pub fn holds(&self) -> bool {
        self.sum.value_eq(&self.expected_sum)
            && self.diff.value_eq(&self.expected_diff)
            && self.root_plus.pow(self.k).value_eq(&self.radicand_plus)
            && self.root_minus.pow(self.k).value_eq(&self.radicand_minus)
    }

    pub fn to_json(&self, digits: usize) -> Value {
        let surd = |s: &Surd| {
            let c = s.canonical();
            json!({ "exact": c.to_string(), "decimal": c.to_decimal(digits), "surd": c.to_json() })
        };
        json!({
            "a": self.a.to_string(),
            "b": self.b.to_string(),
            "x": self.x.to_string(),
            "k": self.k,
            "radicand_plus": surd(&self.radicand_plus),
            "radicand_minus": surd(&self.radicand_minus),
            "root_plus": surd(&self.root_plus),
            "root_minus": surd(&self.root_minus),
            "sum": surd(&self.sum),
            "diff": surd(&self.diff),
            "verified": self.holds(),
        })
    }
}

fn check_domain(a: &Rational, b: &Rational, x: &Rational) -> Result<Rational> {
    FamilyParams::psi(a.clone(), b.clone())?;
    let d = binet_discriminant(a, b, x);
    if d.is_negative() {
        return Err(Error::Domain(format!("a²x² + 4b = {d} is negative")));
    }
    Ok(d)
}

/// Builds the pair for any `k ≥ 1`: radicands `ψ_k/2 ± (|φ_{k−1}|/2)√d`,
/// roots picked among the Binet roots by exact powering.
pub fn radical_pair(a: &Rational, b: &Rational, x: &Rational, k: u32) -> Result<RadicalPair> {
    if k == 0 {
        return Err(Error::OutOfRange("root index must be positive".into()));
    }
    let d = check_domain(a, b, x)?;
    let half_psi = gen_psi(a, b, k as usize)?.eval(x) * rat(1, 2);
    let half_phi = gen_phi(a, b, k as usize - 1)?.eval(x).abs() * rat(1, 2);
    let radicand_plus = Surd::new(half_psi.clone(), half_phi.clone(), d.clone())?;
    let radicand_minus = Surd::new(half_psi, -half_phi, d.clone())?;
    let (alpha, beta) = binet_roots(a, b, x)?;
    let (alpha, beta) = if k % 2 == 0 { (alpha.abs(), beta.abs()) } else { (alpha, beta) };
    let (root_plus, root_minus) = if alpha.pow(k).value_eq(&radicand_plus) {
        (alpha, beta)
    } else {
        (beta, alpha)
    };
    let sum = root_plus.checked_add(&root_minus)?;
    let diff = root_plus.checked_sub(&root_minus)?;
    let ax = Surd::rational(a * x);
    let sqrt_d = Surd::sqrt(d.clone())?;
    let (expected_sum, expected_diff) = if k % 2 == 1 {
        (ax, sqrt_d)
    } else if b.is_positive() {
        (sqrt_d, ax.abs())
    } else {
        (ax.abs(), sqrt_d)
    };
    Ok(RadicalPair {
        a: a.clone(),
        b: b.clone(),
        x: x.clone(),
        k,
        d,
        radicand_plus,
        radicand_minus,
        root_plus,
        root_minus,
        sum,
        diff,
        expected_sum,
        expected_diff,
    })
}

/// Odd `k`: the two roots add to `a·x` and differ by `√(a²x²+4b)`.
pub fn odd_radical_pair(a: &Rational, b: &Rational, x: &Rational, k: u32) -> Result<RadicalPair> {
    if k % 2 == 0 {
        return Err(Error::OutOfRange(format!("k = {k} is not odd")));
    }
    radical_pair(a, b, x, k)
}

/// Even `k`: with `b > 0` the difference is `|ax|` and the sum `√(a²x²+4b)`;
/// with `b < 0` the two swap.
pub fn even_radical_pair(a: &Rational, b: &Rational, x: &Rational, k: u32) -> Result<RadicalPair> {
    if k % 2 == 1 || k == 0 {
        return Err(Error::OutOfRange(format!("k = {k} is not a positive even integer")));
    }
    radical_pair(a, b, x, k)
}

/// `(x − b/x)/a`.
pub fn composition_point(a: &Rational, b: &Rational, x: &Rational) -> Result<Rational> {
    if x.is_zero() {
        return Err(Error::ZeroParameter("x"));
    }
    if a.is_zero() {
        return Err(Error::ZeroParameter("a"));
    }
    Ok((x - b / x) / a)
}

/// `ψ^{a,b}_j((x − b/x)/a)`, checked against `x^j + (−b/x)^j`.
pub fn lemma3_eval(a: &Rational, b: &Rational, j: u32, x: &Rational) -> Result<Rational> {
    let t = composition_point(a, b, x)?;
    let lhs = gen_psi(a, b, j as usize)?.eval(&t);
    let rhs = lemma3_closed_form(b, j, x);
    if lhs != rhs {
        return Err(Error::Domain(format!("composition identity fails: {lhs} != {rhs}")));
    }
    Ok(lhs)
}

/// `x^j − b^j/x^j` for odd `j`, `x^j + b^j/x^j` for even `j`.
pub fn lemma3_closed_form(b: &Rational, j: u32, x: &Rational) -> Rational {
    let xj = pow(x, j);
    let bj = pow(b, j) / &xj;
    if j % 2 == 1 {
        xj - bj
    } else {
        xj + bj
    }
}

/// `(ψ_j(t)/2 + √(inner))^{1/j}` at `t = (x − b/x)/a`, with its rational value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComposedRadical {
    pub a: Rational,
    pub b: Rational,
    pub j: u32,
    pub x: Rational,
    pub t: Rational,
    pub half_psi: Rational,
    /// `ψ_j²/4 + b^j` (odd `j`) or `ψ_j²/4 − b^j` (even `j`); a rational square.
    pub inner: Rational,
    pub radicand: Rational,
    pub value: Rational,
}

impl ComposedRadical {
    pub fn holds(&self) -> bool {
        rational::pow(&self.value, self.j) == self.radicand
    }

    pub fn to_json(&self) -> Value {
        json!({
            "a": self.a.to_string(),
            "b": self.b.to_string(),
            "j": self.j,
            "x": self.x.to_string(),
            "t": self.t.to_string(),
            "half_psi": self.half_psi.to_string(),
            "inner": self.inner.to_string(),
            "radicand": self.radicand.to_string(),
            "value": self.value.to_string(),
            "verified": self.holds(),
        })
    }
}

impl fmt::Display for ComposedRadical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + sqrt({}))^(1/{}) = {}", self.half_psi, self.inner, self.j, self.value)
    }
}

fn composed(a: &Rational, b: &Rational, j: u32, x: &Rational, value: Rational) -> Result<ComposedRadical> {
    let t = composition_point(a, b, x)?;
    let psi = lemma3_eval(a, b, j, x)?;
    let half_psi = psi * rat(1, 2);
    let bj = pow(b, j);
    let inner = if j % 2 == 1 { &half_psi * &half_psi + bj } else { &half_psi * &half_psi - bj };
    let root = rational::sqrt_exact(&inner)
        .ok_or_else(|| Error::Domain(format!("{inner} is not a rational square")))?;
    let radicand = &half_psi + root;
    let out = ComposedRadical { a: a.clone(), b: b.clone(), j, x: x.clone(), t, half_psi, inner, radicand, value };
    if !out.holds() {
        return Err(Error::Domain(format!("{}^{} differs from the radicand {}", out.value, j, out.radicand)));
    }
    Ok(out)
}

/// Odd `j`: the value is `x` or `−b/x` according to the sign of `b` and
/// where `x` lies relative to `±√(−b)`.
pub fn composed_odd_radical(a: &Rational, b: &Rational, j: u32, x: &Rational) -> Result<ComposedRadical> {
    if j % 2 == 0 {
        return Err(Error::OutOfRange(format!("j = {j} is not odd")));
    }
    FamilyParams::psi(a.clone(), b.clone())?;
    if x.is_zero() {
        return Err(Error::ZeroParameter("x"));
    }
    let x2 = x * x;
    let takes_x = if b.is_positive() {
        x.is_positive()
    } else if x.is_positive() {
        x2 >= -b
    } else {
        x2 <= -b
    };
    let value = if takes_x { x.clone() } else { -b / x };
    composed(a, b, j, x, value)
}

/// Even `j`: `|x|` when `x² ≥ |b|`, else `|b/x|`.
pub fn composed_even_radical(a: &Rational, b: &Rational, j: u32, x: &Rational) -> Result<ComposedRadical> {
    if j % 2 == 1 || j == 0 {
        return Err(Error::OutOfRange(format!("j = {j} is not a positive even integer")));
    }
    FamilyParams::psi(a.clone(), b.clone())?;
    if x.is_zero() {
        return Err(Error::ZeroParameter("x"));
    }
    let value = match (x * x).cmp(&b.abs()) {
        Ordering::Less => (b / x).abs(),
        _ => x.abs(),
    };
    composed(a, b, j, x, value)
}

/// `32y³ − 6y`, the cubic in the classical sixth-root radical.
pub fn ramanujan_cubic(y: &Rational) -> Rational {
    int(32) * y * y * y - int(6) * y
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_rational;
    use num_traits::One;

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn surd(p: i64, q: i64, d: i64) -> Surd {
        Surd::new(int(p), int(q), int(d)).unwrap()
    }

    #[test]
    fn square_identity_examples() {
        assert_eq!(lemma2_check(&int(3), &int(-5), &rat(2, 7), 1).unwrap(), int(0));
        assert_eq!(lemma2_check(&int(1), &int(1), &int(2), 3).unwrap(), int(0));
        for k in 0..=30 {
            assert_eq!(lemma2_check(&rat(-2, 3), &rat(5, 4), &rat(7, 5), k).unwrap(), int(0));
        }
    }

    #[test]
    fn odd_examples() {
        let p = odd_radical_pair(&int(1), &int(1), &int(2), 3).unwrap();
        assert!(p.holds());
        assert!(p.radicand_plus.value_eq(&surd(7, 5, 2)));
        assert!(p.sum.value_eq(&Surd::rational(int(2))));
        assert!(p.diff.value_eq(&surd(0, 2, 2)));
        let p = odd_radical_pair(&int(2), &int(1), &int(3), 3).unwrap();
        assert!(p.radicand_plus.value_eq(&surd(117, 37, 10)) && p.holds());
        assert_eq!(p.sum.canonical().to_string(), "6");
        let p = odd_radical_pair(&int(3), &int(-2), &int(4), 5).unwrap();
        assert!(p.radicand_plus.value_eq(&surd(115896, 19876, 34)) && p.holds());
        // b > 0 makes the second radicand negative; odd roots are real
        assert_eq!(p.radicand_minus.signum(), Ordering::Greater);
        let p = odd_radical_pair(&int(1), &int(1), &int(2), 3).unwrap();
        assert_eq!(p.radicand_minus.signum(), Ordering::Less);
    }

    #[test]
    fn unit_radicals() {
        for (a, b) in [(int(3), rat(-1, 4)), (int(5), int(2)), (rat(2, 7), rat(1, 3))] {
            let p = odd_radical_pair(&a, &b, &a.recip(), 5).unwrap();
            assert!(p.holds());
            assert!(p.sum.value_eq(&Surd::rational(Rational::one())));
        }
    }

    #[test]
    fn even_examples() {
        let p = even_radical_pair(&int(1), &int(1), &int(2), 4).unwrap();
        assert!(p.radicand_plus.value_eq(&surd(17, 12, 2)) && p.holds());
        assert!(p.diff.value_eq(&Surd::rational(int(2))));
        let p = even_radical_pair(&int(2), &int(1), &int(5), 4).unwrap();
        assert!(p.radicand_plus.value_eq(&surd(5201, 1020, 26)) && p.holds());
        let p = even_radical_pair(&int(3), &int(-2), &int(7), 6).unwrap();
        let expected = Surd::new(rat(83448209, 2), rat(4010265, 2), int(433)).unwrap();
        assert!(p.radicand_plus.value_eq(&expected) && p.holds());
        assert!(p.sum.value_eq(&Surd::rational(int(21))));
        let p = even_radical_pair(&int(2), &int(-1), &int(7), 8).unwrap();
        assert!(p.radicand_plus.value_eq(&surd(708158977, 408855776, 3)) && p.holds());
        assert!(p.sum.value_eq(&Surd::rational(int(14))));
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(odd_radical_pair(&int(1), &int(-1), &rat(1, 2), 3), Err(Error::Domain(_))));
        assert!(even_radical_pair(&int(1), &int(1), &int(2), 3).is_err());
        assert!(odd_radical_pair(&int(1), &int(1), &int(2), 4).is_err());
    }

    #[test]
    fn composition_identity_examples() {
        assert_eq!(lemma3_eval(&int(4), &int(3), 1, &int(5)).unwrap(), int(5) - rat(3, 5));
        assert_eq!(lemma3_eval(&int(1), &int(1), 3, &int(2)).unwrap(), rat(63, 8));
        assert_eq!(lemma3_eval(&int(1), &int(-1), 2, &int(3)).unwrap(), rat(82, 9));
        assert_eq!(lemma3_eval(&int(1), &int(1), 3, &int(0)), Err(Error::ZeroParameter("x")));
    }

    #[test]
    fn composed_examples() {
        let c = composed_odd_radical(&int(3), &int(-2), 5, &rat(-1, 3)).unwrap();
        assert_eq!(c.value, rat(-1, 3));
        assert_eq!(c.t, rat(-19, 9));
        assert_eq!(c.half_psi, rat(-1889569, 486));
        assert_eq!(c.inner, q("3570463447489/236196"));
        let c = composed_odd_radical(&int(2), &int(3), 3, &int(-2)).unwrap();
        assert_eq!(c.value, rat(3, 2));
        let c = composed_odd_radical(&int(2), &int(3), 7, &rat(5, 2)).unwrap();
        assert_eq!(c.value, rat(5, 2));
        let c = composed_even_radical(&int(1), &int(-1), 6, &int(110)).unwrap();
        assert_eq!(c.value, int(110));
        let y = q("146410001/48400");
        assert_eq!(ramanujan_cubic(&y), c.half_psi);
        let c = composed_even_radical(&int(1), &int(1), 4, &rat(1, 2)).unwrap();
        assert_eq!(c.value, int(2));
        // boundary x² = |b|
        let c = composed_even_radical(&int(1), &int(4), 2, &int(-2)).unwrap();
        assert_eq!(c.value, int(2));
    }

    #[test]
    fn composed_cases_always_verify() {
        let xs = ["-7/2", "-2", "-3/2", "-1", "-1/3", "1/5", "1", "4/3", "2", "9/2"];
        for (a, b) in [(int(1), int(1)), (int(3), int(-2)), (int(2), int(-1)), (rat(1, 2), rat(-9, 4))] {
            for x in xs {
                for j in 1..=9 {
                    let x = q(x);
                    let c = if j % 2 == 1 {
                        composed_odd_radical(&a, &b, j, &x).unwrap()
                    } else {
                        composed_even_radical(&a, &b, j, &x).unwrap()
                    };
                    assert!(c.holds());
                }
            }
        }
    }

    #[test]
    fn nested_radical_canonical() {
        let r = NestedRadical::new(3, int(1), int(2), int(8)).unwrap();
        assert_eq!((r.v.clone(), r.d.clone()), (int(4), int(2)));
        let r = NestedRadical::new(2, int(1), int(3), int(9)).unwrap();
        assert_eq!((r.u.clone(), r.v.clone()), (int(10), int(0)));
        assert!((NestedRadical::new(3, int(7), int(5), int(2)).unwrap().to_f64() - 2.414213562373095).abs() < 1e-12);
    }
}
