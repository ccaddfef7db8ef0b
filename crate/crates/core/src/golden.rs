//! Worked radical reductions with known closed values.

use serde_json::{json, Value};

use crate::error::Result;
use crate::radicals::{composed_even_radical, composed_odd_radical, radical_pair, ramanujan_cubic, RadicalPair};
use crate::rational::{int, nth_root_exact, parse_rational, pow, rat, Rational};
use crate::seq::gen_psi;
use crate::surd::Surd;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenCase {
    pub name: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

impl GoldenCase {
    pub fn to_json(&self) -> Value {
        json!({ "name": self.name, "expected": self.expected, "got": self.got, "pass": self.pass })
    }
}

#[derive(Clone, Copy)]
enum Side {
    Sum,
    Diff,
}

struct PairSpec {
    name: &'static str,
    abxk: (i64, i64, i64, u32),
    radicand: (Rational, Rational, i64),
    side: Side,
    value: Surd,
}

fn q(s: &str) -> Rational {
    parse_rational(s).expect("literal")
}

fn pair_case(spec: PairSpec) -> Result<GoldenCase> {
    let (a, b, x, k) = spec.abxk;
    let p: RadicalPair = radical_pair(&int(a), &int(b), &int(x), k)?;
    let (u, v, d) = spec.radicand;
    let radicand = Surd::new(u, v, int(d))?;
    let side = match spec.side {
        Side::Sum => &p.sum,
        Side::Diff => &p.diff,
    };
    let pass = p.holds() && p.radicand_plus.value_eq(&radicand) && side.value_eq(&spec.value);
    Ok(GoldenCase {
        name: spec.name.to_string(),
        expected: format!("{} -> {}", radicand, spec.value),
        got: format!("{} -> {}", p.radicand_plus.canonical(), side.canonical()),
        pass,
    })
}

/// Every worked example, each checked in exact arithmetic.
pub fn golden_set() -> Result<Vec<GoldenCase>> {
    use Side::*;
    let r = |n: i64| Surd::rational(int(n));
    let specs = vec![
        PairSpec { name: "odd k=3 L_3(2)", abxk: (1, 1, 2, 3), radicand: (int(7), int(5), 2), side: Sum, value: r(2) },
        PairSpec {
            name: "odd k=3 L_3(2) difference",
            abxk: (1, 1, 2, 3),
            radicand: (int(7), int(5), 2),
            side: Diff,
            value: Surd::new(int(0), int(2), int(2))?,
        },
        PairSpec { name: "odd k=3 Q_3(3)", abxk: (2, 1, 3, 3), radicand: (int(117), int(37), 10), side: Sum, value: r(6) },
        PairSpec {
            name: "odd k=5 f_5(4)",
            abxk: (3, -2, 4, 5),
            radicand: (int(115896), int(19876), 34),
            side: Sum,
            value: r(12),
        },
        PairSpec {
            name: "odd k=5 T_5(5)",
            abxk: (2, -1, 5, 5),
            radicand: (int(47525), int(19402), 6),
            side: Sum,
            value: r(10),
        },
        PairSpec { name: "even k=4 L_4(2)", abxk: (1, 1, 2, 4), radicand: (int(17), int(12), 2), side: Diff, value: r(2) },
        PairSpec {
            name: "even k=4 Q_4(5)",
            abxk: (2, 1, 5, 4),
            radicand: (int(5201), int(1020), 26),
            side: Diff,
            value: r(10),
        },
        PairSpec {
            name: "even k=6 f_6(7)",
            abxk: (3, -2, 7, 6),
            radicand: (rat(83448209, 2), rat(4010265, 2), 433),
            side: Sum,
            value: r(21),
        },
        PairSpec {
            name: "even k=8 T_8(7)",
            abxk: (2, -1, 7, 8),
            radicand: (int(708158977), int(408855776), 3),
            side: Sum,
            value: r(14),
        },
    ];
    let mut cases = specs.into_iter().map(pair_case).collect::<Result<Vec<_>>>()?;

    let c = composed_odd_radical(&int(3), &int(-2), 5, &rat(-1, 3))?;
    let expected = (q("-1889569/486"), q("3570463447489/236196"), rat(-1, 3));
    cases.push(GoldenCase {
        name: "composed odd j=5 f_5(-19/9)".into(),
        expected: format!("({} + sqrt({}))^(1/5) = {}", expected.0, expected.1, expected.2),
        got: format!("({} + sqrt({}))^(1/5) = {}", c.half_psi, c.inner, c.value),
        pass: c.holds() && c.t == rat(-19, 9) && (c.half_psi.clone(), c.inner.clone(), c.value.clone()) == expected,
    });

    // sixth root of y' + sqrt(y'^2 − 1) with y' = 32y³ − 6y
    let y = q("146410001/48400");
    let cubic = ramanujan_cubic(&y);
    let s = int(110 * 110);
    let half_psi3 = gen_psi(&int(1), &int(-1), 3)?.eval(&(&s + s.recip())) * rat(1, 2);
    let via_odd = composed_odd_radical(&int(1), &int(-1), 3, &s)?;
    let via_even = composed_even_radical(&int(1), &int(-1), 6, &int(110))?;
    let sixth = nth_root_exact(&via_odd.radicand, 6);
    let radicand_direct = &cubic + crate::rational::sqrt_exact(&(&cubic * &cubic - int(1))).unwrap_or_else(|| int(0));
    let pass = cubic == half_psi3
        && via_odd.holds()
        && via_even.holds()
        && via_odd.radicand == radicand_direct
        && via_even.radicand == radicand_direct
        && via_odd.radicand == pow(&int(110), 6)
        && sixth == Some(int(110))
        && via_even.value == int(110);
    cases.push(GoldenCase {
        name: "ramanujan sixth root".into(),
        expected: "110".into(),
        got: sixth.map(|v| v.to_string()).unwrap_or_else(|| "no rational root".into()),
        pass,
    });
    Ok(cases)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_golden_cases_pass() {
        let cases = golden_set().unwrap();
        assert_eq!(cases.len(), 11);
        for c in cases {
            assert!(c.pass, "{c:?}");
        }
    }
}
