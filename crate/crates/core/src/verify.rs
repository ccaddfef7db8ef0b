//! The full identity suite behind `verify-all`, collected as data.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::connect::{connect, lemma1_residual, trig_identity_check, verify_expansion};
use crate::denest::{denest, DenestStatus};
use crate::error::{Error, Result};
use crate::family::{table_parameters, FamilyParams, Kind};
use crate::golden::golden_set;
use crate::hyp2f1::{chu_vandermonde, eval_2f1_at_unity_psi, hyp};
use crate::integrals::{closed_form, orthogonality_oracle, quadrature_check, weighted_integral, integrand, IntegralKind};
use crate::numbers::{cross_family_number, number_identity_suite, NumberFamily};
use crate::poly::Poly;
use crate::radicals::{
    composed_even_radical, composed_odd_radical, lemma2_check, lemma3_closed_form, lemma3_eval, radical_pair,
    NestedRadical,
};
use crate::rational::{binomial_q, int, rat, Rational};
use crate::sample;
use crate::seq::{binet_value, generate, invert_phi, invert_psi, phi_power_form, psi_power_form};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Case {
    pub suite: String,
    pub key: String,
    pub inputs: Value,
    pub expected: String,
    pub got: String,
    pub status: Status,
}

impl Case {
    fn new(suite: &str, key: String, inputs: Value, expected: impl ToString, got: impl ToString) -> Case {
        let (expected, got) = (expected.to_string(), got.to_string());
        let status = if expected == got { Status::Pass } else { Status::Fail };
        Case { suite: suite.into(), key, inputs, expected, got, status }
    }

    fn check(suite: &str, key: String, inputs: Value, ok: bool, detail: impl ToString) -> Case {
        let status = if ok { Status::Pass } else { Status::Fail };
        Case { suite: suite.into(), key, inputs, expected: "holds".into(), got: detail.to_string(), status }
    }

    fn skipped(suite: &str, key: String, inputs: Value, reason: impl ToString) -> Case {
        Case {
            suite: suite.into(),
            key,
            inputs,
            expected: String::new(),
            got: reason.to_string(),
            status: Status::Skipped,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "key": self.key,
            "inputs": self.inputs,
            "expected": self.expected,
            "got": self.got,
            "status": self.status.to_string(),
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn total(&self) -> usize {
        self.pass + self.fail + self.skipped
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub suite: String,
    pub imax: usize,
    pub seed: u64,
    pub cases: Vec<Case>,
}

impl Report {
    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for c in &self.cases {
            match c.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Skipped => s.skipped += 1,
            }
        }
        s
    }

    pub fn success(&self) -> bool {
        self.summary().fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| c.status == Status::Fail)
    }

    /// Per-suite `(suite, summary)` in suite order.
    pub fn by_suite(&self) -> Vec<(String, Summary)> {
        let mut out: Vec<(String, Summary)> = Vec::new();
        for c in &self.cases {
            if out.last().map(|(s, _)| s != &c.suite).unwrap_or(true) {
                out.push((c.suite.clone(), Summary::default()));
            }
            let s = &mut out.last_mut().expect("pushed").1;
            match c.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Skipped => s.skipped += 1,
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let s = self.summary();
        json!({
            "suite": self.suite,
            "imax": self.imax,
            "seed": self.seed,
            "summary": { "pass": s.pass, "fail": s.fail, "skipped": s.skipped, "total": s.total() },
            "suites": self.by_suite().iter().map(|(name, s)| json!({
                "suite": name, "pass": s.pass, "fail": s.fail, "skipped": s.skipped,
            })).collect::<Vec<_>>(),
            "cases": self.cases.iter().map(Case::to_json).collect::<Vec<_>>(),
        })
    }

    fn sort(&mut self) {
        self.cases.sort_by(|a, b| match a.suite.cmp(&b.suite) {
            Ordering::Equal => a.key.cmp(&b.key),
            o => o,
        });
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub imax: usize,
    pub seed: u64,
    /// Perturbs one connection coefficient so the driver must report a failure.
    pub inject_fault: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { imax: 10, seed: 0, inject_fault: false }
    }
}

type Suite = fn(&VerifyConfig) -> Result<Vec<Case>>;

/// Runs every suite. Failures are reported as cases, not errors.
pub fn cmd_verify_all(cfg: &VerifyConfig) -> Result<Report> {
    if cfg.imax < 2 {
        return Err(Error::OutOfRange(format!("imax must be at least 2, got {}", cfg.imax)));
    }
    let suites: [Suite; 10] = [
        suite_poly_seq,
        suite_hyp2f1,
        suite_connect,
        suite_recurrence,
        suite_numbers,
        suite_integrals,
        suite_radicals,
        suite_golden,
        suite_trig,
        suite_denest,
    ];
    let parts = suites.par_iter().map(|s| s(cfg)).collect::<Result<Vec<_>>>()?;
    let mut report = Report { suite: "verify-all".into(), imax: cfg.imax, seed: cfg.seed, cases: parts.concat() };
    report.sort();
    Ok(report)
}

fn q(r: &Rational) -> String {
    r.to_string()
}

/// Table rows plus a few seeded random pairs.
fn parameter_grid(cfg: &VerifyConfig, random: usize) -> Vec<(Rational, Rational)> {
    let mut g = table_parameters();
    g.extend(sample::random_pairs(cfg.seed, random));
    g
}

fn suite_poly_seq(cfg: &VerifyConfig) -> Result<Vec<Case>> {
    const S: &str = "poly-seq";
    let mut cases = Vec::new();
    let x = rat(3, 2);
    for (a, b) in parameter_grid(cfg, 3) {
        for j in 0..=cfg.imax {
            let inputs = json!({"a": q(&a), "b": q(&b), "j": j});
            let phi = generate(&FamilyParams::phi(a.clone(), b.clone())?, j);
            let psi = generate(&FamilyParams::psi(a.clone(), b.clone())?, j);
            let key = |what: &str| format!("{what} a={a} b={b} j={j:03}");
            cases.push(Case::new(S, key("phi-power"), inputs.clone(), &phi, phi_power_form(&a, &b, j)?));
            cases.push(Case::new(S, key("psi-power"), inputs.clone(), &psi, psi_power_form(&a, &b, j)?));
            let xj = Poly::monomial(Rational::one(), j);
            cases.push(Case::new(S, key("phi-inversion"), inputs.clone(), &xj, invert_phi(&a, &b, j)?.expand()));
            cases.push(Case::new(S, key("psi-inversion"), inputs.clone(), &xj, invert_psi(&a, &b, j)?.expand()));
            for fam in [FamilyParams::phi(a.clone(), b.clone())?, FamilyParams::psi(a.clone(), b.clone())?] {
                let poly = if fam.kind == Kind::Phi { &phi } else { &psi };
                match binet_value(&fam, j, &x) {
                    Ok(v) => cases.push(Case::new(
                        S,
                        key(&format!("{}-binet", fam.kind)),
                        inputs.clone(),
                        poly.eval(&x),
                        v.canonical(),
                    )),
                    Err(Error::Domain(e)) => {
                        cases.push(Case::skipped(S, key(&format!("{}-binet", fam.kind)), inputs.clone(), e))
                    }
                    Err(e) => return Err(e),
                }
            }
        }
    }
    Ok(cases)
}

fn suite_hyp2f1(cfg: &VerifyConfig) -> Result<Vec<Case>> {
    const S: &str = "hyp2f1";
    let mut cases = Vec::new();
    for i in 0..=cfg.imax {
        for m in 0..=i / 2 {
            let inputs = json!({"m": m, "i": i});
            let direct = hyp(m, int(m as i64 - i as i64), -int(i as i64), int(1))?;
            cases.push(Case::new(
                S,
                format!("chu-vandermonde i={i:03} m={m:03}"),
                inputs.clone(),
                Rational::one(),
                &direct * binomial_q(i, m),
            ));
            cases.push(Case::new(
                S,
                format!("chu-vandermonde-closed i={i:03} m={m:03}"),
                inputs.clone(),
                chu_vandermonde(m, i)?,
                &direct,
            ));
            if i >= 1 {
                let direct = hyp(m, int((i - m) as i64), int((i - 2 * m + 2) as i64), int(1))?;
                cases.push(Case::new(
                    S,
                    format!("unit-argument i={i:03} m={m:03}"),
                    inputs,
                    eval_2f1_at_unity_psi(m, i)?,
                    direct,
                ));
            }
        }
    }
    Ok(cases)
}

fn suite_connect(cfg: &VerifyConfig) -> Result<Vec<Case>> {
    const S: &str = "connect";
    let params = parameter_grid(cfg, 2);
    let mut jobs = Vec::new();
    for (sk, tk) in [(Kind::Phi, Kind::Psi), (Kind::Psi, Kind::Phi), (Kind::Phi, Kind::Phi), (Kind::Psi, Kind::Psi)] {
        for (a, b) in &params {
            for (r, s) in &params {
                for i in 0..=cfg.imax {
                    jobs.push((FamilyParams::new(sk, a.clone(), b.clone())?, FamilyParams::new(tk, r.clone(), s.clone())?, i));
                }
            }
        }
    }
    let fault_at = if cfg.inject_fault { Some(jobs.len() / 2) } else { None };
    jobs.par_iter()
        .enumerate()
        .map(|(n, (src, tgt, i))| {
            let mut e = connect(src, tgt, *i)?;
            if Some(n) == fault_at {
                e.terms[0].coeff += Rational::one();
            }
            let rep = verify_expansion(&e);
            Ok(Case::check(
                S,
                format!("{src} -> {tgt} i={i:03}"),
                json!({"source": src.to_string(), "target": tgt.to_string(), "i": i}),
                rep.equal,
                if rep.equal { "zero difference".to_string() } else { format!("difference {}", rep.difference) },
            ))
        })
        .collect()
}

fn suite_recurrence(cfg: &VerifyConfig) -> Result<Vec<Case>> {
    const S: &str = "recurrence";
    let mut cases = Vec::new();
    let triples = sample::random_triples(cfg.seed ^ 0x11, 4);
    let extra = sample::random_pairs(cfg.seed ^ 0x12, 4);
    for (n, ((a, b, r), (s, _))) in triples.iter().zip(&extra).enumerate() {
        for i in 2..=cfg.imax {
            for m in 1..=(i - 1) / 2 {
                let res = lemma1_residual(a, b, r, s, m, i)?;
                cases.push(Case::new(
                    S,
                    format!("sample={n} i={i:03} m={m:03}"),
                    json!({"a": q(a), "b": q(b), "r": q(r), "s": q(s), "m": m, "i": i}),
                    Rational::zero(),
                    res,
                ));
            }
        }
    }
    Ok(cases)
}

fn suite_numbers(cfg: &VerifyConfig) -> Result<Vec<Case>> {
    const S: &str = "numbers";
    let mut cases: Vec<Case> = number_identity_suite(cfg.imax)
        .into_iter()
        .map(|c| Case::new(S, format!("{} i={:03}", c.name, c.i), json!({"i": c.i}), &c.lhs, &c.rhs))
        .collect();
    for from in NumberFamily::ALL {
        for to in NumberFamily::ALL {
            for i in 0..=cfg.imax {
                let c = cross_family_number(i, from, to)?;
                cases.push(Case::new(
                    S,
                    format!("cross {from}->{to} i={i:03}"),
                    json!({"from": from.to_string(), "to": to.to_string(), "i": i}),
                    c.lhs,
                    c.rhs,
                ));
            }
        }
    }
    Ok(cases)
}

fn suite_integrals(cfg: &VerifyConfig) -> Result<Vec<Case>> {
    const S: &str = "integrals";
    let mut cases = Vec::new();
    let imax = cfg.imax.min(20);
    let rows = [(int(1), int(1)), (int(2), int(1)), (int(3), int(-2))];
    for kind in [IntegralKind::PhiT, IntegralKind::PsiU] {
        for (a, b) in &rows {
            for i in 0..=imax {
                for j in 0..=i {
                    let inputs = json!({"which": kind.to_string(), "a": q(a), "b": q(b), "i": i, "j": j});
                    let key = |what: &str| format!("{what} {kind} a={a} b={b} i={i:03} j={j:03}");
                    let closed = closed_form(kind, a, b, i, j)?;
                    cases.push(Case::new(S, key("oracle"), inputs.clone(), orthogonality_oracle(kind, a, b, i, j)?, &closed));
                    let moments = weighted_integral(kind, &integrand(kind, a, b, i, j)?);
                    cases.push(Case::new(S, key("moments"), inputs.clone(), moments, &closed));
                    let quad = quadrature_check(kind, a, b, i, j, i + j + 2)?;
                    cases.push(Case::check(
                        S,
                        key("quadrature"),
                        inputs,
                        quad.residual.abs() < 1e-10,
                        format!("residual {:e}", quad.residual),
                    ));
                }
            }
        }
    }
    Ok(cases)
}

fn suite_radicals(cfg: &VerifyConfig) -> Result<Vec<Case>> {
    const S: &str = "radicals";
    let mut cases = Vec::new();
    for (n, (a, b, x)) in sample::random_triples(cfg.seed ^ 0x21, 5).iter().enumerate() {
        for k in 0..=cfg.imax as u32 {
            let inputs = json!({"a": q(a), "b": q(b), "x": q(x), "k": k});
            cases.push(Case::new(S, format!("square sample={n} k={k:03}"), inputs.clone(), Rational::zero(), lemma2_check(a, b, x, k)?));
            if k >= 1 {
                cases.push(Case::new(
                    S,
                    format!("compose sample={n} j={k:03}"),
                    inputs.clone(),
                    lemma3_closed_form(b, k, x),
                    lemma3_eval(a, b, k, x)?,
                ));
                let c = if k % 2 == 1 { composed_odd_radical(a, b, k, x)? } else { composed_even_radical(a, b, k, x)? };
                cases.push(Case::check(S, format!("composed sample={n} j={k:03}"), inputs.clone(), c.holds(), &c));
                match radical_pair(a, b, x, k) {
                    Ok(p) => cases.push(Case::check(
                        S,
                        format!("pair sample={n} k={k:03}"),
                        inputs,
                        p.holds(),
                        format!("sum {} diff {}", p.sum.canonical(), p.diff.canonical()),
                    )),
                    Err(Error::Domain(e)) => cases.push(Case::skipped(S, format!("pair sample={n} k={k:03}"), inputs, e)),
                    Err(e) => return Err(e),
                }
            }
        }
    }
    for (a, b) in table_parameters() {
        for xn in [-5i64, -2, 1, 3] {
            let x = rat(xn, 2);
            for k in 1..=cfg.imax.min(12) as u32 {
                let key = format!("table-pair a={a} b={b} x={x} k={k:03}");
                let inputs = json!({"a": q(&a), "b": q(&b), "x": q(&x), "k": k});
                match radical_pair(&a, &b, &x, k) {
                    Ok(p) => cases.push(Case::check(S, key, inputs, p.holds(), format!("sum {} diff {}", p.sum.canonical(), p.diff.canonical()))),
                    Err(Error::Domain(e)) => cases.push(Case::skipped(S, key, inputs, e)),
                    Err(e) => return Err(e),
                }
            }
        }
    }
    Ok(cases)
}

fn suite_golden(_cfg: &VerifyConfig) -> Result<Vec<Case>> {
    Ok(golden_set()?
        .into_iter()
        .map(|g| {
            let status = if g.pass { Status::Pass } else { Status::Fail };
            Case { suite: "examples".into(), key: g.name.clone(), inputs: json!({}), expected: g.expected, got: g.got, status }
        })
        .collect())
}

fn suite_trig(cfg: &VerifyConfig) -> Result<Vec<Case>> {
    let thetas = sample::thetas(cfg.seed ^ 0x31, 100);
    Ok((0..=cfg.imax.min(10))
        .map(|i| {
            let r = trig_identity_check(i, &thetas);
            Case::check(
                "trig",
                format!("i={i:03}"),
                json!({"i": i, "samples": thetas.len()}),
                r.max_residual < 1e-10,
                format!("max residual {:e}", r.max_residual),
            )
        })
        .collect())
}

fn suite_denest(cfg: &VerifyConfig) -> Result<Vec<Case>> {
    const S: &str = "denest";
    let mut cases = Vec::new();
    for (a, b) in table_parameters() {
        for x in [rat(-3, 2), int(1), rat(5, 3), int(4)] {
            for k in 1..=cfg.imax.min(6) as u32 {
                let key = format!("a={a} b={b} x={x} k={k:03}");
                let inputs = json!({"a": q(&a), "b": q(&b), "x": q(&x), "k": k});
                let p = match radical_pair(&a, &b, &x, k) {
                    Ok(p) => p,
                    Err(Error::Domain(e)) => {
                        cases.push(Case::skipped(S, key, inputs, e));
                        continue;
                    }
                    Err(e) => return Err(e),
                };
                for (branch, radicand, root) in [("plus", &p.radicand_plus, &p.root_plus), ("minus", &p.radicand_minus, &p.root_minus)] {
                    let res = denest(&NestedRadical::from_surd(k, radicand)?, 10)?;
                    let ok = res.status == DenestStatus::Denested
                        && res.value.as_ref().map(|v| v.value_eq(root)).unwrap_or(false);
                    cases.push(Case::check(
                        S,
                        format!("{key} {branch}"),
                        inputs.clone(),
                        ok,
                        res.value.map(|v| v.canonical().to_string()).unwrap_or_else(|| res.status.to_string()),
                    ));
                }
            }
        }
    }
    Ok(cases)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes_and_is_deterministic() {
        let cfg = VerifyConfig { imax: 4, seed: 3, inject_fault: false };
        let a = cmd_verify_all(&cfg).unwrap();
        let failures: Vec<_> = a.failures().collect();
        assert!(failures.is_empty(), "{failures:?}");
        let b = cmd_verify_all(&cfg).unwrap();
        assert_eq!(a.to_json().to_string(), b.to_json().to_string());
        assert_eq!(a.summary().total(), a.cases.len());
    }

    #[test]
    fn fault_is_reported() {
        let cfg = VerifyConfig { imax: 2, seed: 0, inject_fault: true };
        let r = cmd_verify_all(&cfg).unwrap();
        assert_eq!(r.summary().fail, 1);
        assert_eq!(r.failures().next().unwrap().suite, "connect");
    }

    #[test]
    fn imax_below_two_is_rejected() {
        assert!(cmd_verify_all(&VerifyConfig { imax: 1, ..Default::default() }).is_err());
    }
}
