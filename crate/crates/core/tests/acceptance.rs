//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use fibluc_core::connect::{lemma1_residual, trig_identity_check, verify_grid};
use fibluc_core::denest::{denest, DenestStatus};
use fibluc_core::family::{table_parameters, FamilyParams, Kind};
use fibluc_core::golden::golden_set;
use fibluc_core::hyp2f1::{chu_vandermonde, eval_2f1_at_unity_psi, hyp};
use fibluc_core::integrals::{closed_form, orthogonality_oracle, quadrature_check, IntegralKind};
use fibluc_core::numbers::{cross_family_number, number_identity_suite, NumberFamily};
use fibluc_core::radicals::{lemma2_check, lemma3_closed_form, lemma3_eval, radical_pair, NestedRadical};
use fibluc_core::rational::{binomial_q, int, rat, Rational};
use fibluc_core::sample;
use fibluc_core::seq::{generate, invert_phi, invert_psi, phi_power_form, psi_power_form};
use fibluc_core::{Error, Poly};
use num_traits::{One, Zero};

const SEED: u64 = 0;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: usize, total: usize, extra: String) -> Outcome {
    Outcome { pass: failures == 0 && total > 0, detail: format!("{}/{} checks passed{}", total - failures, total, extra) }
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let elapsed = start.elapsed();
    o.detail = format!("{}; {:.2?}", o.detail, elapsed);
    if let Some(limit) = limit {
        if elapsed > limit {
            o.pass = false;
            o.detail = format!("{} exceeds {:?}", o.detail, limit);
        }
    }
    o
}

fn grid_params() -> Vec<(Rational, Rational)> {
    let mut g = table_parameters();
    g.extend(sample::random_pairs(SEED, 20));
    g
}

fn criterion_1() -> Outcome {
    timed(Some(Duration::from_secs(1)), || {
        let cases = golden_set().expect("golden set evaluates");
        let failed: Vec<_> = cases.iter().filter(|c| !c.pass).map(|c| c.name.clone()).collect();
        let extra = if failed.is_empty() { String::new() } else { format!("; failing: {}", failed.join(", ")) };
        outcome(failed.len(), cases.len(), extra)
    })
}

fn criterion_2() -> Outcome {
    timed(Some(Duration::from_secs(30)), || {
        let rows = table_parameters();
        let random = sample::random_pairs(SEED ^ 0xC2, 40);
        let mut param_pairs: Vec<_> = rows.iter().flat_map(|s| rows.iter().map(move |t| (s.clone(), t.clone()))).collect();
        param_pairs.extend(random.chunks(2).map(|c| (c[0].clone(), c[1].clone())));
        let mut pairs = Vec::new();
        for (sk, tk) in [(Kind::Phi, Kind::Psi), (Kind::Psi, Kind::Phi), (Kind::Phi, Kind::Phi), (Kind::Psi, Kind::Psi)] {
            for ((a, b), (r, s)) in &param_pairs {
                pairs.push((
                    FamilyParams::new(sk, a.clone(), b.clone()).unwrap(),
                    FamilyParams::new(tk, r.clone(), s.clone()).unwrap(),
                ));
            }
        }
        let reports = verify_grid(&pairs, 25).expect("connection coefficients evaluate");
        let total: usize = reports.iter().map(Vec::len).sum();
        let failures: usize = reports.iter().flatten().filter(|(_, r)| !r.equal).count();
        outcome(failures, total, format!(" over {} ordered pairs", pairs.len()))
    })
}

fn criterion_3() -> Outcome {
    timed(None, || {
        let results: Vec<bool> = grid_params()
            .par_iter()
            .flat_map_iter(|(a, b)| {
                let phi = FamilyParams::phi(a.clone(), b.clone()).unwrap();
                let psi = FamilyParams::psi(a.clone(), b.clone()).unwrap();
                (0..=40usize).flat_map(move |j| {
                    let xj = Poly::monomial(Rational::one(), j);
                    [
                        generate(&phi, j) == phi_power_form(a, b, j).unwrap(),
                        generate(&psi, j) == psi_power_form(a, b, j).unwrap(),
                        invert_phi(a, b, j).unwrap().expand() == xj,
                        invert_psi(a, b, j).unwrap().expand() == xj,
                    ]
                })
            })
            .collect();
        outcome(results.iter().filter(|ok| !**ok).count(), results.len(), String::new())
    })
}

fn criterion_4() -> Outcome {
    timed(None, || {
        let mut total = 0;
        let mut failures = 0;
        for i in 0..=30usize {
            for m in 0..=i / 2 {
                let f = hyp(m, int(m as i64 - i as i64), -int(i as i64), int(1)).unwrap();
                total += 2;
                failures += usize::from(&f * binomial_q(i, m) != Rational::one());
                failures += usize::from(f != chu_vandermonde(m, i).unwrap());
                if i >= 1 {
                    let g = hyp(m, int((i - m) as i64), int((i - 2 * m + 2) as i64), int(1)).unwrap();
                    let expected = match m {
                        0 => Rational::one(),
                        1 => rat(1, i as i64),
                        _ => Rational::zero(),
                    };
                    total += 2;
                    failures += usize::from(g != expected);
                    failures += usize::from(g != eval_2f1_at_unity_psi(m, i).unwrap());
                }
            }
        }
        let quads = sample::random_pairs(SEED ^ 0xC4, 40);
        for c in quads.chunks(2) {
            let ((a, b), (r, s)) = (&c[0], &c[1]);
            for i in 2..=25 {
                for m in 1..=(i - 1) / 2 {
                    total += 1;
                    failures += usize::from(!lemma1_residual(a, b, r, s, m, i).unwrap().is_zero());
                }
            }
        }
        outcome(failures, total, String::new())
    })
}

fn criterion_5() -> Outcome {
    timed(None, || {
        let suite = number_identity_suite(200);
        let mut total = suite.len();
        let mut failures = suite.iter().filter(|c| !c.holds()).count();
        let mut pairs = 0;
        for from in NumberFamily::ALL {
            for to in NumberFamily::ALL {
                if from == to {
                    continue;
                }
                pairs += 1;
                for i in 0..=25 {
                    total += 1;
                    failures += usize::from(!cross_family_number(i, from, to).unwrap().holds());
                }
            }
        }
        outcome(failures, total, format!(" ({pairs} ordered family pairs)"))
    })
}

fn criterion_6() -> Outcome {
    timed(None, || {
        let rows = [(int(1), int(1)), (int(2), int(1)), (int(3), int(-2))];
        let mut jobs = Vec::new();
        for kind in [IntegralKind::PhiT, IntegralKind::PsiU] {
            for (a, b) in &rows {
                for i in 0..=20usize {
                    for j in 0..=i {
                        jobs.push((kind, a.clone(), b.clone(), i, j));
                    }
                }
            }
        }
        let worst = std::sync::Mutex::new(0f64);
        let fails: usize = jobs
            .par_iter()
            .map(|(kind, a, b, i, j)| {
                let closed = closed_form(*kind, a, b, *i, *j).unwrap();
                let oracle = orthogonality_oracle(*kind, a, b, *i, *j).unwrap();
                let quad = quadrature_check(*kind, a, b, *i, *j, i + j + 2).unwrap();
                let mut w = worst.lock().unwrap();
                *w = w.max(quad.residual.abs());
                usize::from(closed != oracle) + usize::from(quad.residual.abs() >= 1e-10)
            })
            .sum();
        let worst = *worst.lock().unwrap();
        outcome(fails, 2 * jobs.len(), format!("; max quadrature residual {worst:e}"))
    })
}

fn criterion_7() -> Outcome {
    timed(None, || {
        let mut total = 0;
        let mut failures = 0;
        for (a, b, x) in sample::random_triples(SEED ^ 0xC7, 50) {
            for k in 0..=30 {
                total += 1;
                failures += usize::from(!lemma2_check(&a, &b, &x, k).unwrap().is_zero());
            }
        }
        for (a, b, x) in sample::random_triples(SEED ^ 0xC8, 50) {
            for j in 1..=20 {
                total += 1;
                failures += usize::from(lemma3_eval(&a, &b, j, &x).ok() != Some(lemma3_closed_form(&b, j, &x)));
            }
        }
        outcome(failures, total, String::new())
    })
}

fn criterion_8() -> Outcome {
    timed(None, || {
        let thetas = sample::thetas(SEED, 100);
        let residuals: Vec<f64> = (0..=10).map(|i| trig_identity_check(i, &thetas).max_residual).collect();
        let worst = residuals.iter().cloned().fold(0.0, f64::max);
        outcome(residuals.iter().filter(|r| **r >= 1e-10).count(), residuals.len(), format!("; max residual {worst:e}"))
    })
}

fn criterion_9() -> Outcome {
    timed(None, || {
        let mut xs: Vec<Rational> = Vec::new();
        for q in 1..=3i64 {
            for p in -5 * q..=5 * q {
                let x = rat(p, q);
                if !xs.contains(&x) {
                    xs.push(x);
                }
            }
        }
        let mut jobs = Vec::new();
        for (a, b) in table_parameters() {
            for x in &xs {
                for k in 1..=8u32 {
                    jobs.push((a.clone(), b.clone(), x.clone(), k));
                }
            }
        }
        let results: Vec<Option<(bool, bool)>> = jobs
            .par_iter()
            .map(|(a, b, x, k)| {
                let p = match radical_pair(a, b, x, *k) {
                    Ok(p) => p,
                    Err(Error::Domain(_)) => return None,
                    Err(e) => panic!("{e}"),
                };
                let check = |radicand: &fibluc_core::Surd, root: &fibluc_core::Surd| {
                    let r = NestedRadical::from_surd(*k, radicand).unwrap();
                    let res = denest(&r, 10).unwrap();
                    res.status == DenestStatus::Denested
                        && res.value.as_ref().is_some_and(|v| v.value_eq(root) && v.pow(*k).value_eq(radicand))
                };
                Some((check(&p.radicand_plus, &p.root_plus), check(&p.radicand_minus, &p.root_minus)))
            })
            .collect();
        let skipped = results.iter().filter(|r| r.is_none()).count();
        let checks: Vec<bool> = results.into_iter().flatten().flat_map(|(p, m)| [p, m]).collect();
        outcome(
            checks.iter().filter(|ok| !**ok).count(),
            checks.len(),
            format!(" ({} x values, {skipped} grid points with a²x²+4b < 0 skipped)", xs.len()),
        )
    })
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("worked-example golden set", criterion_1),
        ("connection exactness, i <= 25", criterion_2),
        ("power-form and inversion round-trips, j <= 40", criterion_3),
        ("hypergeometric closed forms and coefficient recurrence", criterion_4),
        ("number identities, i <= 200; cross-family, i <= 25", criterion_5),
        ("weighted integrals vs orthogonality and quadrature", criterion_6),
        ("square identity and composition identity", criterion_7),
        ("trigonometric identity", criterion_8),
        ("denest round-trip", criterion_9),
    ];
    let mut all = true;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        all &= o.pass;
        println!("criterion {}: {} - {}: {}", n + 1, if o.pass { "PASS" } else { "FAIL" }, name, o.detail);
    }
    if all {
        println!("acceptance: all 9 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: FAILURES present");
        ExitCode::FAILURE
    }
}
