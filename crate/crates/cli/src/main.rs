use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use fibluc_core::connect::{connect, verify_expansion};
use fibluc_core::denest::denest;
use fibluc_core::family::{family_lookup, FamilyParams, FamilyTag, Kind};
use fibluc_core::hyp2f1::hyp;
use fibluc_core::integrals::{closed_form, quadrature_check, IntegralKind};
use fibluc_core::numbers::{cross_family_number, first_values, number_identity_suite, NumberFamily};
use fibluc_core::radicals::{composed_even_radical, composed_odd_radical, radical_pair, NestedRadical};
use fibluc_core::rational::{int, parse_rational, Rational};
use fibluc_core::seq::{generate, invert_phi, invert_psi};
use fibluc_core::verify::{cmd_verify_all, Status, VerifyConfig};
use fibluc_core::Error;

#[derive(Parser)]
#[command(name = "fibluc", version, about = "Generalized Fibonacci and Lucas polynomials in exact arithmetic")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for sampled parameters.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Fractional digits in decimal renderings.
    #[arg(long, global = true, default_value_t = 50)]
    precision: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a class member phi_j or psi_j.
    Gen {
        #[arg(long, value_parser = parse_kind, default_value = "phi")]
        kind: Kind,
        #[arg(long, value_parser = q, allow_hyphen_values = true, default_value = "1")]
        a: Rational,
        #[arg(long, value_parser = q, allow_hyphen_values = true, default_value = "1")]
        b: Rational,
        #[arg(long)]
        deg: usize,
        /// Classical family name; overrides --kind, --a and --b.
        #[arg(long, value_parser = parse_tag)]
        family: Option<FamilyTag>,
        /// Print every degree from 0 to --deg.
        #[arg(long)]
        all: bool,
    },
    /// Evaluate the terminating 2F1(-m, a2; b1 | z).
    Hyp {
        #[arg(long)]
        m: usize,
        #[arg(long, value_parser = q, allow_hyphen_values = true)]
        a2: Rational,
        #[arg(long, value_parser = q, allow_hyphen_values = true)]
        b1: Rational,
        #[arg(long, value_parser = q, allow_hyphen_values = true)]
        z: Rational,
    },
    /// Expand a member of one class in another class.
    Connect {
        /// KIND:A,B (e.g. phi:1,1) or a family name.
        #[arg(long, value_parser = parse_family, allow_hyphen_values = true)]
        from: FamilyParams,
        #[arg(long, value_parser = parse_family, allow_hyphen_values = true)]
        to: FamilyParams,
        #[arg(long)]
        deg: usize,
        /// Expand the right-hand side and fail unless it equals the source.
        #[arg(long)]
        verify: bool,
    },
    /// Expand x^j in a class.
    Invert {
        #[arg(long, value_parser = parse_family, allow_hyphen_values = true)]
        to: FamilyParams,
        #[arg(long)]
        deg: usize,
        #[arg(long)]
        verify: bool,
    },
    /// Integer-sequence identities.
    Numbers {
        /// Run the closed-form identity suite up to --imax.
        #[arg(long)]
        suite: bool,
        #[arg(long, default_value_t = 20)]
        imax: usize,
        /// Express FROM at degree --i in the numbers of TO.
        #[arg(long, num_args = 2, value_names = ["FROM", "TO"], value_parser = parse_number_family)]
        cross: Option<Vec<NumberFamily>>,
        #[arg(long, default_value_t = 10)]
        i: usize,
        /// List the first --count values of a family.
        #[arg(long, value_parser = parse_number_family)]
        values: Option<NumberFamily>,
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// Chebyshev-weighted integral as an exact multiple of pi.
    Integral {
        #[arg(long, value_parser = parse_integral_kind)]
        which: IntegralKind,
        #[arg(long, value_parser = q, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, value_parser = q, allow_hyphen_values = true)]
        b: Rational,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        /// Cross-check with Gauss-Chebyshev quadrature on i+j+2 nodes.
        #[arg(long)]
        quad_check: bool,
    },
    /// Reduce a pair of nested radicals or a composed radical.
    Radical {
        #[arg(long, value_enum)]
        mode: RadicalMode,
        #[arg(long, value_parser = q, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, value_parser = q, allow_hyphen_values = true)]
        b: Rational,
        #[arg(long, value_parser = q, allow_hyphen_values = true)]
        x: Rational,
        #[arg(long)]
        k: u32,
    },
    /// Try to write (u + v*sqrt(d))^(1/k) as a quadratic surd.
    Denest {
        #[arg(long)]
        k: u32,
        #[arg(long, value_parser = q, allow_hyphen_values = true)]
        u: Rational,
        #[arg(long, value_parser = q, allow_hyphen_values = true)]
        v: Rational,
        #[arg(long, value_parser = q, allow_hyphen_values = true)]
        d: Rational,
        /// Height bound for b outside the classical rows.
        #[arg(long, default_value_t = 10)]
        bound: u64,
    },
    /// Run every identity suite and report.
    VerifyAll {
        #[arg(long, default_value_t = 10)]
        imax: usize,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RadicalMode {
    Odd,
    Even,
    ComposedOdd,
    ComposedEven,
}

fn q(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn parse_kind(s: &str) -> Result<Kind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_tag(s: &str) -> Result<FamilyTag, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_family(s: &str) -> Result<FamilyParams, String> {
    FamilyParams::parse(s).map_err(|e| e.to_string())
}

fn parse_number_family(s: &str) -> Result<NumberFamily, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_integral_kind(s: &str) -> Result<IntegralKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Outcome of a command: what to print and whether every check held.
struct Output {
    text: String,
    json: Value,
    ok: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let body = if cli.json { serde_json::to_string_pretty(&out.json).expect("serializable") } else { out.text };
            // a closed pipe (e.g. `| head`) is not an error
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Output, Error> {
    match &cli.command {
        Command::Gen { kind, a, b, deg, family, all } => {
            let params = match family {
                Some(tag) => family_lookup(tag),
                None => FamilyParams::new(*kind, a.clone(), b.clone())?,
            };
            gen(&params, *deg, *all)
        }
        Command::Hyp { m, a2, b1, z } => {
            let v = hyp(*m, a2.clone(), b1.clone(), z.clone())?;
            Ok(Output {
                text: v.to_string(),
                json: json!({ "m": m, "a2": a2.to_string(), "b1": b1.to_string(), "z": z.to_string(), "value": v.to_string() }),
                ok: true,
            })
        }
        Command::Connect { from, to, deg, verify } => {
            let e = connect(from, to, *deg)?;
            let report = verify_expansion(&e);
            let mut text = e.to_string();
            if *verify {
                text.push_str(&format!("\nverified: {}", report.equal));
                if !report.equal {
                    text.push_str(&format!("\ndifference: {}", report.difference));
                }
            }
            let mut j = e.to_json();
            j["verified"] = json!(report.equal);
            if *verify {
                j["difference"] = report.difference.to_json();
            }
            Ok(Output { text, json: j, ok: !*verify || report.equal })
        }
        Command::Invert { to, deg, verify } => {
            let e = match to.kind {
                Kind::Phi => invert_phi(&to.a, &to.b, *deg)?,
                Kind::Psi => invert_psi(&to.a, &to.b, *deg)?,
            };
            let report = verify_expansion(&e);
            let mut text = e.to_string();
            if *verify {
                text.push_str(&format!("\nverified: {}", report.equal));
            }
            let mut j = e.to_json();
            j["verified"] = json!(report.equal);
            Ok(Output { text, json: j, ok: !*verify || report.equal })
        }
        Command::Numbers { suite, imax, cross, i, values, count } => numbers(*suite, *imax, cross.as_deref(), *i, *values, *count),
        Command::Integral { which, a, b, i, j, quad_check } => {
            let exact = closed_form(*which, a, b, *i, *j)?;
            let mut text = format!("{exact}");
            let mut out = json!({
                "which": which.to_string(), "a": a.to_string(), "b": b.to_string(), "i": i, "j": j,
                "pi_coeff": exact.coeff.to_string(), "quad_residual": null,
            });
            let mut ok = true;
            if *quad_check {
                let r = quadrature_check(*which, a, b, *i, *j, i + j + 2)?;
                text.push_str(&format!("\nquadrature ({} nodes): {:.17e}, residual {:e}", r.nodes, r.numeric, r.residual));
                out["quad_residual"] = json!(r.residual);
                out["nodes"] = json!(r.nodes);
                ok = r.residual.abs() < 1e-10;
            }
            Ok(Output { text, json: out, ok })
        }
        Command::Radical { mode, a, b, x, k } => radical(*mode, a, b, x, *k, cli.precision),
        Command::Denest { k, u, v, d, bound } => {
            let r = NestedRadical::new(*k, u.clone(), v.clone(), d.clone())?;
            let res = denest(&r, *bound)?;
            let mut j = res.to_json();
            j["input"] = json!(r.to_string());
            let text = serde_json::to_string_pretty(&j).expect("serializable");
            Ok(Output { text, json: j, ok: true })
        }
        Command::VerifyAll { imax, inject_fault } => {
            let cfg = VerifyConfig { imax: *imax, seed: cli.seed, inject_fault: *inject_fault };
            let report = cmd_verify_all(&cfg)?;
            let s = report.summary();
            let mut text = String::new();
            for (suite, sum) in report.by_suite() {
                text.push_str(&format!(
                    "{suite:<10} pass {:>5}  fail {:>3}  skipped {:>3}\n",
                    sum.pass, sum.fail, sum.skipped
                ));
            }
            for c in report.cases.iter().filter(|c| c.status == Status::Fail) {
                text.push_str(&format!("FAIL {} {}: expected {}, got {}\n", c.suite, c.key, c.expected, c.got));
            }
            text.push_str(&format!(
                "total: {} cases, {} pass, {} fail, {} skipped (imax {}, seed {})",
                s.total(),
                s.pass,
                s.fail,
                s.skipped,
                imax,
                cli.seed
            ));
            Ok(Output { text, json: report.to_json(), ok: report.success() })
        }
    }
}

fn gen(params: &FamilyParams, deg: usize, all: bool) -> Result<Output, Error> {
    let degrees: Vec<usize> = if all { (0..=deg).collect() } else { vec![deg] };
    let name = match &params.tag {
        Some(t) => format!("{t} ({params})"),
        None => params.to_string(),
    };
    let mut text = Vec::new();
    let mut rows = Vec::new();
    for j in degrees {
        let p = generate(params, j);
        let label = match &params.tag {
            Some(t) => format!("{}_{}", t.symbol(), t.classical_index(j)),
            None => format!("{}_{j}", params.kind),
        };
        let mut row = json!({ "degree": j, "label": label, "poly": p.to_string(), "coeffs": p.to_json()["coeffs"] });
        let mut line = format!("{label}(x) = {p}");
        if let Some(t) = &params.tag {
            let scale = t.display_scale();
            if scale != int(1) {
                let classical = p.scale(&scale);
                line = format!("{label}(x) = {classical}  [class member {p}]");
                row["classical"] = json!(classical.to_string());
            }
        }
        text.push(line);
        rows.push(row);
    }
    let json = json!({ "family": name, "kind": params.kind.to_string(), "a": params.a.to_string(), "b": params.b.to_string(), "polys": rows });
    Ok(Output { text: text.join("\n"), json, ok: true })
}

fn numbers(
    suite: bool,
    imax: usize,
    cross: Option<&[NumberFamily]>,
    i: usize,
    values: Option<NumberFamily>,
    count: usize,
) -> Result<Output, Error> {
    let mut text = Vec::new();
    let mut out = json!({});
    let mut ok = true;
    if suite {
        if imax < 2 {
            return Err(Error::OutOfRange(format!("--imax must be at least 2, got {imax}")));
        }
        let cases = number_identity_suite(imax);
        let failed: Vec<_> = cases.iter().filter(|c| !c.holds()).collect();
        ok &= failed.is_empty();
        text.push(format!("identity suite, 2 <= i <= {imax}: {}/{} hold", cases.len() - failed.len(), cases.len()));
        for c in &failed {
            text.push(format!("FAIL {} at i = {}: {} != {}", c.name, c.i, c.lhs, c.rhs));
        }
        out["suite"] = json!({
            "imax": imax,
            "pass": cases.len() - failed.len(),
            "fail": failed.len(),
            "cases": cases.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        });
    }
    if let Some([from, to]) = cross {
        let c = cross_family_number(i, *from, *to)?;
        ok &= c.holds();
        text.push(c.to_string());
        out["cross"] = c.to_json();
    }
    if let Some(f) = values {
        let vs = first_values(f, count);
        text.push(format!("{f}: {}", vs.iter().map(i64::to_string).collect::<Vec<_>>().join(", ")));
        out["values"] = json!({ "family": f.to_string(), "values": vs });
    }
    if text.is_empty() {
        return Err(Error::OutOfRange("nothing to do: pass --suite, --cross FROM TO or --values FAMILY".into()));
    }
    Ok(Output { text: text.join("\n"), json: out, ok })
}

fn radical(mode: RadicalMode, a: &Rational, b: &Rational, x: &Rational, k: u32, digits: usize) -> Result<Output, Error> {
    match mode {
        RadicalMode::Odd | RadicalMode::Even => {
            let want_odd = matches!(mode, RadicalMode::Odd);
            if (k % 2 == 1) != want_odd {
                return Err(Error::OutOfRange(format!("k = {k} does not match the requested parity")));
            }
            let p = radical_pair(a, b, x, k)?;
            let show = |s: &fibluc_core::Surd| {
                let c = s.canonical();
                format!("{c} ~ {}", c.to_decimal(digits))
            };
            let text = [
                format!("a = {a}, b = {b}, x = {x}, k = {k}, d = {}", p.d),
                format!("({})^(1/{k}) = {}", p.radicand_plus.canonical(), show(&p.root_plus)),
                format!("({})^(1/{k}) = {}", p.radicand_minus.canonical(), show(&p.root_minus)),
                format!("sum = {}", show(&p.sum)),
                format!("difference = {}", show(&p.diff)),
                format!("verified: {}", p.holds()),
            ]
            .join("\n");
            Ok(Output { text, json: p.to_json(digits), ok: p.holds() })
        }
        RadicalMode::ComposedOdd | RadicalMode::ComposedEven => {
            let c = if matches!(mode, RadicalMode::ComposedOdd) {
                composed_odd_radical(a, b, k, x)?
            } else {
                composed_even_radical(a, b, k, x)?
            };
            let text = format!("t = {}\n{c}\nverified: {}", c.t, c.holds());
            Ok(Output { text, json: c.to_json(), ok: c.holds() })
        }
    }
}
