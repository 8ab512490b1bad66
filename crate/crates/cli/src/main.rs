//! `ssg2`: censuses, classifiers, constructions and verification suites
//! for supersingular genus-2 curves in characteristic 3.

use std::io::Write;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ssg2::census::{construct_curve_with_weil, weil_census, CensusOptions};
use ssg2::covers::{build_cover, phi_eval, phi_prime_eval, table3_classify, CoverPoint};
use ssg2::elliptic::{aut_order_rational, classify_twist, ell_count, EllPoint, EllipticCurve};
use ssg2::genus2::{
    igusa_general, invariant_i, weil_polynomial, yui_is_supersingular, Genus2Curve,
};
use ssg2::gf3::{degree_of_order, make_field, Felt, Field};
use ssg2::moduli::fiber;
use ssg2::poly::UniPoly;
use ssg2::verify::{run_suite, Suite, VerifyOptions};
use ssg2::weil::WeilQuartic;

#[derive(Parser, Debug)]
#[command(name = "ssg2", version, about = "Weil polynomials of supersingular genus-2 curves in characteristic 3")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate every supersingular curve over F_q and collect Weil polynomials.
    Census {
        #[arg(long)]
        q: u64,
        /// Allow the q = 81 shortcut census.
        #[arg(long)]
        q81_opt_in: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Twist-table row of y^2 = x^3 - b x + c, checked by counting.
    ClassifyElliptic {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        b: String,
        #[arg(long)]
        c: String,
    },
    /// The cover C_(b,c) -> E_(b,c), optionally evaluated at a point.
    Cover {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        b: String,
        #[arg(long)]
        c: String,
        /// A point `v,w` of the cover curve over F_q.
        #[arg(long)]
        eval: Option<String>,
    },
    /// The fiber of the moduli map over an invariant I.
    Moduli {
        #[arg(long)]
        q: u64,
        #[arg(long, alias = "I")]
        fiber: String,
    },
    /// A verified curve with Weil polynomial x^4 - s1 x^3 + s2 x^2 - q s1 x + q^2.
    Construct {
        #[arg(long)]
        q: u64,
        #[arg(long, allow_hyphen_values = true)]
        s1: i64,
        #[arg(long, allow_hyphen_values = true)]
        s2: i64,
    },
    /// Igusa invariants, Weil polynomial and I of `twist * y^2 = f(x)`.
    Igusa {
        #[arg(long)]
        q: u64,
        /// Coefficients, constant first, comma separated.
        #[arg(long)]
        f: String,
        #[arg(long, default_value = "1")]
        twist: String,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        q81_opt_in: bool,
        /// Perturb one table prediction to exercise the failure path.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum SuiteArg {
    Tables,
    Covers,
    Moduli,
    Psl2,
    Census,
    All,
}

/// Bad input detected after argument parsing; exits with status 2.
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    anyhow!(UsageError(msg.into()))
}

fn field(q: u64) -> Result<&'static Field> {
    let d = degree_of_order(q).map_err(|e| usage(format!("--q {q}: {e}")))?;
    make_field(d).map_err(|e| usage(format!("--q {q}: {e}")))
}

fn felt(f: &Field, flag: &str, s: &str) -> Result<Felt> {
    f.parse(s).map_err(|e| usage(format!("{flag} {s:?}: {e}")))
}

fn point_json(p: &EllPoint) -> Value {
    match p {
        EllPoint::Infinity => json!("infinity"),
        EllPoint::Affine(x, y) => json!([x.to_string(), y.to_string()]),
    }
}

fn curve_json(e: &EllipticCurve) -> Value {
    json!({"b": e.b().to_string(), "c": e.c().to_string()})
}

/// Whether the command's own checks passed, and its JSON/CSV output.
struct Outcome {
    pass: bool,
    text: String,
}

fn json_outcome(pass: bool, v: &Value) -> Result<Outcome> {
    Ok(Outcome {
        pass,
        text: serde_json::to_string_pretty(v)? + "\n",
    })
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Census {
            q,
            q81_opt_in,
            jobs,
            format,
        } => {
            field(q)?;
            if q == 81 && !q81_opt_in {
                return Err(usage("the q = 81 census needs --q81-opt-in"));
            }
            if q > 81 {
                return Err(usage(format!("--q {q}: censuses run for q in 3, 9, 27, 81")));
            }
            let rep = weil_census(
                q as i64,
                CensusOptions {
                    jobs,
                    allow_q81: q81_opt_in,
                },
            )?;
            match format {
                Format::Json => json_outcome(rep.pass(), &serde_json::to_value(&rep)?),
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    w.write_record(["s1", "s2", "q", "expected", "witness_f", "witness_twist"])?;
                    for wq in rep.observed.union(&rep.expected) {
                        let (f, t) = rep
                            .witnesses
                            .get(wq)
                            .map(|c| (c.f().to_string(), c.twist().to_string()))
                            .unwrap_or_default();
                        w.write_record([
                            wq.s1.to_string(),
                            wq.s2.to_string(),
                            wq.q.to_string(),
                            rep.expected.contains(wq).to_string(),
                            f,
                            t,
                        ])?;
                    }
                    Ok(Outcome {
                        pass: rep.pass(),
                        text: String::from_utf8(w.into_inner()?)?,
                    })
                }
            }
        }
        Command::ClassifyElliptic { q, b, c } => {
            let f = field(q)?;
            let e = EllipticCurve::new(felt(f, "--b", &b)?, felt(f, "--c", &c)?)
                .map_err(|e| usage(format!("--b must be nonzero: {e}")))?;
            let class = classify_twist(&e);
            let counted = q as i64 + 1 - ell_count(&e, f.degree())? as i64;
            let aut = aut_order_rational(&e);
            let pass = counted == class.trace && aut == class.aut;
            json_outcome(
                pass,
                &json!({
                    "curve": curve_json(&e),
                    "q": q,
                    "label": class.label,
                    "predicted_trace": class.trace,
                    "predicted_aut": class.aut,
                    "counted_trace": counted,
                    "counted_aut": aut,
                    "pass": pass,
                }),
            )
        }
        Command::Cover { q, b, c, eval } => {
            let f = field(q)?;
            let t = build_cover(felt(f, "--b", &b)?, felt(f, "--c", &c)?)
                .map_err(|e| usage(format!("(b, c) does not give a cover: {e}")))?;
            let weil = weil_polynomial(&t.curve)?;
            let mut out = json!({
                "q": q,
                "b": t.b.to_string(),
                "c": t.c.to_string(),
                "curve": serde_json::to_value(&t.curve)?,
                "target": curve_json(&t.target),
                "cotarget": curve_json(&t.cotarget),
                "weil": weil,
                "splits": ssg2::covers::splitting_check(&t)?,
            });
            if f.degree() % 2 == 0 {
                let (s, u) = table3_classify(t.b, t.c)?;
                out["classified"] = json!([s, u]);
            }
            if let Some(p) = eval {
                let parts: Vec<&str> = p.split(',').collect();
                let [v, w] = parts[..] else {
                    return Err(usage("--eval takes v,w"));
                };
                let pt = CoverPoint::Affine(felt(f, "--eval", v)?, felt(f, "--eval", w)?);
                let image = phi_eval(&t, &pt).map_err(|e| usage(format!("--eval: {e}")))?;
                let image2 = phi_prime_eval(&t, &pt)?;
                out["mapped"] = json!({"target": point_json(&image), "cotarget": point_json(&image2)});
            }
            let pass = out["splits"] == json!(true);
            json_outcome(pass, &out)
        }
        Command::Moduli { q, fiber: i } => {
            let f = field(q)?;
            let fb = fiber(felt(f, "--fiber", &i)?)?;
            json_outcome(true, &serde_json::to_value(&fb)?)
        }
        Command::Construct { q, s1, s2 } => {
            field(q)?;
            let target = WeilQuartic::new(s1, s2, q as i64)?;
            let curve = match construct_curve_with_weil(q as i64, &target) {
                Err(ssg2::Error::NotInList(m)) => return Err(usage(format!("not on the list: {m}"))),
                other => other?,
            };
            let counted = weil_polynomial(&curve)?;
            json_outcome(
                counted == target,
                &json!({
                    "target": target,
                    "polynomial": target.to_string(),
                    "curve": serde_json::to_value(&curve)?,
                    "counted": counted,
                    "pass": counted == target,
                }),
            )
        }
        Command::Igusa { q, f: poly, twist } => {
            let f = field(q)?;
            let p = UniPoly::parse(f, &poly).map_err(|e| usage(format!("--f {poly:?}: {e}")))?;
            let curve = Genus2Curve::new(felt(f, "--twist", &twist)?, p)
                .map_err(|e| usage(format!("not a genus-2 model: {e}")))?;
            let ss = yui_is_supersingular(&curve);
            let mut out = json!({
                "curve": serde_json::to_value(&curve)?,
                "igusa": igusa_general(&curve)?,
                "supersingular": ss,
                "weil": weil_polynomial(&curve)?,
            });
            if ss {
                out["invariant"] = json!(invariant_i(&curve)?.to_string());
            }
            json_outcome(true, &out)
        }
        Command::Verify {
            suite,
            jobs,
            q81_opt_in,
            inject_fault,
        } => {
            let suites: Vec<Suite> = match suite {
                SuiteArg::All => Suite::ALL.to_vec(),
                SuiteArg::Tables => vec![Suite::Tables],
                SuiteArg::Covers => vec![Suite::Covers],
                SuiteArg::Moduli => vec![Suite::Moduli],
                SuiteArg::Psl2 => vec![Suite::Psl2],
                SuiteArg::Census => vec![Suite::Census],
            };
            let opts = VerifyOptions {
                jobs,
                q81: q81_opt_in,
                inject_fault: inject_fault || cfg!(feature = "inject-fault"),
            };
            let reports: Vec<_> = suites.into_iter().map(|s| run_suite(s, &opts)).collect();
            let pass = reports.iter().all(|r| r.pass);
            json_outcome(pass, &json!({"pass": pass, "suites": reports}))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli).context("ssg2") {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.text.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(if out.pass { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.chain().any(|c| c.is::<UsageError>()) {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

