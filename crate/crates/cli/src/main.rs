mod check;
mod numeric;

use std::fmt;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use boxq_core::drinfeld::{chevalley_of_box, drinfeld_P, drinfeld_Q, partner};
use boxq_core::field::{parse_ratfunc, RatFunc, Rational};
use boxq_core::modules::{
    analyze_box, box_of_chevalley, evaluation_module, reconstruct_uq, tensor, tet_from_equitable, weight_decomposition,
    Coords,
};
use boxq_core::presentations::{
    chevalley_to_equitable, equitable_to_chevalley, pullback_eta, pullback_psi, rho_twist, scale_twist,
    verify_relations, AlgebraId, Representation,
};
use boxq_core::suite::run_suite;
use boxq_core::tdpair::{analyze_tdpair, box_pair, td_drinfeld, Order};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::check::Theorem;
use crate::numeric::{certify_at, partner_at, poly_at, show};

/// Exact constructions and checks for modules of the q-deformed box
/// algebra, the quantum loop algebra of sl2 and the q-tetrahedron algebra.
///
/// Files hold representations as JSON; `-` reads stdin or writes stdout.
#[derive(Parser)]
#[command(name = "boxq", version)]
struct Cli {
    /// Also evaluate results at this rational q (e.g. 3/2) and check that
    /// the numeric values agree with the exact ones.
    #[arg(long, global = true, value_name = "P/Q")]
    q0: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the evaluation module V(1,a).
    EvalModule {
        /// Evaluation parameter, e.g. "q^3" or "2/(q+1)".
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, value_enum, default_value = "chevalley")]
        coords: Target,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
    /// Re-express a module through another algebra's generators.
    Convert {
        input: PathBuf,
        #[arg(long, value_enum)]
        to: Target,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
    /// Tensor two Chevalley-coordinate modules.
    Tensor {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
    /// Report the eigenspace structure of a module.
    Analyze {
        input: PathBuf,
        #[arg(long = "as", value_enum, default_value = "box")]
        view: View,
        /// Type scalar hint for box analysis when it is not 1.
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<String>,
        /// For `--as td`: analyze the pair (x_i, x_{i+2}).
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..4))]
        pair: u8,
    },
    /// Print the Drinfel'd polynomials P and Q.
    Drinfeld { input: PathBuf },
    /// Apply an automorphism twist.
    Twist {
        input: PathBuf,
        /// rho, rho2, rho3 or scale:ALPHA.
        #[arg(long)]
        auto: Twist,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
    /// Check a structural theorem on a module; exits 1 when it fails.
    CheckTheorem {
        #[arg(value_enum)]
        which: Theorem,
        input: PathBuf,
    },
    /// Run the built-in verification battery.
    Suite {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum View {
    /// □_q eigenspace decompositions and flags
    Box,
    /// U_q(L(sl2)) weight spaces
    Uq,
    /// tridiagonal pair (x_i, x_{i+2})
    Td,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Target {
    /// uq_loop, Chevalley generators
    Chevalley,
    /// uq_loop_equitable
    Equitable,
    /// box_q
    Box,
    /// tet_q
    Tet,
}

fn convert(rep: &Representation, to: Target) -> Result<Representation> {
    match to {
        Target::Chevalley => to_chevalley(rep),
        Target::Equitable => to_equitable(rep),
        Target::Box => to_box(rep),
        Target::Tet if rep.algebra() == AlgebraId::TetQ => Ok(rep.clone()),
        Target::Tet => Ok(tet_from_equitable(&to_equitable(rep)?)?),
    }
}

#[derive(Debug, Clone)]
enum Twist {
    Rho(u8),
    Scale(RatFunc),
}

impl FromStr for Twist {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "rho" => Ok(Twist::Rho(1)),
            "rho2" => Ok(Twist::Rho(2)),
            "rho3" => Ok(Twist::Rho(3)),
            _ => match s.strip_prefix("scale:") {
                Some(alpha) => parse_ratfunc(alpha).map(Twist::Scale).map_err(|e| e.to_string()),
                None => Err(format!("unknown twist `{s}` (expected rho, rho2, rho3 or scale:ALPHA)")),
            },
        }
    }
}

/// Bad input on the command line or in a file; exit code 2.
#[derive(Debug)]
struct Usage(String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

pub(crate) fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

fn literal(s: &str) -> Result<RatFunc> {
    parse_ratfunc(s).map_err(|e| usage(e.to_string()))
}

fn is_stdio(p: &std::path::Path) -> bool {
    p.as_os_str() == "-"
}

fn read_rep(path: &std::path::Path) -> Result<Representation> {
    let mut text = String::new();
    if is_stdio(path) {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| usage(format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    }
    serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// Compact JSON with sorted keys; `Value` objects are ordered maps.
fn canonical(v: &Value) -> String {
    let mut s = v.to_string();
    s.push('\n');
    s
}

fn write_json(path: &std::path::Path, v: &Value) -> Result<()> {
    let text = canonical(v);
    if is_stdio(path) {
        std::io::stdout().write_all(text.as_bytes())?;
    } else {
        std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn write_rep(path: &std::path::Path, rep: &Representation, q0: Option<&Rational>) -> Result<()> {
    if let Some(q0) = q0 {
        certify_at(rep, q0)?;
    }
    write_json(path, &serde_json::to_value(rep)?)
}

pub(crate) fn to_box(rep: &Representation) -> Result<Representation> {
    Ok(match rep.algebra() {
        AlgebraId::BoxQ => rep.clone(),
        AlgebraId::UqLoop => box_of_chevalley(rep)?,
        AlgebraId::UqLoopEquitable => pullback_psi(rep)?,
        AlgebraId::TetQ => pullback_psi(&pullback_eta(rep)?)?,
        AlgebraId::UqPlus => bail!("a uq_plus module carries no box_q structure"),
    })
}

pub(crate) fn to_chevalley(rep: &Representation) -> Result<Representation> {
    Ok(match rep.algebra() {
        AlgebraId::UqLoop => rep.clone(),
        AlgebraId::UqLoopEquitable => equitable_to_chevalley(rep)?,
        AlgebraId::BoxQ => chevalley_of_box(rep)?,
        AlgebraId::TetQ => equitable_to_chevalley(&pullback_eta(rep)?)?,
        AlgebraId::UqPlus => bail!("a uq_plus module carries no uq_loop structure"),
    })
}

pub(crate) fn to_equitable(rep: &Representation) -> Result<Representation> {
    Ok(match rep.algebra() {
        AlgebraId::UqLoopEquitable => rep.clone(),
        AlgebraId::UqLoop => chevalley_to_equitable(rep)?,
        AlgebraId::BoxQ => reconstruct_uq(rep)?,
        AlgebraId::TetQ => pullback_eta(rep)?,
        AlgebraId::UqPlus => bail!("a uq_plus module carries no uq_loop structure"),
    })
}

/// Exit status of a command that ran to completion.
enum Status {
    Pass,
    Fail,
}

fn run(cli: Cli) -> Result<Status> {
    let q0 = match &cli.q0 {
        Some(s) => Some(Rational::from_str(s).map_err(|e| usage(format!("--q0 `{s}`: {e}")))?),
        None => None,
    };
    let q0 = q0.as_ref();
    match cli.command {
        Command::EvalModule { a, coords, out } => {
            let a = literal(&a)?;
            let rep = match coords {
                Target::Chevalley => evaluation_module(&a, Coords::Chevalley)?,
                other => convert(&evaluation_module(&a, Coords::Equitable)?, other)?,
            };
            if a.is_one() {
                eprintln!("warning: at a = 1 the induced box_q and uq_plus modules are reducible");
            }
            write_rep(&out, &rep, q0)?;
        }
        Command::Convert { input, to, out } => {
            write_rep(&out, &convert(&read_rep(&input)?, to)?, q0)?;
        }
        Command::Tensor { a, b, out } => {
            if is_stdio(&a) && is_stdio(&b) {
                return Err(usage("at most one tensor factor can come from stdin"));
            }
            let rep = tensor(&read_rep(&a)?, &read_rep(&b)?)?;
            let report = verify_relations(&rep);
            eprintln!(
                "relations: {}/{} hold",
                report.total - report.failed.len(),
                report.total
            );
            if !report.passed() {
                bail!("tensor product violates {}", report.failed_labels().join(", "));
            }
            write_rep(&out, &rep, q0)?;
        }
        Command::Analyze {
            input,
            view,
            gamma,
            pair,
        } => {
            let rep = read_rep(&input)?;
            return analyze(&rep, view, gamma.as_deref(), usize::from(pair));
        }
        Command::Drinfeld { input } => {
            let ch = to_chevalley(&read_rep(&input)?)?;
            let p = drinfeld_P(&ch)?;
            let q = drinfeld_Q(&ch)?;
            let partners = partner(&p) == q;
            let mut report = json!({
                "p": p,
                "p_text": p.to_string(),
                "partners": partners,
                "q": q,
                "q_text": q.to_string(),
            });
            if let Some(q0) = q0 {
                let (pn, qn) = (poly_at(p.poly(), q0)?, poly_at(q.poly(), q0)?);
                if (partner_at(&pn) == qn) != partners {
                    bail!("exact and numeric partner comparisons disagree at q0 = {q0}");
                }
                report["at_q0"] = json!({"p": show(&pn), "q": show(&qn), "q0": q0.to_string()});
            }
            write_json(std::path::Path::new("-"), &report)?;
        }
        Command::Twist { input, auto, out } => {
            let mut rep = read_rep(&input)?;
            match auto {
                Twist::Rho(k) => {
                    for _ in 0..k {
                        rep = rho_twist(&rep)?;
                    }
                }
                Twist::Scale(alpha) => rep = scale_twist(&rep, &alpha)?,
            }
            write_rep(&out, &rep, q0)?;
        }
        Command::CheckTheorem { which, input } => {
            let rep = read_rep(&input)?;
            let v = check::run(which, &rep, q0)?;
            write_json(std::path::Path::new("-"), &v.report)?;
            if !v.holds {
                for line in &v.diff {
                    eprintln!("{line}");
                }
                return Ok(Status::Fail);
            }
        }
        Command::Suite { json } => {
            let report = run_suite();
            if json {
                write_json(std::path::Path::new("-"), &serde_json::to_value(&report)?)?;
            } else {
                println!("{report}");
            }
            if !report.passed() {
                return Ok(Status::Fail);
            }
        }
    }
    Ok(Status::Pass)
}

fn analyze(rep: &Representation, view: View, gamma: Option<&str>, i: usize) -> Result<Status> {
    let stdout = std::path::Path::new("-");
    match view {
        View::Box => {
            let gamma = gamma.map(literal).transpose()?;
            let an = analyze_box(&to_box(rep)?, gamma.as_ref())?;
            write_json(stdout, &serde_json::to_value(&an)?)?;
        }
        View::Uq => {
            let wd = weight_decomposition(&to_chevalley(rep)?)?;
            let mut v = serde_json::to_value(&wd)?;
            v["shape"] = json!(wd.dims());
            write_json(stdout, &v)?;
        }
        View::Td => {
            let bx = to_box(rep)?;
            let label = format!("(x{i},x{})", (i + 2) % 4);
            let pair = match box_pair(&bx, i, Order::Descending, Order::Ascending)? {
                Ok(p) => p,
                Err(v) => {
                    eprintln!("{label}: {v}");
                    write_json(stdout, &json!({"axioms": "fail", "pair": label, "violation": v}))?;
                    return Ok(Status::Fail);
                }
            };
            let mut v = serde_json::to_value(analyze_tdpair(&pair, &RatFunc::q())?)?;
            v["axioms"] = json!("pass");
            v["pair"] = json!(label);
            if pair.diameter() >= 2 {
                v["polynomial"] = serde_json::to_value(td_drinfeld(&pair, &RatFunc::q())?)?;
            }
            write_json(stdout, &v)?;
        }
    }
    Ok(Status::Pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Status::Pass) => ExitCode::SUCCESS,
        Ok(Status::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<Usage>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(3)
            }
        }
    }
}
