//! Command-line front end. Every invocation prints one JSON report on stdout;
//! diagnostics go to stderr.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 internal consistency
//! failure (Kähler checkers disagree, or the self-test battery fails).

use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::frames::{frame_at, FrameKind};
use crate::group::{GroupDescriptor, GroupElement};
use crate::hermitian::{is_kahler, HermitianForm};
use crate::json::matrix_to_json;
use crate::measures::{left_density, modular, right_density};
use crate::multiplicity::MultiplicityFunction;
use crate::quotient::{generators_from_json, kahler_verdict_connected, verify_central};
use crate::{sampling, selftest, Side};

#[derive(Debug, Parser)]
#[command(
    name = "almost-abelian",
    version,
    about = "Complex almost Abelian Lie groups from multiplicity functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Group spec JSON: {"blocks":[{"mu":[re,im],"size":n,"mult":m}, ...]}
    #[arg(long, global = true)]
    spec: Option<PathBuf>,
    /// Metric JSON: {"h":[[[re,im],...],...]}; identity when absent
    #[arg(long, global = true)]
    metric: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = crate::DEFAULT_TOL)]
    tol: f64,
    /// Seed for elements that are sampled rather than given
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value = "left")]
    side: Side,
    /// Element JSON {"v":[[re,im],...],"t":[re,im]}
    #[arg(long, global = true)]
    a: Option<PathBuf>,
    #[arg(long, global = true)]
    b: Option<PathBuf>,
    /// Element (inv, haar, frame) or algebra element (exp); sampled from
    /// --seed when absent
    #[arg(long, global = true, visible_alias = "x")]
    element: Option<PathBuf>,
    /// Generators JSON: {"generators":[element, ...]}
    #[arg(long, global = true)]
    generators: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, Subcommand)]
enum Command {
    /// Dimensions, Jordan layout, Abelian flag and center
    Info,
    /// exp(x) of an algebra element
    Exp {
        /// Use the closed form valid for v ∈ ker J
        #[arg(long)]
        restricted: bool,
    },
    /// Product a·b
    Mul,
    /// Inverse of an element
    Inv,
    /// Kernel of J and the lattice T
    Center,
    /// Haar densities and modular function at an element
    Haar,
    /// Left/right frames and coframes at an element
    Frame,
    /// Kähler check of an invariant metric
    KahlerCheck,
    /// Centrality of generators and the Kähler verdict on the quotient
    QuotientCheck,
    /// Seeded property battery
    Selftest,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Info => "info",
            Command::Exp { .. } => "exp",
            Command::Mul => "mul",
            Command::Inv => "inv",
            Command::Center => "center",
            Command::Haar => "haar",
            Command::Frame => "frame",
            Command::KahlerCheck => "kahler-check",
            Command::QuotientCheck => "quotient-check",
            Command::Selftest => "selftest",
        }
    }
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Report emitted on stdout.
#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub outputs: Value,
    pub tolerances: Value,
    pub version: String,
}

impl RunReport {
    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "tolerances": self.tolerances,
            "version": self.version,
        })
    }
}

/// Runs the CLI on `argv` (including the program name).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome {
                        code: 0,
                        stdout: text,
                        stderr: String::new(),
                    }
                }
                _ => Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    match execute(&cli) {
        Ok((report, consistent)) => Outcome {
            code: if consistent { 0 } else { 2 },
            stdout: format!("{}\n", report.to_json()),
            stderr: if consistent {
                String::new()
            } else {
                "internal consistency check failed\n".to_string()
            },
        },
        Err(Error::CheckerDisagreement(verdict)) => Outcome {
            code: 2,
            stdout: format!(
                "{}\n",
                report(&cli, json!({}), json!({ "verdict": verdict.to_json() })).to_json()
            ),
            stderr: format!("error: {}\n", Error::CheckerDisagreement(verdict)),
        },
        Err(e) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn report(cli: &Cli, inputs: Value, outputs: Value) -> RunReport {
    RunReport {
        command: cli.command.name().to_string(),
        inputs,
        outputs,
        tolerances: json!({ "tol": cli.tol }),
        version: env!("CARGO_PKG_VERSION").to_string(),
    }
}

fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read(path)
        .map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_slice(&text)
        .map_err(|e| Error::Usage(format!("{}: malformed JSON: {e}", path.display())))
}

fn with_file<T>(path: &Path, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Spec {
            path: field,
            message,
        } => Error::Spec {
            path: format!("{}: {field}", path.display()),
            message,
        },
        other => other,
    })
}

fn required<'a>(flag: &str, value: &'a Option<PathBuf>) -> Result<&'a Path> {
    value
        .as_deref()
        .ok_or_else(|| Error::Usage(format!("missing required flag --{flag}")))
}

fn load_group(cli: &Cli) -> Result<Arc<GroupDescriptor>> {
    let path = required("spec", &cli.spec)?;
    let value = read_json(path)?;
    Ok(GroupDescriptor::new(with_file(
        path,
        MultiplicityFunction::from_json(&value),
    )?))
}

fn load_element(
    group: &Arc<GroupDescriptor>,
    flag: &str,
    path: &Option<PathBuf>,
) -> Result<GroupElement> {
    let path = required(flag, path)?;
    let value = read_json(path)?;
    with_file(path, group.element_from_json(&value))
}

fn element_or_sample(cli: &Cli, group: &Arc<GroupDescriptor>) -> Result<GroupElement> {
    match &cli.element {
        Some(_) => load_element(group, "element", &cli.element),
        None => Ok(sampling::element(&mut sampling::rng(cli.seed), group, 1.0)),
    }
}

fn load_metric(cli: &Cli, group: &GroupDescriptor) -> Result<HermitianForm> {
    match &cli.metric {
        None => Ok(HermitianForm::identity(group.dim(), cli.side)),
        Some(path) => {
            let value = read_json(path)?;
            with_file(path, HermitianForm::from_json(&value, cli.side))
        }
    }
}

fn spec_echo(group: &GroupDescriptor) -> Value {
    serde_json::from_str(&group.aleph().serialize()).expect("canonical spec is valid JSON")
}

/// Executes a parsed command; the flag is `false` for an internal consistency
/// failure that still produced a report.
fn execute(cli: &Cli) -> Result<(RunReport, bool)> {
    if let Command::Selftest = cli.command {
        let result = selftest::run(cli.seed)?;
        let passed = result.passed();
        return Ok((
            report(cli, json!({ "seed": cli.seed }), result.to_json()),
            passed,
        ));
    }
    let group = load_group(cli)?;
    let spec = spec_echo(&group);
    let (inputs, outputs) = match cli.command {
        Command::Info => {
            let layout: Vec<Value> = group
                .jordan()
                .layout()
                .iter()
                .map(|&(mu, size)| json!({ "mu": crate::json::complex_to_json(mu), "size": size }))
                .collect();
            (
                json!({ "spec": spec }),
                json!({
                    "dim_v": group.d(),
                    "dim_g": group.dim(),
                    "jordan_layout": layout,
                    "is_abelian": group.is_abelian(),
                    "center": group.center(cli.tol).to_json(),
                }),
            )
        }
        Command::Exp { restricted } => {
            let x = match &cli.element {
                Some(path) => with_file(path, group.algebra_from_json(&read_json(path)?))?,
                None => sampling::algebra_element(&mut sampling::rng(cli.seed), group.d(), 1.0),
            };
            let g = if restricted {
                group.exp_restricted(&x, cli.tol)?
            } else {
                group.exp_full(&x)?
            };
            (
                json!({ "spec": spec, "x": x.to_json(), "restricted": restricted }),
                json!({ "element": g.to_json() }),
            )
        }
        Command::Mul => {
            let a = load_element(&group, "a", &cli.a)?;
            let b = load_element(&group, "b", &cli.b)?;
            (
                json!({ "spec": spec, "a": a.to_json(), "b": b.to_json() }),
                json!({ "element": a.multiply(&b)?.to_json() }),
            )
        }
        Command::Inv => {
            let g = element_or_sample(cli, &group)?;
            (
                json!({ "spec": spec, "element": g.to_json() }),
                json!({ "element": g.inverse().to_json() }),
            )
        }
        Command::Center => (json!({ "spec": spec }), group.center(cli.tol).to_json()),
        Command::Haar => {
            let g = element_or_sample(cli, &group)?;
            (
                json!({ "spec": spec, "element": g.to_json() }),
                json!({
                    "modular": modular(&g),
                    "left_density": left_density(&g),
                    "right_density": right_density(&g),
                }),
            )
        }
        Command::Frame => {
            let g = element_or_sample(cli, &group)?;
            let mut frames = serde_json::Map::new();
            for kind in FrameKind::ALL {
                frames.insert(kind.name().to_string(), matrix_to_json(&frame_at(kind, &g)));
            }
            (
                json!({ "spec": spec, "element": g.to_json() }),
                Value::Object(frames),
            )
        }
        Command::KahlerCheck => {
            let h = load_metric(cli, &group)?;
            let verdict = is_kahler(&group, &h, cli.tol)?;
            (
                json!({ "spec": spec, "metric": h.to_json() }),
                verdict.to_json(),
            )
        }
        Command::QuotientCheck => {
            let path = required("generators", &cli.generators)?;
            let candidates = with_file(path, generators_from_json(&group, &read_json(path)?))?;
            let h = load_metric(cli, &group)?;
            let inputs = json!({
                "spec": spec,
                "metric": h.to_json(),
                "generators": candidates.iter().map(GroupElement::to_json).collect::<Vec<_>>(),
            });
            let outputs = match verify_central(&group, &candidates, cli.tol) {
                Ok(gamma) => {
                    let verdict = kahler_verdict_connected(&group, &gamma, &h, cli.tol)?;
                    json!({ "central": true, "kahler": verdict.to_json() })
                }
                Err(e @ (Error::NonCentral { .. } | Error::NonCommuting { .. })) => {
                    json!({ "central": false, "reason": e.to_string(), "kahler": Value::Null })
                }
                Err(e) => return Err(e),
            };
            (inputs, outputs)
        }
        Command::Selftest => unreachable!("handled above"),
    };
    Ok((report(cli, inputs, outputs), true))
}
