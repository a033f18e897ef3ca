use std::process::ExitCode;

use anyhow::anyhow;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use flagged_schur::demazure::{demazure_char, match_gapless_to_demazure, Permutation};
use flagged_schur::equivalence::{classes, parabolic_catalan};
use flagged_schur::gv::{
    efficiency_count, entry_reduction_ratios, schur_via_det, Method, SchurResult,
};
use flagged_schur::paths::{
    construct_violation_witness, is_nonpermutable_brute, DEFAULT_BRUTE_CAP,
};
use flagged_schur::shape::row_bound_sum;
use flagged_schur::sweep;
use flagged_schur::{Error, RTuple, Shape};

#[derive(Parser)]
#[command(
    name = "fschur",
    version,
    about = "Flagged Schur polynomials, determinants and nonpermutability"
)]
struct Cli {
    /// Print canonical JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Input {
    /// Partition, e.g. "2,1,0". Its length is n.
    #[arg(long)]
    shape: String,
    /// Row bound tuple, e.g. "3,2,3" or "3;2;3". Dividers, if given, must match the shape.
    #[arg(long)]
    tuple: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum SchurMethod {
    Tableau,
    Det,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum NonpermMethod {
    Predicate,
    Brute,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Class membership flags and the critical list.
    Classify(Input),
    /// The core of a tuple.
    Core(Input),
    /// The platform of a tuple.
    Platform(Input),
    /// The row bound sum.
    Schur {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "auto")]
        method: SchurMethod,
        /// Refuse instead of falling back to the core.
        #[arg(long)]
        strict: bool,
    },
    /// Whether the terminal set is nonpermutable.
    Nonpermutable {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "both")]
        method: NonpermMethod,
    },
    /// A disjoint n-path with permuted sinks, when one exists.
    Witness(Input),
    /// Determinant term counts and per-entry reduction ratios against the core.
    Efficiency(Input),
    /// The number of gapless tuples for a shape.
    Catalan {
        #[arg(long)]
        shape: String,
    },
    /// Equivalence classes of valid determinant inputs.
    Classes {
        #[arg(long)]
        shape: String,
    },
    /// The Demazure character of a λ-permutation.
    Demazure {
        #[arg(long)]
        shape: String,
        /// One-line notation, e.g. "2,1,3".
        #[arg(long)]
        perm: String,
    },
    /// Matches gapless determinants against Demazure characters.
    DemazureMatch {
        #[arg(long)]
        shape: String,
    },
    /// Runs every exhaustive invariant sweep below the caps.
    Selftest {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        max_part: usize,
    },
}

enum Failure {
    Usage(anyhow::Error),
    Invariant(anyhow::Error),
    Cap(anyhow::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::OverCap { .. } => Failure::Cap(e.into()),
            Error::Inconsistent(_) => Failure::Invariant(e.into()),
            _ => Failure::Usage(e.into()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn brute_cap() -> Result<usize, Failure> {
    match std::env::var("GV_MAX_N") {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::Usage(anyhow!("GV_MAX_N must be a nonnegative integer, got {v:?}"))
        }),
        Err(_) => Ok(DEFAULT_BRUTE_CAP),
    }
}

fn parse_shape(text: &str) -> Result<Shape, Failure> {
    Ok(Shape::parse(text)?)
}

fn parse_input(input: &Input) -> Result<(Shape, RTuple), Failure> {
    let shape = parse_shape(&input.shape)?;
    let beta = if input.tuple.contains(';') {
        let t: RTuple = input.tuple.parse()?;
        if t.ctx() != shape.ctx() {
            return Err(Failure::Usage(anyhow!(
                "tuple dividers {:?} do not match R = {:?} of shape {shape}",
                t.ctx().dividers(),
                shape.ctx().dividers()
            )));
        }
        t
    } else {
        let entries = input
            .tuple
            .split(',')
            .map(|s| {
                s.trim()
                    .parse()
                    .map_err(|_| Failure::Usage(anyhow!("malformed tuple entry {:?}", s.trim())))
            })
            .collect::<Result<Vec<usize>, _>>()?;
        shape.tuple(entries)?
    };
    Ok((shape, beta))
}

fn emit(json_mode: bool, value: Value, text: String) {
    if json_mode {
        println!("{value}");
    } else {
        println!("{text}");
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library types serialize")
}

fn run(cli: Cli) -> Outcome {
    let json_mode = cli.json;
    match cli.command {
        Command::Classify(input) => {
            let (_, beta) = parse_input(&input)?;
            let flags = beta.classify()?;
            let crit = beta.critical_list().ok();
            let mut text = serde_json::to_value(flags)
                .expect("flags serialize")
                .as_object()
                .expect("flags are an object")
                .iter()
                .map(|(k, v)| format!("{k}: {v}"))
                .collect::<Vec<_>>();
            text.push(format!(
                "critical_list: {}",
                crit.as_ref()
                    .map_or("none (not upper)".to_string(), ToString::to_string)
            ));
            emit(
                json_mode,
                json!({ "flags": flags, "critical_list": crit }),
                text.join("\n"),
            );
        }
        Command::Core(input) => {
            let (_, beta) = parse_input(&input)?;
            let core = beta.core()?;
            emit(json_mode, to_json(&core), core.to_string());
        }
        Command::Platform(input) => {
            let (_, beta) = parse_input(&input)?;
            let plat = beta.platform()?;
            emit(json_mode, to_json(&plat), plat.to_string());
        }
        Command::Schur {
            input,
            method,
            strict,
        } => {
            let (shape, beta) = parse_input(&input)?;
            beta.require_upper()?;
            let tableau = || SchurResult {
                polynomial: row_bound_sum(&shape, &beta),
                method: Method::Tableau,
                matrix_term_count: 0,
            };
            let result = match method {
                SchurMethod::Tableau => tableau(),
                SchurMethod::Det => schur_via_det(&shape, &beta, strict)?,
                SchurMethod::Auto => match schur_via_det(&shape, &beta, strict) {
                    Ok(det) => {
                        if shape.n() <= brute_cap()? {
                            let oracle = tableau();
                            if oracle.polynomial != det.polynomial {
                                return Err(Failure::Invariant(anyhow!(
                                    "determinant {} differs from tableau sum {}",
                                    det.polynomial,
                                    oracle.polynomial
                                )));
                            }
                        }
                        det
                    }
                    Err(Error::Refused(_)) if !strict => tableau(),
                    Err(e) => return Err(e.into()),
                },
            };
            let method_name = to_json(&result.method);
            let text = format!(
                "{}\nmethod: {}",
                result.polynomial,
                method_name.as_str().unwrap_or_default()
            );
            emit(json_mode, to_json(&result), text);
        }
        Command::Nonpermutable { input, method } => {
            let (shape, beta) = parse_input(&input)?;
            beta.require_upper()?;
            let predicate =
                || -> Result<bool, Failure> { Ok(beta.classify()?.is_valid_gv_input()) };
            let brute = || -> Result<bool, Failure> {
                Ok(is_nonpermutable_brute(&shape, &beta, brute_cap()?)?)
            };
            match method {
                NonpermMethod::Predicate => {
                    let p = predicate()?;
                    emit(
                        json_mode,
                        json!({ "predicate": p }),
                        format!("predicate: {p}"),
                    );
                }
                NonpermMethod::Brute => {
                    let b = brute()?;
                    emit(json_mode, json!({ "brute": b }), format!("brute: {b}"));
                }
                NonpermMethod::Both => {
                    let (p, b) = (predicate()?, brute()?);
                    emit(
                        json_mode,
                        json!({ "predicate": p, "brute": b }),
                        format!("predicate: {p}\nbrute: {b}"),
                    );
                    if p != b {
                        return Err(Failure::Invariant(anyhow!(
                            "predicate {p} and brute force {b} disagree"
                        )));
                    }
                }
            }
        }
        Command::Witness(input) => {
            let (shape, beta) = parse_input(&input)?;
            let w = construct_violation_witness(&shape, &beta)?;
            let mut text = vec![
                format!(
                    "rewiring: {}",
                    to_json(&w.rewiring).as_str().unwrap_or_default()
                ),
                format!("d: {}  c: {}", w.d, w.c),
                format!(
                    "sinks: {}",
                    w.path
                        .sinks
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(",")
                ),
                format!("weight: {}", w.path.weight()),
            ];
            for (m, c) in w.path.components.iter().enumerate() {
                text.push(format!(
                    "path {}: start {:?} east depths {:?} end depth {}",
                    m + 1,
                    c.start,
                    c.east_depths,
                    c.end_depth
                ));
            }
            emit(json_mode, to_json(&w), text.join("\n"));
        }
        Command::Efficiency(input) => {
            let (shape, beta) = parse_input(&input)?;
            let count = efficiency_count(&shape, &beta)?;
            let gamma = beta.core()?;
            let at_core = efficiency_count(&shape, &gamma)?;
            let ratios = entry_reduction_ratios(&shape, &beta, &gamma)?;
            let mut text = vec![
                format!("terms: {count}"),
                format!("terms at core ({gamma}): {at_core}"),
            ];
            for row in &ratios {
                let cells: Vec<String> = row
                    .iter()
                    .map(|r| r.map_or("-".to_string(), |(a, b)| format!("{a}/{b}")))
                    .collect();
                text.push(cells.join(" "));
            }
            emit(
                json_mode,
                json!({
                    "efficiency_count": count,
                    "core": gamma,
                    "efficiency_count_at_core": at_core,
                    "entry_ratios": ratios,
                }),
                text.join("\n"),
            );
        }
        Command::Catalan { shape } => {
            let c = parabolic_catalan(&parse_shape(&shape)?);
            emit(json_mode, json!(c), c.to_string());
        }
        Command::Classes { shape } => {
            let list = classes(&parse_shape(&shape)?)?;
            let text = list
                .iter()
                .map(|c| {
                    format!(
                        "γ=({}) ξ=({}) size={} terms={}",
                        c.gamma, c.xi, c.size_of_interval, c.efficiency_count_at_gamma
                    )
                })
                .collect::<Vec<_>>()
                .join("\n");
            emit(json_mode, to_json(&list), text);
        }
        Command::Demazure { shape, perm } => {
            let shape = parse_shape(&shape)?;
            let perm = Permutation::parse(&perm)?;
            let d = demazure_char(&shape, &perm)?;
            emit(json_mode, to_json(&d), d.to_string());
        }
        Command::DemazureMatch { shape } => {
            let report = match_gapless_to_demazure(&parse_shape(&shape)?)?;
            let mut text: Vec<String> = report
                .matched
                .iter()
                .map(|m| format!("γ=({}) π={}", m.gamma, m.pi_one_line))
                .collect();
            for g in &report.unmatched_gammas {
                text.push(format!("γ=({g}) unmatched"));
            }
            text.push(format!(
                "matched {} of {} gapless tuples over {} λ-permutations",
                report.count, report.parabolic_catalan, report.lambda_permutations
            ));
            emit(json_mode, to_json(&report), text.join("\n"));
            if !report.is_complete() {
                return Err(Failure::Invariant(anyhow!("demazure match is incomplete")));
            }
        }
        Command::Selftest { max_n, max_part } => {
            let cap = brute_cap()?;
            if max_n > cap {
                return Err(Error::OverCap { n: max_n, cap }.into());
            }
            let reports = sweep::run_all(max_n, max_part, cap);
            let text = reports
                .iter()
                .map(|r| {
                    let mut line = format!(
                        "{} {} ({} cases)",
                        if r.passed() { "PASS" } else { "FAIL" },
                        r.name,
                        r.cases
                    );
                    for f in r.failures.iter().take(5) {
                        line.push_str(&format!("\n    {f}"));
                    }
                    line
                })
                .collect::<Vec<_>>()
                .join("\n");
            emit(json_mode, to_json(&reports), text);
            if !reports.iter().all(|r| r.passed()) {
                return Err(Failure::Invariant(anyhow!("selftest found failures")));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Invariant(e)) => {
            eprintln!("invariant failure: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(e)) => {
            eprintln!("resource cap: {e}");
            ExitCode::from(3)
        }
    }
}
