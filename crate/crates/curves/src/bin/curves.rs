//! Command line front end: reproduction, exploration, and regression checks
//! over the standard 33-curve system.
//!
//! Exit codes: 0 verified or computed, 1 counterexample found, 2 window
//! insufficient, 64 usage errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use curves::codes::{build_x0, orbit, stabilizer, CurveCode};
use curves::verify::{self, Engine, VerifyError};

#[derive(Parser)]
#[command(
    name = "curves",
    version,
    about = "A saturated system of 33 curves on the closed genus-3 surface",
    long_about = "Computes geometric intersection numbers of curves encoded over the \
                  tetrahedral pants decomposition, with two independent engines, and \
                  checks the standard 33-curve system: pairwise crossings at most one \
                  and no room for a 34th curve."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Intersection engine: the calibrated formulas, the chart replay, or
    /// both cross-checked.
    #[arg(long, global = true, value_enum, default_value_t = MethodArg::Both)]
    method: MethodArg,
    /// Twist window radius r; candidates range over [-r, r+1]. Defaults to
    /// the CURVES_WINDOW environment variable, then 2.
    #[arg(long, global = true)]
    window: Option<i32>,
    /// Machine readable JSON reports.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Formula,
    Oracle,
    Both,
}

impl From<MethodArg> for Engine {
    fn from(m: MethodArg) -> Engine {
        match m {
            MethodArg::Formula => Engine::Formula,
            MethodArg::Oracle => Engine::Oracle,
            MethodArg::Both => Engine::Both,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List the 33 curve codes of the standard system.
    X0,
    /// Intersection number of two curve codes.
    Intersect { a: String, b: String },
    /// Check that all pairs of the standard system cross at most once.
    Verify,
    /// Check that no curve in the twist window can join the system.
    Saturation {
        /// Also rerun with each member removed, reporting readmissions.
        #[arg(long)]
        leave_one_out: bool,
    },
    /// Orbit and stabilizer of a curve code under the chart relabelings.
    Orbits { code: String },
    /// The five decomposition graph classes.
    Graphs,
    /// Curve count bounds per decomposition graph class.
    Bounds,
    /// Spanning arc crossing grid: calibrated index formula vs chart replay.
    LemmaTable {
        /// Largest index magnitude in the grid.
        #[arg(long, default_value_t = 4)]
        max_index: i32,
    },
}

const OK: u8 = 0;
const COUNTEREXAMPLE: u8 = 1;
const WINDOW_INSUFFICIENT: u8 = 2;
const USAGE: u8 = 64;

/// Restores the default SIGPIPE disposition so piping into `head` ends the
/// process quietly instead of panicking on the broken pipe.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
    }
}

fn window(cli: &Cli) -> Result<i32, String> {
    if let Some(r) = cli.window {
        return Ok(r);
    }
    match std::env::var("CURVES_WINDOW") {
        Ok(text) => text
            .parse()
            .map_err(|_| format!("CURVES_WINDOW is not an integer: {text:?}")),
        Err(_) => Ok(2),
    }
}

fn parse_code(text: &str) -> Result<CurveCode, String> {
    CurveCode::parse(text).map_err(|e| format!("{text:?}: {e}"))
}

fn counted(n: usize, noun: &str) -> String {
    if n == 1 {
        format!("1 {noun}")
    } else {
        format!("{n} {noun}s")
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

fn run(cli: &Cli) -> Result<u8, String> {
    let engine = Engine::from(cli.method);
    match &cli.command {
        Command::X0 => {
            let x0 = build_x0();
            if cli.json {
                let codes: Vec<String> = x0.iter().map(|c| c.to_string()).collect();
                println!("{}", json(&codes));
            } else {
                for c in &x0 {
                    println!("{c}");
                }
            }
            Ok(OK)
        }
        Command::Intersect { a, b } => {
            let a = parse_code(a)?;
            let b = parse_code(b)?;
            match verify::intersection(&a, &b, engine) {
                Ok(i) => {
                    let v = i.value().expect("engines report exact values");
                    if cli.json {
                        #[derive(serde::Serialize)]
                        struct Row {
                            a: String,
                            b: String,
                            value: u32,
                            method: String,
                        }
                        let row = Row {
                            a: a.to_string(),
                            b: b.to_string(),
                            value: v,
                            method: i.method.to_string(),
                        };
                        println!("{}", json(&row));
                    } else {
                        println!("{a} x {b} = {v} ({})", i.method);
                    }
                    Ok(OK)
                }
                Err(VerifyError::Formula(e)) => Err(format!(
                    "{e}; pairs on one cycle need --method oracle or --method both"
                )),
                Err(e @ (VerifyError::Disagreement { .. } | VerifyError::BoundViolated { .. })) => {
                    eprintln!("counterexample: {e}");
                    Ok(COUNTEREXAMPLE)
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::Verify => {
            let x0 = build_x0();
            let report = match verify::is_k_system(&x0, 1, engine) {
                Ok(report) => report,
                Err(e) => return engine_failure(e),
            };
            if cli.json {
                println!("{}", json(&report));
            } else {
                println!(
                    "{} curves, max pairwise intersection {}",
                    report.size, report.max_pairwise
                );
                for v in &report.violations {
                    println!("violation: {} x {} = {}", v.a, v.b, v.value);
                }
            }
            Ok(if report.holds() { OK } else { COUNTEREXAMPLE })
        }
        Command::Saturation { leave_one_out } => {
            let r = window(cli)?;
            let x0 = build_x0();
            let report = match verify::saturation_check(&x0, r, engine) {
                Ok(report) => report,
                Err(VerifyError::WindowTooSmall(r)) => {
                    eprintln!(
                        "window radius {r} is too small for the tail certificate; need at least 2"
                    );
                    return Ok(WINDOW_INSUFFICIENT);
                }
                Err(e) => return engine_failure(e),
            };
            let loo = if *leave_one_out {
                match verify::leave_one_out(&x0, r, engine) {
                    Ok(rows) => Some(rows),
                    Err(e) => return engine_failure(e),
                }
            } else {
                None
            };
            if cli.json {
                #[derive(serde::Serialize)]
                struct Out<'a> {
                    #[serde(flatten)]
                    saturation: &'a verify::SaturationReport,
                    #[serde(skip_serializing_if = "Option::is_none")]
                    leave_one_out: Option<&'a Vec<verify::LeaveOneOut>>,
                }
                println!(
                    "{}",
                    json(&Out {
                        saturation: &report,
                        leave_one_out: loo.as_ref()
                    })
                );
            } else {
                println!(
                    "window [{}, {}]: {} candidates, {} members, {} blocked, {} admissible",
                    report.lo,
                    report.hi,
                    report.candidates,
                    report.members,
                    report.blocked,
                    report.admissible.len()
                );
                for c in &report.admissible {
                    println!("admissible: {c}");
                }
                println!(
                    "tail: {} rim checks, {}",
                    report.tail.checks.len(),
                    if report.tail.sound {
                        "sound"
                    } else {
                        "NOT SOUND"
                    }
                );
                if let Some(rows) = &loo {
                    for row in rows {
                        let codes: Vec<String> =
                            row.admissible.iter().map(|c| c.to_string()).collect();
                        println!("without {}: readmits {}", row.removed, codes.join(", "));
                    }
                }
            }
            Ok(if report.holds() { OK } else { COUNTEREXAMPLE })
        }
        Command::Orbits { code } => {
            let code = parse_code(code)?;
            let orbit = orbit(&code);
            let stab = stabilizer(&code);
            if cli.json {
                #[derive(serde::Serialize)]
                struct Out {
                    code: String,
                    orbit: Vec<String>,
                    stabilizer: Vec<String>,
                }
                let out = Out {
                    code: code.to_string(),
                    orbit: orbit.iter().map(|c| c.to_string()).collect(),
                    stabilizer: stab.iter().map(|r| r.to_string()).collect(),
                };
                println!("{}", json(&out));
            } else {
                println!("orbit ({}):", orbit.len());
                for c in &orbit {
                    println!("  {c}");
                }
                println!("stabilizer ({}):", stab.len());
                for r in &stab {
                    println!("  {r}");
                }
            }
            Ok(OK)
        }
        Command::Graphs => {
            let rows = verify::bound_survey();
            if cli.json {
                #[derive(serde::Serialize)]
                struct Row {
                    edges: Vec<(usize, usize)>,
                    bridges: usize,
                }
                let out: Vec<Row> = rows
                    .iter()
                    .map(|r| Row {
                        edges: r.edges.clone(),
                        bridges: r.bridges,
                    })
                    .collect();
                println!("{}", json(&out));
            } else {
                println!("{} classes", rows.len());
                for (i, r) in rows.iter().enumerate() {
                    let edges: Vec<String> = r
                        .edges
                        .iter()
                        .map(|&(a, b)| format!("v{}-v{}", a + 1, b + 1))
                        .collect();
                    println!(
                        "{}: {} ({})",
                        i + 1,
                        edges.join(" "),
                        counted(r.bridges, "bridge")
                    );
                }
            }
            Ok(OK)
        }
        Command::Bounds => {
            let rows = verify::bound_survey();
            if cli.json {
                println!("{}", json(&rows));
            } else {
                for (i, r) in rows.iter().enumerate() {
                    let parts: Vec<String> = r
                        .components
                        .iter()
                        .map(|c| {
                            format!(
                                "genus {} with {}",
                                c.genus,
                                counted(c.boundary as usize, "end")
                            )
                        })
                        .collect();
                    let bound = match r.bound {
                        Some(n) => format!("at most {n} curves"),
                        None => "no cut bound".to_owned(),
                    };
                    println!(
                        "{}: {}; {}; {}",
                        i + 1,
                        counted(r.bridges, "bridge"),
                        parts.join(", "),
                        bound
                    );
                }
            }
            Ok(OK)
        }
        Command::LemmaTable { max_index } => {
            let report = verify::arc_table_check(*max_index);
            if cli.json {
                println!("{}", json(&report));
            } else {
                for case in &report.cases {
                    let mark = if case.expected == case.diagram {
                        "ok"
                    } else {
                        "MISMATCH"
                    };
                    println!(
                        "{}[{}] x {}[{}]: formula {} replay {} {}",
                        case.family1,
                        case.index1,
                        case.family2,
                        case.index2,
                        case.expected,
                        case.diagram,
                        mark
                    );
                }
                println!(
                    "{} cases, {} mismatches",
                    report.cases.len(),
                    report.mismatches
                );
            }
            Ok(if report.mismatches == 0 {
                OK
            } else {
                COUNTEREXAMPLE
            })
        }
    }
}

/// Engine failures that disprove a checked property count as counterexamples;
/// everything else bubbles up as a usage level error.
fn engine_failure(e: VerifyError) -> Result<u8, String> {
    match e {
        VerifyError::Disagreement { .. } | VerifyError::BoundViolated { .. } => {
            eprintln!("counterexample: {e}");
            Ok(COUNTEREXAMPLE)
        }
        VerifyError::WindowTooSmall(r) => {
            eprintln!("window radius {r} is too small; need at least 2");
            Ok(WINDOW_INSUFFICIENT)
        }
        _ => Err(e.to_string()),
    }
}
