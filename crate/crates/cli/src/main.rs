use std::io::{Read, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hironaka_core::parser::{self, collect_variables};
use hironaka_core::verify::{self, CheckId, CycleSource, Format, Options, CHECK_NAMES};
use hironaka_core::{MonomialOrder, VarSet};

#[derive(Parser)]
#[command(name = "hironaka", version, about = "Exact ideal computations and scripted verifications")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification check (or `all`).
    Verify {
        check: String,
        /// For `cycles`: a built-in scenario name or a scenario file.
        scenario: Option<String>,
        #[arg(long)]
        json: bool,
        #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
        order: OrderArg,
        /// Coefficient bound for the effective-zero search.
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        bound: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Evaluate an ideal expression, read from standard input if omitted.
    Ideal {
        expression: Option<String>,
        /// Comma-separated variables; defaults to those in the expression.
        #[arg(long)]
        ring: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Grevlex,
    Lex,
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}");
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn resolve_checks(check: &str, scenario: Option<String>) -> Result<Vec<CheckId>, String> {
    match check {
        "all" => Ok(CheckId::all()),
        "cycles" => {
            let source = match scenario {
                None => CycleSource::Builtin("v0".into()),
                Some(s) if hironaka_core::cycles::builtin_scenario(&s).is_some() => CycleSource::Builtin(s),
                Some(s) => {
                    let path = Path::new(&s);
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| format!("unknown scenario `{s}` ({e})"))?;
                    let name = path
                        .file_stem()
                        .map(|n| n.to_string_lossy().into_owned())
                        .unwrap_or(s.clone());
                    CycleSource::Text { name, text }
                }
            };
            Ok(vec![CheckId::Cycles(source)])
        }
        other => {
            if scenario.is_some() {
                return Err(format!("check `{other}` takes no scenario argument"));
            }
            CheckId::from_name(other, None)
                .map(|id| vec![id])
                .map_err(|_| format!("unknown check `{other}`; expected one of {}, all", CHECK_NAMES.join(", ")))
        }
    }
}

fn run_verify(check: &str, scenario: Option<String>, json: bool, opts: Options) -> ExitCode {
    let ids = match resolve_checks(check, scenario) {
        Ok(ids) => ids,
        Err(e) => return usage(e),
    };
    let reports = verify::run_all(&ids, &opts);
    let format = if json { Format::Json } else { Format::Text };
    emit(verify::emit_reports(&reports, format).trim_end());
    if reports.iter().all(|r| r.passed()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run_ideal(expression: Option<String>, ring: Option<String>) -> ExitCode {
    let src = match expression {
        Some(e) => e,
        None => {
            let mut buf = String::new();
            if let Err(e) = std::io::stdin().read_to_string(&mut buf) {
                return usage(e);
            }
            buf
        }
    };
    let src = src.trim();
    let ring = match ring {
        Some(r) => VarSet::parse_list(&r).map_err(|e| e.to_string()),
        None => collect_variables(src)
            .map_err(|e| e.to_string())
            .and_then(|names| VarSet::new(names).map_err(|e| e.to_string())),
    };
    let ring = match ring {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    let value = match parser::parse(src, &ring) {
        Ok(ast) => parser::evaluate(&ast, &ring),
        Err(e) => return usage(e),
    };
    match value {
        Ok(v) => {
            let mut text = format!("ring: {}\nideal: {v}\ngenerators:", ring.names().join(", "));
            for g in v.canonical_generators() {
                text.push_str(&format!("\n  {g}"));
            }
            emit(&text);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { check, scenario, json, order, bound, seed } => {
            let order = match order {
                OrderArg::Grevlex => MonomialOrder::GrevLex,
                OrderArg::Lex => MonomialOrder::Lex,
            };
            run_verify(&check, scenario, json, Options { order, bound, seed })
        }
        Command::Ideal { expression, ring } => run_ideal(expression, ring),
    }
}
