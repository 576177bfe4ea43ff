//! Scripted verification checks. Each check runs a fixed sequence of exact
//! computations and records every step with its expected and actual outcome.

mod checks;
mod report;

use std::time::Instant;

pub use report::{emit_reports, Format, Status, Step, VerificationReport};

use crate::cycles::{builtin_scenario, parse_scenario, BUILTIN_SCENARIOS};
use crate::error::{Error, Result};
use crate::groebner::engine_stats;
use crate::poly::MonomialOrder;
use report::Steps;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycleSource {
    Builtin(String),
    Text { name: String, text: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckId {
    LemmaH1,
    LemmaH1Bis,
    Localization,
    BlowupCharts,
    SurfaceExample,
    TwoCurves,
    ThreeCurves,
    Cycles(CycleSource),
}

/// Names accepted by [`CheckId::from_name`], besides `all`.
pub const CHECK_NAMES: [&str; 8] = [
    "lemma-h1",
    "lemma-h1bis",
    "localization",
    "blowup-charts",
    "surface-example",
    "two-curves",
    "three-curves",
    "cycles",
];

impl CheckId {
    /// Looks up a check by name. `cycles` takes the built-in scenario name,
    /// defaulting to `v0`.
    pub fn from_name(name: &str, scenario: Option<&str>) -> Result<CheckId> {
        let id = match name {
            "lemma-h1" => CheckId::LemmaH1,
            "lemma-h1bis" => CheckId::LemmaH1Bis,
            "localization" => CheckId::Localization,
            "blowup-charts" => CheckId::BlowupCharts,
            "surface-example" => CheckId::SurfaceExample,
            "two-curves" => CheckId::TwoCurves,
            "three-curves" => CheckId::ThreeCurves,
            "cycles" => CheckId::Cycles(CycleSource::Builtin(scenario.unwrap_or("v0").to_string())),
            other => return Err(Error::InvalidArgument(format!("unknown check `{other}`"))),
        };
        Ok(id)
    }

    pub fn name(&self) -> String {
        match self {
            CheckId::LemmaH1 => "lemma-h1".into(),
            CheckId::LemmaH1Bis => "lemma-h1bis".into(),
            CheckId::Localization => "localization".into(),
            CheckId::BlowupCharts => "blowup-charts".into(),
            CheckId::SurfaceExample => "surface-example".into(),
            CheckId::TwoCurves => "two-curves".into(),
            CheckId::ThreeCurves => "three-curves".into(),
            CheckId::Cycles(CycleSource::Builtin(n)) | CheckId::Cycles(CycleSource::Text { name: n, .. }) => {
                format!("cycles:{n}")
            }
        }
    }

    /// Every check, with one cycles entry per built-in scenario.
    pub fn all() -> Vec<CheckId> {
        let mut ids = vec![
            CheckId::LemmaH1,
            CheckId::LemmaH1Bis,
            CheckId::Localization,
            CheckId::BlowupCharts,
            CheckId::SurfaceExample,
            CheckId::TwoCurves,
            CheckId::ThreeCurves,
        ];
        ids.extend(
            BUILTIN_SCENARIOS
                .iter()
                .map(|(n, _)| CheckId::Cycles(CycleSource::Builtin(n.to_string()))),
        );
        ids
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub order: MonomialOrder,
    /// Coefficient bound for the effective-zero search.
    pub bound: u32,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            order: MonomialOrder::GrevLex,
            bound: 3,
            seed: 0,
        }
    }
}

pub fn run(check: &CheckId, opts: &Options) -> VerificationReport {
    let start = Instant::now();
    let before = engine_stats();
    let mut steps = Steps::default();
    match check {
        CheckId::LemmaH1 => checks::lemma_h1(opts, &mut steps),
        CheckId::LemmaH1Bis => checks::lemma_h1bis(opts, &mut steps),
        CheckId::Localization => checks::localization(opts, &mut steps),
        CheckId::BlowupCharts => checks::blowup_charts(opts, &mut steps),
        CheckId::SurfaceExample => checks::surface_example(opts, &mut steps),
        CheckId::TwoCurves => checks::two_curves(opts, &mut steps),
        CheckId::ThreeCurves => checks::three_curves(opts, &mut steps),
        CheckId::Cycles(source) => {
            let scenario = match source {
                CycleSource::Builtin(name) => builtin_scenario(name)
                    .unwrap_or_else(|| Err(Error::InvalidArgument(format!("unknown scenario `{name}`")))),
                CycleSource::Text { name, text } => parse_scenario(name, text),
            };
            match scenario {
                Ok(s) => checks::cycles(&s, opts, &mut steps),
                Err(e) => {
                    steps.record("load scenario", check.name(), "valid scenario", Err(e));
                }
            }
        }
    }
    let steps = steps.0;
    let status = if !steps.is_empty() && steps.iter().all(|s| s.passed) {
        Status::Pass
    } else {
        Status::Fail
    };
    VerificationReport {
        check_id: check.name(),
        status,
        steps,
        elapsed_ms: start.elapsed().as_millis() as u64,
        engine_stats: engine_stats().since(before),
    }
}

/// Runs the checks on separate threads; reports come back in input order.
pub fn run_all(checks: &[CheckId], opts: &Options) -> Vec<VerificationReport> {
    std::thread::scope(|s| {
        let handles: Vec<_> = checks.iter().map(|c| s.spawn(move || run(c, opts))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("check thread panicked"))
            .collect()
    })
}
