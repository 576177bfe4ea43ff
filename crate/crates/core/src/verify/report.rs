use std::fmt::Write as _;

use serde::Serialize;

use crate::error::Result;
use crate::groebner::EngineStats;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

/// One scripted step: what was computed, what was expected, what came out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub description: String,
    pub expression: String,
    pub expected: String,
    pub outcome: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub check_id: String,
    pub status: Status,
    pub steps: Vec<Step>,
    pub elapsed_ms: u64,
    pub engine_stats: EngineStats,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{}: {} ({} ms, {} s-pairs, {} reductions)",
            self.check_id,
            self.status.as_str().to_uppercase(),
            self.elapsed_ms,
            self.engine_stats.s_pairs,
            self.engine_stats.reductions
        );
        for s in &self.steps {
            let mark = if s.passed { "ok  " } else { "FAIL" };
            let _ = writeln!(out, "  [{mark}] {}", s.description);
            if !s.expression.is_empty() {
                let _ = writeln!(out, "         {}", s.expression);
            }
            let _ = writeln!(out, "         expected: {}", s.expected);
            let _ = writeln!(out, "         outcome:  {}", s.outcome);
        }
        out
    }
}

/// Renders one or more reports. Several JSON reports form an array.
pub fn emit_reports(reports: &[VerificationReport], format: Format) -> String {
    match format {
        Format::Text => reports.iter().map(VerificationReport::to_text).collect::<Vec<_>>().join("\n"),
        Format::Json => {
            if let [single] = reports {
                single.to_json()
            } else {
                serde_json::to_string_pretty(reports).expect("reports serialize")
            }
        }
    }
}

/// Accumulates steps; engine errors become failed steps.
#[derive(Default)]
pub(crate) struct Steps(pub Vec<Step>);

impl Steps {
    pub fn record(
        &mut self,
        description: impl Into<String>,
        expression: impl Into<String>,
        expected: impl Into<String>,
        outcome: Result<(bool, String)>,
    ) -> bool {
        let (passed, outcome) = match outcome {
            Ok(v) => v,
            Err(e) => (false, format!("error: {e}")),
        };
        self.0.push(Step {
            description: description.into(),
            expression: expression.into(),
            expected: expected.into(),
            outcome,
            passed,
        });
        passed
    }

    /// A yes/no claim.
    pub fn claim(
        &mut self,
        description: impl Into<String>,
        expression: impl Into<String>,
        expected: bool,
        value: Result<bool>,
    ) -> bool {
        self.record(
            description,
            expression,
            expected.to_string(),
            value.map(|v| (v == expected, v.to_string())),
        )
    }
}
