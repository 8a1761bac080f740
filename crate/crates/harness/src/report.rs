//! Reports and their JSON and text renderings.

use std::fmt::Write;

use hilbert_axioms::{Mor, Verdict};
use serde::{Deserialize, Serialize};

use crate::config::{Outcome, SuiteConfig, SuiteId};
use crate::text::PayloadText;

/// A morphism in the text matrix format.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MorphismRecord {
    pub dom: usize,
    pub cod: usize,
    pub matrix: String,
}

impl MorphismRecord {
    pub fn of<P: PayloadText>(f: &Mor<P>) -> Self {
        MorphismRecord {
            dom: f.dom().dim(),
            cod: f.cod().dim(),
            matrix: f.payload().to_text(),
        }
    }
}

/// The first failing trial of a suite.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub note: Option<String>,
    pub morphisms: Vec<MorphismRecord>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: SuiteId,
    pub law: String,
    pub anchor: String,
    pub trials: usize,
    pub failures: usize,
    pub max_residual: f64,
    pub verdict: Outcome,
    pub expected: Outcome,
    pub counterexample: Option<Counterexample>,
}

impl SuiteReport {
    /// A report whose verdict is `pass` exactly when `failures == 0`.
    pub fn new(
        suite: SuiteId,
        expected: Outcome,
        trials: usize,
        failures: usize,
        max_residual: f64,
        counterexample: Option<Counterexample>,
    ) -> Self {
        // JSON has no infinities; saturate so reports stay parseable
        let max_residual = if max_residual.is_finite() {
            max_residual
        } else {
            f64::MAX
        };
        SuiteReport {
            suite,
            law: suite.law().to_owned(),
            anchor: suite.anchor().to_owned(),
            trials,
            failures,
            max_residual,
            verdict: if failures == 0 {
                Outcome::Pass
            } else {
                Outcome::Fail
            },
            expected,
            counterexample,
        }
    }

    pub fn from_verdict<P: PayloadText>(
        suite: SuiteId,
        expected: Outcome,
        verdict: &Verdict<P>,
    ) -> Self {
        let counterexample = verdict.witness.as_ref().map(|w| Counterexample {
            note: None,
            morphisms: w.iter().map(MorphismRecord::of).collect(),
        });
        SuiteReport::new(
            suite,
            expected,
            verdict.trials,
            verdict.failures,
            verdict.residual,
            counterexample,
        )
    }

    pub fn as_expected(&self) -> bool {
        self.verdict == self.expected
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    /// Excluded from comparisons; everything else is a function of the config.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
    pub config: SuiteConfig,
    pub all_expected: bool,
    pub suites: Vec<SuiteReport>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            _ => Err(format!("unknown format `{s}` (expected json or text)")),
        }
    }
}

impl Report {
    pub fn new(config: SuiteConfig, suites: Vec<SuiteReport>) -> Self {
        Report {
            wall_time_ms: None,
            config,
            all_expected: suites.iter().all(SuiteReport::as_expected),
            suites,
        }
    }

    /// The report with the wall-time field removed.
    pub fn without_wall_time(&self) -> Self {
        Report {
            wall_time_ms: None,
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("reports serialize");
        out.push('\n');
        out
    }

    pub fn from_json(json: &str) -> serde_json::Result<Self> {
        serde_json::from_str(json)
    }

    /// One line per suite, then a summary line.
    pub fn to_text(&self) -> String {
        let c = &self.config;
        let mut out = format!(
            "model {} dims {}..{} trials {} seed {} tol {:e}\n",
            c.model, c.dim_min, c.dim_max, c.trials, c.seed, c.tol
        );
        for s in &self.suites {
            let verdict = match (s.verdict, s.as_expected()) {
                (Outcome::Pass, true) => "pass".to_owned(),
                (Outcome::Fail, true) => "fail (by design)".to_owned(),
                (v, false) => format!("{v} (UNEXPECTED)"),
            };
            let _ = write!(
                out,
                "{:<18} {:<17} trials {:>4}  failures {:>4}  max residual {:.3e}  {}",
                s.suite.name(),
                verdict,
                s.trials,
                s.failures,
                s.max_residual,
                s.anchor
            );
            if let Some(note) = s.counterexample.as_ref().and_then(|c| c.note.as_ref()) {
                let _ = write!(out, "  [{note}]");
            }
            out.push('\n');
        }
        let unexpected = self.suites.iter().filter(|s| !s.as_expected()).count();
        let _ = write!(
            out,
            "{} suites, {} unexpected",
            self.suites.len(),
            unexpected
        );
        if let Some(ms) = self.wall_time_ms {
            let _ = write!(out, ", {ms} ms");
        }
        out.push('\n');
        out
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Text => self.to_text(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Model;

    fn sample() -> Report {
        let config = SuiteConfig::new(Model::FinRel);
        let suites = vec![
            SuiteReport::new(SuiteId::AxiomD, Outcome::Pass, 200, 0, 0.0, None),
            SuiteReport::new(
                SuiteId::ScalarField,
                Outcome::Fail,
                1,
                1,
                1.0,
                Some(Counterexample {
                    note: Some("no x with 1 + x = 0".into()),
                    morphisms: vec![MorphismRecord {
                        dom: 1,
                        cod: 1,
                        matrix: "1 1 bool\n1".into(),
                    }],
                }),
            ),
        ];
        Report::new(config, suites)
    }

    #[test]
    fn verdict_follows_failures() {
        let r = sample();
        assert_eq!(r.suites[0].verdict, Outcome::Pass);
        assert_eq!(r.suites[1].verdict, Outcome::Fail);
        assert!(r.all_expected);
    }

    #[test]
    fn json_round_trips() {
        let mut r = sample();
        r.wall_time_ms = Some(12);
        r.suites[0].max_residual = 1.234_567_890_123_456_7e-13;
        assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
    }

    #[test]
    fn infinite_residuals_saturate() {
        let s = SuiteReport::new(SuiteId::AxiomD, Outcome::Pass, 1, 1, f64::INFINITY, None);
        assert_eq!(s.max_residual, f64::MAX);
    }

    #[test]
    fn wall_time_is_the_only_difference() {
        let mut a = sample();
        let mut b = sample();
        a.wall_time_ms = Some(5);
        b.wall_time_ms = Some(900);
        assert_ne!(a.to_json(), b.to_json());
        assert_eq!(
            a.without_wall_time().to_json(),
            b.without_wall_time().to_json()
        );
    }

    #[test]
    fn empty_report_is_valid_json() {
        let mut config = SuiteConfig::new(Model::FdHilbReal);
        config.suites.clear();
        let r = Report::new(config, Vec::new());
        assert!(r.all_expected);
        let value: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(value["suites"], serde_json::json!([]));
    }

    #[test]
    fn text_has_one_line_per_suite() {
        let text = sample().to_text();
        assert_eq!(text.lines().count(), 2 + 2);
        assert!(text.contains("fail (by design)"));
        assert!(text.contains("[no x with 1 + x = 0]"));
    }
}
