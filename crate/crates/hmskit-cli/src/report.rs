//! Check records and reports: the JSON the binary emits and the text it
//! prints. Reports are required to be byte-identical across runs with the
//! same flags, so nothing wall-clock- or environment-dependent may land in
//! a serialized field; per-check runtimes are kept in memory for the stderr
//! summary and skipped by the serializer.

use std::fmt;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

/// Outcome of a single check. `Probe` marks a successful numeric probe
/// that is evidence rather than proof; a probe that misses its target is
/// reported as `Fail` like any other miss.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Probe,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // f.pad so width flags in callers take effect
        f.pad(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Probe => "probe",
        })
    }
}

/// Where an expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    /// Evaluated from a closed formula inside the check itself.
    ClosedForm,
    /// Produced by a second, independent computation path.
    IndependentOracle,
    /// A directly stated reference constant.
    Direct,
}

/// One verified claim: what was expected, what came out, and the verdict.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub name: String,
    /// Short plain-language statement of the claim being checked.
    pub anchor: String,
    pub expected_source: Source,
    pub expected: Value,
    pub computed: Value,
    pub status: Status,
    #[serde(skip)]
    pub runtime: f64,
}

/// Builds a record whose status is exact equality of the two values.
pub fn exact_check(
    name: &str,
    anchor: &str,
    source: Source,
    expected: Value,
    body: impl FnOnce() -> Value,
) -> CheckRecord {
    let start = Instant::now();
    let computed = body();
    let status = if computed == expected { Status::Pass } else { Status::Fail };
    CheckRecord {
        name: name.to_string(),
        anchor: anchor.to_string(),
        expected_source: source,
        expected,
        computed,
        status,
        runtime: start.elapsed().as_secs_f64(),
    }
}

/// Builds a record whose body judges itself (tolerance checks).
pub fn judged_check(
    name: &str,
    anchor: &str,
    source: Source,
    expected: Value,
    body: impl FnOnce() -> (Value, bool),
) -> CheckRecord {
    let start = Instant::now();
    let (computed, ok) = body();
    CheckRecord {
        name: name.to_string(),
        anchor: anchor.to_string(),
        expected_source: source,
        expected,
        computed,
        status: if ok { Status::Pass } else { Status::Fail },
        runtime: start.elapsed().as_secs_f64(),
    }
}

/// Like `judged_check`, but success is reported as `Probe`.
pub fn probe_check(
    name: &str,
    anchor: &str,
    source: Source,
    expected: Value,
    body: impl FnOnce() -> (Value, bool),
) -> CheckRecord {
    let mut rec = judged_check(name, anchor, source, expected, body);
    if rec.status == Status::Pass {
        rec.status = Status::Probe;
    }
    rec
}

/// A full run of one subcommand.
#[derive(Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub parameters: Value,
    pub checks: Vec<CheckRecord>,
}

pub const SCHEMA_VERSION: u32 = 1;

impl Report {
    pub fn new(command: &str, parameters: Value) -> Report {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            parameters,
            checks: Vec::new(),
        }
    }

    pub fn extend(&mut self, checks: Vec<CheckRecord>) {
        self.checks.extend(checks);
    }

    pub fn failed(&self) -> usize {
        self.checks.iter().filter(|c| c.status == Status::Fail).count()
    }

    /// 0 when every non-probe check passes, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.failed() == 0 {
            0
        } else {
            1
        }
    }

    pub fn total_runtime(&self) -> f64 {
        self.checks.iter().map(|c| c.runtime).sum()
    }

    /// The serialized report; stable key order, trailing newline.
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    /// Human listing: one line per check, expected/computed detail for
    /// anything that is not a plain pass, then a tally. No timings here;
    /// those go to stderr so the printed report stays deterministic.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for check in &self.checks {
            out.push_str(&format!("[{:<5}] {:<width$}  {}\n", check.status, check.name, check.anchor));
            if check.status != Status::Pass {
                out.push_str(&format!("         expected ({}): {}\n", source_label(check.expected_source), check.expected));
                out.push_str(&format!("         computed: {}\n", check.computed));
            }
        }
        let passed = self.checks.iter().filter(|c| c.status == Status::Pass).count();
        let probes = self.checks.iter().filter(|c| c.status == Status::Probe).count();
        out.push_str(&format!(
            "{} checks: {} pass, {} fail, {} probe\n",
            self.checks.len(),
            passed,
            self.failed(),
            probes
        ));
        out
    }
}

fn source_label(source: Source) -> &'static str {
    match source {
        Source::ClosedForm => "closed-form",
        Source::IndependentOracle => "independent-oracle",
        Source::Direct => "direct",
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn serialization_is_deterministic_and_skips_runtime() {
        let mut report = Report::new("hh", json!({"n": 2}));
        report.extend(vec![exact_check(
            "sample",
            "a sample claim",
            Source::Direct,
            json!({"dim": 1}),
            || json!({"dim": 1}),
        )]);
        let a = report.to_json();
        assert!(!a.contains("runtime"));
        report.checks[0].runtime = 123.0;
        let b = report.to_json();
        assert_eq!(a, b, "runtime must not leak into the serialized report");
        assert!(a.contains("\"schema_version\": 1"));
        assert!(a.ends_with('\n'));
    }

    #[test]
    fn exit_codes_follow_failures() {
        let mut report = Report::new("hh", json!({}));
        assert_eq!(report.exit_code(), 0);
        report.extend(vec![probe_check("p", "probe", Source::Direct, json!(1), || (json!(2), true))]);
        assert_eq!(report.exit_code(), 0, "probes never gate the exit code");
        report.extend(vec![exact_check("q", "miss", Source::Direct, json!(1), || json!(2))]);
        assert_eq!(report.exit_code(), 1);
        assert_eq!(report.failed(), 1);
    }

    #[test]
    fn text_rendering_details_only_misses() {
        let mut report = Report::new("hh", json!({}));
        report.extend(vec![
            exact_check("good", "fine", Source::ClosedForm, json!(3), || json!(3)),
            exact_check("bad", "broken", Source::Direct, json!(3), || json!(4)),
        ]);
        let text = report.render_text();
        assert!(text.contains("[pass ] good"));
        assert!(text.contains("[FAIL ] bad"));
        assert!(text.contains("expected (direct): 3"));
        assert!(text.contains("2 checks: 1 pass, 1 fail, 0 probe"));
    }
}
