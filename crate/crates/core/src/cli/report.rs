use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

/// Whether failures count. Probe runs (a proper but non-primitive root of
/// unity) only record what they observe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Assert,
    Probe,
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceResult {
    pub label: String,
    pub params: Value,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
}

impl InstanceResult {
    pub fn new(label: impl Into<String>, params: Value, passed: bool) -> Self {
        InstanceResult {
            label: label.into(),
            params,
            passed,
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: Value) -> Self {
        self.detail = Some(detail);
        self
    }
}

/// The outcome of one named suite. Reports contain no timing so that equal
/// parameters and seed give byte-identical output.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub mode: Mode,
    pub parameters: Value,
    pub passed: bool,
    pub instances: Vec<InstanceResult>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(suite: &str, mode: Mode, parameters: Value, instances: Vec<InstanceResult>) -> Self {
        let passed = instances.iter().all(|i| i.passed);
        VerificationReport {
            suite: suite.to_string(),
            mode,
            parameters,
            passed,
            instances,
            notes: Vec::new(),
        }
    }

    pub fn note(mut self, s: impl Into<String>) -> Self {
        self.notes.push(s.into());
        self
    }

    /// True if this report should turn the exit code to 1.
    pub fn is_violation(&self) -> bool {
        self.mode == Mode::Assert && !self.passed
    }

    pub fn verdict(&self) -> &'static str {
        match (self.mode, self.passed) {
            (Mode::Probe, _) => "PROBE",
            (Mode::Assert, true) => "PASS",
            (Mode::Assert, false) => "FAIL",
        }
    }
}

pub fn render_json(reports: &[VerificationReport]) -> String {
    let v = if reports.len() == 1 {
        serde_json::to_value(&reports[0])
    } else {
        serde_json::to_value(reports)
    }
    .expect("reports serialize");
    let mut s = serde_json::to_string_pretty(&v).expect("json");
    s.push('\n');
    s
}

pub fn render_pretty(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let ok = r.instances.iter().filter(|i| i.passed).count();
        let _ = writeln!(
            out,
            "{} {}: {}/{} instances",
            r.verdict(),
            r.suite,
            ok,
            r.instances.len()
        );
        for i in &r.instances {
            let mark = match (r.mode, i.passed) {
                (Mode::Probe, true) => "  holds",
                (Mode::Probe, false) => "  fails",
                (Mode::Assert, true) => "  ok   ",
                (Mode::Assert, false) => "  FAIL ",
            };
            let _ = write!(out, "{mark} {}", i.label);
            if let Some(d) = &i.detail {
                let _ = write!(out, "  {d}");
            }
            out.push('\n');
        }
        for n in &r.notes {
            let _ = writeln!(out, "  note: {n}");
        }
    }
    out
}

pub fn render_csv(reports: &[VerificationReport]) -> String {
    let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
    w.write_record(["suite", "mode", "instance", "passed", "detail"])
        .expect("in-memory write");
    for r in reports {
        let mode = if r.mode == Mode::Assert { "assert" } else { "probe" };
        for i in &r.instances {
            let detail = i.detail.as_ref().map(|d| d.to_string()).unwrap_or_default();
            w.write_record([
                r.suite.as_str(),
                mode,
                i.label.as_str(),
                if i.passed { "true" } else { "false" },
                detail.as_str(),
            ])
            .expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}
