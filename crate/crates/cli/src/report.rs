//! Report documents and their text, JSON and CSV renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Match,
    Mismatch,
    NoFormula,
}

impl Verdict {
    pub fn of(count: u64, expected: Option<u64>) -> Self {
        match expected {
            None => Verdict::NoFormula,
            Some(e) if e == count => Verdict::Match,
            Some(_) => Verdict::Mismatch,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
            Verdict::NoFormula => "no-formula",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub groupoid: String,
    pub kind: String,
    pub n: usize,
    pub count: u64,
    pub expected: Option<u64>,
    pub verdict: Verdict,
    pub millis: Option<u64>,
    /// What `expected` was computed from, for consistency checks.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub check: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub version: String,
    pub command: String,
    pub entries: Vec<ReportEntry>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

impl ReportDocument {
    pub fn new(command: impl Into<String>) -> Self {
        ReportDocument { version: VERSION.to_string(), command: command.into(), entries: Vec::new() }
    }

    pub fn mismatches(&self) -> usize {
        self.entries.iter().filter(|e| e.verdict == Verdict::Mismatch).count()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["groupoid", "kind", "n", "count", "expected", "verdict"]).unwrap();
        for e in &self.entries {
            let expected = e.expected.map(|x| x.to_string()).unwrap_or_default();
            w.write_record([
                e.groupoid.as_str(),
                e.kind.as_str(),
                &e.n.to_string(),
                &e.count.to_string(),
                &expected,
                e.verdict.name(),
            ])
            .unwrap();
        }
        String::from_utf8(w.into_inner().unwrap()).unwrap()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("# {}\n", self.command);
        let width = self.entries.iter().map(|e| e.groupoid.len()).max().unwrap_or(8).max(8);
        let _ = writeln!(out, "{:<width$}  kind   n  {:>10}  {:>10}  verdict", "groupoid", "count", "expected");
        for e in &self.entries {
            let expected = e.expected.map(|x| x.to_string()).unwrap_or_else(|| "-".into());
            let _ = write!(
                out,
                "{:<width$}  {:<5} {:>2}  {:>10}  {:>10}  {}",
                e.groupoid,
                e.kind,
                e.n,
                e.count,
                expected,
                e.verdict.name()
            );
            if let Some(c) = &e.check {
                let _ = write!(out, "  [{c}]");
            }
            if let Some(ms) = e.millis {
                let _ = write!(out, "  {ms} ms");
            }
            out.push('\n');
        }
        let (m, total) = (self.mismatches(), self.entries.len());
        let _ = writeln!(out, "{} of {total} checks mismatched", m);
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
        }
    }
}
