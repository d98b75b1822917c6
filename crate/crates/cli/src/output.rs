//! Serializable results and their text, JSON and CSV renderings.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use zetalab_core::identities::ResidualRecord;
use zetalab_core::{BigRational, ErrorBound, PiPowerExact};

use crate::args::Format;

/// Exact rationals travel as `"p/q"` strings.
mod rational_string {
    use serde::{de, Deserialize, Deserializer, Serializer};
    use zetalab_core::{parse_rational, BigRational};

    pub fn serialize<S: Serializer>(value: &BigRational, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(value)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<BigRational, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_rational(&text).map_err(de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BernoulliEntry {
    pub n: usize,
    #[serde(with = "rational_string")]
    pub value: BigRational,
}

/// A closed form together with its decimal expansion.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExactValue {
    pub name: String,
    pub exact: PiPowerExact,
    pub decimal: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Approximation {
    pub name: String,
    pub method: String,
    pub re: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub im: Option<String>,
    pub error: ErrorBound,
    pub params: BTreeMap<String, u64>,
    /// Outcome of the Euler-product convergence check, where one was run.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub converged: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EulerGammaValue {
    pub m: u64,
    pub method: String,
    pub value: String,
    pub error: ErrorBound,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub passed: usize,
    pub failed: usize,
    pub excluded: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyOutput {
    pub reports: Vec<ResidualRecord>,
    pub summary: VerifySummary,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub values: Vec<ExactValue>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PrimesOutput {
    pub limit: u64,
    pub count: usize,
    pub primes: Vec<u64>,
}

/// Everything a command can print.
#[derive(Clone, Debug, PartialEq)]
pub enum Document {
    Bernoulli(Vec<BernoulliEntry>),
    Exact(ExactValue),
    Approximation(Approximation),
    EulerGamma(EulerGammaValue),
    Verify(VerifyOutput),
    Report(Report),
    Primes(PrimesOutput),
}

impl Document {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text(),
            Format::Json => {
                let mut json = self.json();
                json.push('\n');
                json
            }
            Format::Csv => self.csv(),
        }
    }

    fn json(&self) -> String {
        let rendered = match self {
            Document::Bernoulli(rows) => serde_json::to_string_pretty(rows),
            Document::Exact(v) => serde_json::to_string_pretty(v),
            Document::Approximation(v) => serde_json::to_string_pretty(v),
            Document::EulerGamma(v) => serde_json::to_string_pretty(v),
            Document::Verify(v) => serde_json::to_string_pretty(v),
            Document::Report(v) => serde_json::to_string_pretty(v),
            Document::Primes(v) => serde_json::to_string_pretty(v),
        };
        rendered.expect("output types serialize")
    }

    fn text(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        match self {
            Document::Bernoulli(rows) => {
                for row in rows {
                    line(format!("{} {}", row.n, row.value));
                }
            }
            Document::Exact(v) => exact_lines(v).into_iter().for_each(line),
            Document::Approximation(v) => {
                let value = match &v.im {
                    Some(im) => format!("{} + {} i", v.re, im),
                    None => v.re.clone(),
                };
                line(format!("{} ~ {}", v.name, value));
                line(format!("error <= {} ({})", format_bound(v.error.bound), v.error.kind));
                if v.params.is_empty() {
                    line(format!("method {}", v.method));
                } else {
                    let params: Vec<String> = v.params.iter().map(|(k, n)| format!("{k}={n}")).collect();
                    line(format!("method {} ({})", v.method, params.join(", ")));
                }
                if let Some(converged) = v.converged {
                    let verdict = if converged { "passed" } else { "not passed" };
                    line(format!("convergence check {verdict}"));
                }
            }
            Document::EulerGamma(v) => {
                line(format!("euler-gamma(m={}, {}) ~ {}", v.m, v.method, v.value));
                line(format!("error ~ {} ({})", format_bound(v.error.bound), v.error.kind));
            }
            Document::Verify(v) => {
                for r in &v.reports {
                    let residual = r.residual.as_deref().unwrap_or("-");
                    let threshold = r.threshold.map(format_bound).unwrap_or_else(|| "-".into());
                    let mut text = format!(
                        "{:<22} {:>10}  {:<8} residual {:<14} threshold {}",
                        r.identity, r.argument, r.status, residual, threshold
                    );
                    if let Some(note) = &r.note {
                        text.push_str(&format!("  ({note})"));
                    }
                    line(text);
                }
                let s = &v.summary;
                line(format!("{} passed, {} failed, {} excluded", s.passed, s.failed, s.excluded));
            }
            Document::Report(r) => r.values.iter().flat_map(exact_lines).for_each(line),
            Document::Primes(p) => {
                for prime in &p.primes {
                    line(prime.to_string());
                }
            }
        }
        out
    }

    fn csv(&self) -> String {
        let (header, rows): (&[&str], Vec<Vec<String>>) = match self {
            Document::Bernoulli(rows) => {
                (&["n", "value"], rows.iter().map(|r| vec![r.n.to_string(), r.value.to_string()]).collect())
            }
            Document::Exact(v) => (&["name", "exact", "decimal"], vec![exact_row(v)]),
            Document::Report(r) => (&["name", "exact", "decimal"], r.values.iter().map(exact_row).collect()),
            Document::Approximation(v) => (
                &["name", "method", "re", "im", "error", "error_kind", "params", "converged"],
                vec![vec![
                    v.name.clone(),
                    v.method.clone(),
                    v.re.clone(),
                    v.im.clone().unwrap_or_default(),
                    format_bound(v.error.bound),
                    v.error.kind.to_string(),
                    join_params(&v.params),
                    v.converged.map(|c| c.to_string()).unwrap_or_default(),
                ]],
            ),
            Document::EulerGamma(v) => (
                &["m", "method", "value", "error", "error_kind"],
                vec![vec![
                    v.m.to_string(),
                    v.method.clone(),
                    v.value.clone(),
                    format_bound(v.error.bound),
                    v.error.kind.to_string(),
                ]],
            ),
            Document::Verify(v) => (
                &["identity", "argument", "lhs", "rhs", "residual", "params", "threshold", "status", "note"],
                v.reports
                    .iter()
                    .map(|r| {
                        vec![
                            r.identity.clone(),
                            r.argument.clone(),
                            r.lhs.clone().unwrap_or_default(),
                            r.rhs.clone().unwrap_or_default(),
                            r.residual.clone().unwrap_or_default(),
                            join_params(&r.params),
                            r.threshold.map(format_bound).unwrap_or_default(),
                            r.status.clone(),
                            r.note.clone().unwrap_or_default(),
                        ]
                    })
                    .collect(),
            ),
            Document::Primes(p) => (&["prime"], p.primes.iter().map(|q| vec![q.to_string()]).collect()),
        };
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(header).expect("in-memory write");
        for row in rows {
            writer.write_record(&row).expect("in-memory write");
        }
        String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 fields")
    }
}

fn exact_lines(v: &ExactValue) -> Vec<String> {
    vec![format!("{} = {}", v.name, v.exact), format!("{} ~ {}", v.name, v.decimal)]
}

fn exact_row(v: &ExactValue) -> Vec<String> {
    vec![v.name.clone(), v.exact.to_string(), v.decimal.clone()]
}

fn join_params(params: &BTreeMap<String, u64>) -> String {
    params.iter().map(|(k, n)| format!("{k}={n}")).collect::<Vec<_>>().join(";")
}

fn format_bound(bound: f64) -> String {
    if bound == 0.0 {
        "0".to_string()
    } else {
        format!("{bound:.3e}")
    }
}
