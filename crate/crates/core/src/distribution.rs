//! Finite discrete distributions: parsing, validation and smoothing.
//!
//! Two file formats are accepted. CSV has one `index,probability` record per
//! line with indices `0..n-1` in ascending order (LF or CRLF). JSON is an
//! object `{"probs": [...], "label": "..."}` where `label` is optional.

use std::io::Read;

use serde::{Deserialize, Serialize};

use crate::format::{format_sig, to_json_string, JSON_DIGITS};
use crate::summation::CompensatedSum;
use crate::{Error, Result};

/// Default tolerance on `|sum - 1|`.
pub const SUM_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    /// Guesses the format from the first non-whitespace byte.
    pub fn sniff(bytes: &[u8]) -> Format {
        match bytes.iter().find(|b| !b.is_ascii_whitespace()) {
            Some(b'{') => Format::Json,
            _ => Format::Csv,
        }
    }
}

/// Probabilities over an indexed support, immutable once built.
///
/// Entries are finite and non-negative and there is at least one of them.
/// Normalization is not enforced here; see [`validate`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Distribution {
    probs: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

impl Distribution {
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::domain("distribution", "distribution has no entries"));
        }
        for (i, &p) in probs.iter().enumerate() {
            if !p.is_finite() {
                return Err(Error::domain_at(
                    "distribution",
                    i,
                    format!("entry {i} is not finite ({p})"),
                ));
            }
            if p < 0.0 {
                return Err(Error::domain_at(
                    "distribution",
                    i,
                    format!("entry {i} is negative ({p})"),
                ));
            }
        }
        Ok(Distribution { probs, label: None })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// The uniform distribution on `n >= 1` points.
    pub fn uniform(n: usize) -> Result<Self> {
        Distribution::new(vec![1.0 / n as f64; n])
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.probs
            .iter()
            .copied()
            .collect::<CompensatedSum>()
            .value()
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.probs.iter().all(|&p| p > 0.0)
    }

    /// Divides every entry by the total mass.
    pub fn renormalized(&self) -> Result<Self> {
        let total = self.sum();
        if total <= 0.0 {
            return Err(Error::domain(
                "renormalize",
                "distribution has zero total mass",
            ));
        }
        Ok(Distribution {
            probs: self.probs.iter().map(|p| p / total).collect(),
            label: self.label.clone(),
        })
    }

    /// `index,probability` lines at 17 significant digits.
    pub fn to_csv(&self) -> String {
        self.probs
            .iter()
            .enumerate()
            .map(|(i, p)| format!("{i},{}\n", format_sig(*p, JSON_DIGITS)))
            .collect()
    }

    pub fn to_json(&self) -> String {
        to_json_string(self).expect("distribution serializes")
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonDistribution {
    probs: Vec<f64>,
    label: Option<String>,
}

/// Reads a distribution without renormalizing it.
pub fn parse_distribution<R: Read>(mut source: R, format: Format) -> Result<Distribution> {
    let mut bytes = Vec::new();
    source.read_to_end(&mut bytes)?;
    match format {
        Format::Csv => parse_csv(&bytes),
        Format::Json => parse_json(&bytes),
    }
}

fn parse_csv(bytes: &[u8]) -> Result<Distribution> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(bytes);
    let mut probs = Vec::new();
    let mut record = csv::StringRecord::new();
    loop {
        let more = reader.read_record(&mut record).map_err(|e| {
            let (line, column) = e
                .position()
                .map(|p| (p.line() as usize, 1))
                .unwrap_or((0, 0));
            Error::Parse {
                line,
                column,
                message: e.to_string(),
            }
        })?;
        if !more {
            break;
        }
        let line = record.position().map(|p| p.line() as usize).unwrap_or(0);
        if record.len() == 1 && record[0].is_empty() {
            continue;
        }
        if record.len() != 2 {
            return Err(Error::Parse {
                line,
                column: 1,
                message: format!(
                    "expected `index,probability`, found {} fields",
                    record.len()
                ),
            });
        }
        let index: usize = record[0].parse().map_err(|_| Error::Parse {
            line,
            column: 1,
            message: format!("invalid index `{}`", &record[0]),
        })?;
        if index != probs.len() {
            return Err(Error::Parse {
                line,
                column: 1,
                message: format!("expected index {}, found {index}", probs.len()),
            });
        }
        let value: f64 = record[1].parse().map_err(|_| Error::Parse {
            line,
            column: record[0].len() + 2,
            message: format!("invalid probability `{}`", &record[1]),
        })?;
        if !value.is_finite() {
            return Err(Error::Parse {
                line,
                column: record[0].len() + 2,
                message: format!("probability `{}` is not finite", &record[1]),
            });
        }
        probs.push(value);
    }
    Distribution::new(probs)
}

fn parse_json(bytes: &[u8]) -> Result<Distribution> {
    let parsed: JsonDistribution = serde_json::from_slice(bytes).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let d = Distribution::new(parsed.probs)?;
    Ok(match parsed.label {
        Some(label) => d.with_label(label),
        None => d,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationReport {
    pub sum: f64,
    pub min_entry: f64,
    pub has_zero: bool,
    pub ok: bool,
    pub messages: Vec<String>,
}

/// Reports on normalization and zeros; never fails.
pub fn validate(d: &Distribution, sum_tol: f64) -> ValidationReport {
    let sum = d.sum();
    let min_entry = d.probs.iter().copied().fold(f64::INFINITY, f64::min);
    let has_zero = d.probs.contains(&0.0);
    let mut messages = Vec::new();
    let sum_ok = (sum - 1.0).abs() <= sum_tol;
    if !sum_ok {
        messages.push(format!("entries sum to {sum}, not 1 within {sum_tol:e}"));
    }
    if min_entry < 0.0 {
        messages.push(format!("negative entry {min_entry}"));
    }
    if has_zero {
        let zeros = d.probs.iter().filter(|&&p| p == 0.0).count();
        messages.push(format!(
            "{zeros} zero entr{}; ratio-based divergences may be undefined",
            if zeros == 1 { "y" } else { "ies" }
        ));
    }
    ValidationReport {
        sum,
        min_entry,
        has_zero,
        ok: sum_ok && min_entry >= 0.0,
        messages,
    }
}

/// Additive smoothing `(p_i + eps) / (1 + n eps)`.
pub fn smooth(d: &Distribution, epsilon: f64) -> Result<Distribution> {
    if !(epsilon.is_finite() && epsilon > 0.0) {
        return Err(Error::domain(
            "smooth",
            format!("epsilon must be positive, got {epsilon}"),
        ));
    }
    let denom = 1.0 + d.len() as f64 * epsilon;
    Ok(Distribution {
        probs: d.probs.iter().map(|p| (p + epsilon) / denom).collect(),
        label: d.label.clone(),
    })
}
