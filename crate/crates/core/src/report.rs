//! Pass/fail records shared by every verification, and fixed-precision
//! serialization helpers.
//!
//! Floats go into JSON with 17 significant digits (`{:.16e}`), so repeated
//! runs produce byte-identical files.

use std::fmt::Write as _;

use num_complex::Complex64;
use serde::ser::{Error as _, SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

fn json_number(x: f64) -> std::result::Result<Box<RawValue>, serde_json::Error> {
    if x.is_finite() {
        RawValue::from_string(format!("{x:.16e}"))
    } else {
        RawValue::from_string(format!("\"{x}\""))
    }
}

/// `serialize_with` helper: one float at 17 significant digits.
pub fn sig17<S: Serializer>(x: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    json_number(*x).map_err(S::Error::custom)?.serialize(s)
}

/// `serialize_with` helper: a list of floats.
pub fn sig17_vec<S: Serializer>(xs: &[f64], s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for &x in xs {
        seq.serialize_element(&json_number(x).map_err(S::Error::custom)?)?;
    }
    seq.end()
}

/// `serialize_with` helper: a complex number as `{"re": .., "im": ..}`.
pub fn sig17_complex<S: Serializer>(z: &Complex64, s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut st = s.serialize_struct("Complex", 2)?;
    st.serialize_field("re", &json_number(z.re).map_err(S::Error::custom)?)?;
    st.serialize_field("im", &json_number(z.im).map_err(S::Error::custom)?)?;
    st.end()
}

/// A named number attached to a check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NamedValue {
    pub name: String,
    #[serde(serialize_with = "sig17")]
    pub value: f64,
}

/// Outcome of one verified claim.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub claim: String,
    pub passed: bool,
    pub detail: String,
    pub values: Vec<NamedValue>,
}

impl Check {
    pub fn new(
        name: impl Into<String>,
        claim: impl Into<String>,
        passed: bool,
        detail: impl Into<String>,
    ) -> Self {
        Check {
            name: name.into(),
            claim: claim.into(),
            passed,
            detail: detail.into(),
            values: Vec::new(),
        }
    }

    pub fn with_value(mut self, name: impl Into<String>, value: f64) -> Self {
        self.values.push(NamedValue {
            name: name.into(),
            value,
        });
        self
    }
}

/// Ordered list of checks from one verification.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct ClaimReport {
    pub checks: Vec<Check>,
}

impl ClaimReport {
    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: ClaimReport) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// `name,passed,detail`, one row per check.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("name,passed,detail\n");
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{},{},{}",
                csv_field(&c.name),
                c.passed,
                csv_field(&c.detail)
            );
        }
        out
    }

    /// Plain-text table, numbers at 12 significant digits.
    pub fn to_table(&self) -> String {
        let width = self
            .checks
            .iter()
            .map(|c| c.name.len())
            .max()
            .unwrap_or(4)
            .max(4);
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{status}  {:width$}  {}", c.name, c.detail);
            for v in &c.values {
                let _ = writeln!(out, "      {:width$}  {} = {:.11e}", "", v.name, v.value);
            }
        }
        out
    }
}

/// Quotes a CSV field when it contains a separator, quote or newline.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
