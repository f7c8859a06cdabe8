//! Verification reports and their deterministic JSON form.
//!
//! Keys are sorted, floats are written in scientific notation with 17
//! significant digits, and non-finite values become `null`, so equal reports
//! serialize to equal bytes.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde_json::Value;

use super::{FixedPointCandidate, Metric, OscillationProfile};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct CandidateRecord {
    /// `(x, y)` or `(x, y, z)`.
    pub coords: Vec<f64>,
    pub residual: f64,
    pub margin: f64,
}

impl<P: Metric> From<&FixedPointCandidate<P>> for CandidateRecord {
    fn from(c: &FixedPointCandidate<P>) -> Self {
        CandidateRecord {
            coords: c.location.coords(),
            residual: c.residual,
            margin: c.margin,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct VerificationReport {
    /// Source of the boundary map's lift.
    pub lift: String,
    pub strategy: String,
    pub degree: i64,
    pub boundary_error: f64,
    pub candidates: Vec<CandidateRecord>,
    pub oscillation: Vec<(f64, f64)>,
    pub flags: Vec<String>,
}

impl VerificationReport {
    pub fn set_oscillation<P>(&mut self, profile: &OscillationProfile<P>) {
        self.oscillation = profile.entries.clone();
    }

    pub fn add_flag(&mut self, flag: &str) {
        if !self.flags.iter().any(|f| f == flag) {
            self.flags.push(flag.to_string());
        }
    }

    pub fn to_json(&self) -> String {
        let candidates = self
            .candidates
            .iter()
            .map(|c| {
                let mut o = BTreeMap::new();
                for (name, v) in ["x", "y", "z"].iter().zip(&c.coords) {
                    o.insert(name.to_string(), Json::Float(*v));
                }
                o.insert("residual".into(), Json::Float(c.residual));
                o.insert("margin".into(), Json::Float(c.margin));
                Json::Object(o)
            })
            .collect();
        let oscillation = self
            .oscillation
            .iter()
            .map(|&(d, o)| Json::Array(vec![Json::Float(d), Json::Float(o)]))
            .collect();
        let mut root = BTreeMap::new();
        root.insert("boundary_error".into(), Json::Float(self.boundary_error));
        root.insert("candidates".into(), Json::Array(candidates));
        root.insert("degree".into(), Json::Int(self.degree));
        root.insert(
            "flags".into(),
            Json::Array(self.flags.iter().map(|f| Json::Str(f.clone())).collect()),
        );
        root.insert("lift".into(), Json::Str(self.lift.clone()));
        root.insert("oscillation".into(), Json::Array(oscillation));
        root.insert("strategy".into(), Json::Str(self.strategy.clone()));
        let mut out = String::new();
        Json::Object(root).write(&mut out, 0);
        out.push('\n');
        out
    }
}

/// Formats a float for reports: `{:.16e}`, or `null` when not finite.
pub fn format_float(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        "null".to_string()
    }
}

enum Json {
    Int(i64),
    Float(f64),
    Str(String),
    Array(Vec<Json>),
    Object(BTreeMap<String, Json>),
}

impl Json {
    fn write(&self, out: &mut String, indent: usize) {
        let pad = |out: &mut String, n: usize| out.extend(std::iter::repeat_n(' ', n));
        match self {
            Json::Int(i) => write!(out, "{i}").unwrap(),
            Json::Float(x) => out.push_str(&format_float(*x)),
            Json::Str(s) => out.push_str(&Value::String(s.clone()).to_string()),
            Json::Array(items) if items.is_empty() => out.push_str("[]"),
            Json::Array(items) if items.iter().all(|i| matches!(i, Json::Int(_) | Json::Float(_))) => {
                out.push('[');
                for (k, item) in items.iter().enumerate() {
                    if k > 0 {
                        out.push_str(", ");
                    }
                    item.write(out, indent);
                }
                out.push(']');
            }
            Json::Array(items) => {
                out.push_str("[\n");
                for (k, item) in items.iter().enumerate() {
                    pad(out, indent + 2);
                    item.write(out, indent + 2);
                    out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
                }
                pad(out, indent);
                out.push(']');
            }
            Json::Object(map) if map.is_empty() => out.push_str("{}"),
            Json::Object(map) => {
                out.push_str("{\n");
                for (k, (key, value)) in map.iter().enumerate() {
                    pad(out, indent + 2);
                    out.push_str(&Value::String(key.clone()).to_string());
                    out.push_str(": ");
                    value.write(out, indent + 2);
                    out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
                }
                pad(out, indent);
                out.push('}');
            }
        }
    }
}

fn schema_error(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(format!("report schema: {}", msg.into()))
}

fn is_number_or_null(v: &Value) -> bool {
    v.is_number() || v.is_null()
}

/// Checks a report against the schema
/// `{degree: int, boundary_error: float, candidates: [{x, y, [z], residual, margin}],
/// oscillation: [[delta, osc]], flags: [string], lift: string, strategy: string}`.
pub fn validate_report_json(text: &str) -> Result<()> {
    let v: Value = serde_json::from_str(text).map_err(|e| schema_error(e.to_string()))?;
    let obj = v
        .as_object()
        .ok_or_else(|| schema_error("top level is not an object"))?;
    let expected = [
        "boundary_error",
        "candidates",
        "degree",
        "flags",
        "lift",
        "oscillation",
        "strategy",
    ];
    for key in obj.keys() {
        if !expected.contains(&key.as_str()) {
            return Err(schema_error(format!("unexpected key `{key}`")));
        }
    }
    let get = |k: &str| obj.get(k).ok_or_else(|| schema_error(format!("missing `{k}`")));
    if !get("degree")?.is_i64() {
        return Err(schema_error("`degree` is not an integer"));
    }
    if !is_number_or_null(get("boundary_error")?) {
        return Err(schema_error("`boundary_error` is not a number"));
    }
    for k in ["lift", "strategy"] {
        if !get(k)?.is_string() {
            return Err(schema_error(format!("`{k}` is not a string")));
        }
    }
    let flags = get("flags")?
        .as_array()
        .ok_or_else(|| schema_error("`flags` is not an array"))?;
    if !flags.iter().all(Value::is_string) {
        return Err(schema_error("`flags` must hold strings"));
    }
    let osc = get("oscillation")?
        .as_array()
        .ok_or_else(|| schema_error("`oscillation` is not an array"))?;
    for e in osc {
        match e.as_array() {
            Some(pair) if pair.len() == 2 && pair.iter().all(is_number_or_null) => {}
            _ => return Err(schema_error("oscillation entries must be [delta, osc]")),
        }
    }
    let cands = get("candidates")?
        .as_array()
        .ok_or_else(|| schema_error("`candidates` is not an array"))?;
    for c in cands {
        let c = c
            .as_object()
            .ok_or_else(|| schema_error("candidate is not an object"))?;
        for k in ["x", "y", "residual", "margin"] {
            if !c.get(k).is_some_and(is_number_or_null) {
                return Err(schema_error(format!("candidate lacks numeric `{k}`")));
            }
        }
        if c.keys()
            .any(|k| !["x", "y", "z", "residual", "margin"].contains(&k.as_str()))
        {
            return Err(schema_error("unexpected candidate key"));
        }
    }
    Ok(())
}
