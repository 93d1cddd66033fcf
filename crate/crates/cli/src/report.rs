//! Report envelope and serialization. JSON is the canonical machine format;
//! floats print with 17 significant digits so values round-trip exactly, and
//! timing is omitted unless requested so identical configurations produce
//! byte-identical output.

use std::collections::BTreeMap;
use std::io::Write;

use anyhow::Result;
use serde::Serialize;
use serde_json::ser::Formatter;

pub const SCHEMA: &str = "warpspec-report/1";

#[derive(Debug, Serialize)]
pub struct ReportEnvelope<T: Serialize> {
    pub schema: &'static str,
    pub tool_version: &'static str,
    pub command: String,
    pub config: BTreeMap<String, String>,
    pub verdict: String,
    pub report: T,
    pub certificates: BTreeMap<String, String>,
    pub timing_ms: Option<u128>,
}

impl<T: Serialize> ReportEnvelope<T> {
    pub fn new(command: &str, config: BTreeMap<String, String>, verdict: &str, report: T) -> Self {
        Self {
            schema: SCHEMA,
            tool_version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            config,
            verdict: verdict.to_string(),
            report,
            certificates: BTreeMap::new(),
            timing_ms: None,
        }
    }
}

/// Formatter printing every float in scientific notation with 17 significant
/// digits.
struct FullPrecision;

impl Formatter for FullPrecision {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()> {
        write!(writer, "{}", fmt_f64(value))
    }

    fn write_f32<W: ?Sized + Write>(&mut self, writer: &mut W, value: f32) -> std::io::Result<()> {
        write!(writer, "{}", fmt_f64(value as f64))
    }
}

/// 17 significant digits, always a valid JSON number.
pub fn fmt_f64(value: f64) -> String {
    if value == 0.0 {
        return "0.0".into();
    }
    format!("{value:.16e}")
}

/// Serializes any report to full-precision JSON (plus trailing newline).
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, FullPrecision);
    value.serialize(&mut ser)?;
    out.push(b'\n');
    Ok(String::from_utf8(out)?)
}

/// Writes to the output path, or stdout when none is given.
pub fn emit(output: Option<&std::path::Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_formatting_round_trips() {
        for v in [1.0, -0.125, std::f64::consts::PI, 2.0f64.sqrt() / 4.0, 1e-300] {
            let s = fmt_f64(v);
            let back: f64 = s.parse().unwrap();
            assert_eq!(v, back, "{s}");
        }
    }

    #[test]
    fn json_floats_are_full_precision() {
        #[derive(Serialize)]
        struct S {
            x: f64,
        }
        let s = to_json(&S { x: std::f64::consts::PI }).unwrap();
        assert!(s.contains("3.1415926535897931e0"), "{s}");
    }
}
