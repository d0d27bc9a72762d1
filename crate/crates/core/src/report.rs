//! Verification reports and deterministic JSON output.

use std::io;

use serde::{Serialize, Serializer};
use serde_json::{Map, Value};

/// Residuals that differ only by round-off are not evidence of divergence; a
/// step is accepted as non-increasing when it stays below this floor.
pub const NOISE_FLOOR: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Outcome of one identity or inequality check over one or more truncation sizes.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub identity_name: String,
    pub parameters: Map<String, Value>,
    pub dims_tested: Vec<usize>,
    pub block: usize,
    pub residuals: Vec<f64>,
    pub tolerance: f64,
    pub noise_floor: f64,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Map::is_empty")]
    pub diagnostics: Map<String, Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(identity_name: &str, block: usize, tolerance: f64) -> Self {
        Self {
            identity_name: identity_name.to_string(),
            parameters: Map::new(),
            dims_tested: Vec::new(),
            block,
            residuals: Vec::new(),
            tolerance,
            noise_floor: NOISE_FLOOR,
            verdict: Verdict::Fail,
            diagnostics: Map::new(),
            notes: Vec::new(),
        }
    }

    pub fn set_parameter(&mut self, name: &str, value: f64) {
        self.parameters
            .insert(name.to_string(), finite_or_string(value));
    }

    pub fn push_residual(&mut self, dim: usize, residual: f64) {
        self.dims_tested.push(dim);
        self.residuals.push(residual);
    }

    pub fn set_diagnostic(&mut self, name: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).unwrap_or(Value::Null);
        self.diagnostics.insert(name.to_string(), v);
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn final_residual(&self) -> f64 {
        self.residuals.last().copied().unwrap_or(f64::NAN)
    }

    /// Residuals over the last three dimensions never grow beyond the noise floor.
    pub fn is_converging(&self) -> bool {
        let n = self.residuals.len();
        let tail = &self.residuals[n.saturating_sub(3)..];
        tail.windows(2).all(|w| w[1] <= w[0].max(self.noise_floor))
    }

    /// Sets the verdict: final residual within tolerance and converging.
    pub fn finish(mut self) -> Self {
        let last = self.final_residual();
        self.verdict = if last <= self.tolerance && self.is_converging() {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

fn finite_or_string(x: f64) -> Value {
    serde_json::Number::from_f64(x)
        .map(Value::Number)
        .unwrap_or_else(|| Value::String(nonfinite_label(x).to_string()))
}

fn nonfinite_label(x: f64) -> &'static str {
    if x.is_nan() {
        "nan"
    } else if x > 0.0 {
        "inf"
    } else {
        "-inf"
    }
}

/// Serializes an `f64` that may be infinite, writing `"inf"` instead of `null`.
pub fn serialize_extended_f64<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    if x.is_finite() {
        s.serialize_f64(*x)
    } else {
        s.serialize_str(nonfinite_label(*x))
    }
}

/// The JSON float format as a string, for CSV cells.
pub fn format_f64(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        nonfinite_label(x).to_string()
    }
}

/// Float formatting with 17 significant digits so that output is byte-stable
/// and round-trips.
struct FixedFloats;

impl serde_json::ser::Formatter for FixedFloats {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{value:.16e}")
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, value as f64)
    }
}

/// Pretty JSON with fixed float formatting.
pub fn to_json_string<T: Serialize>(value: &T) -> serde_json::Result<String> {
    let mut buf = Vec::new();
    let formatter = PrettyFixed::default();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, formatter);
    value.serialize(&mut ser)?;
    buf.push(b'\n');
    Ok(String::from_utf8(buf).expect("serde_json emits UTF-8"))
}

/// `PrettyFormatter` with the float override of [`FixedFloats`].
#[derive(Default)]
struct PrettyFixed<'a> {
    pretty: serde_json::ser::PrettyFormatter<'a>,
}

macro_rules! delegate {
    ($($name:ident($($arg:ident : $ty:ty),*)),* $(,)?) => {
        $(
            fn $name<W: ?Sized + io::Write>(&mut self, w: &mut W $(, $arg: $ty)*) -> io::Result<()> {
                self.pretty.$name(w $(, $arg)*)
            }
        )*
    };
}

impl serde_json::ser::Formatter for PrettyFixed<'_> {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        FixedFloats.write_f64(writer, value)
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        FixedFloats.write_f32(writer, value)
    }

    delegate! {
        begin_array(),
        end_array(),
        begin_array_value(first: bool),
        end_array_value(),
        begin_object(),
        end_object(),
        begin_object_key(first: bool),
        end_object_key(),
        begin_object_value(),
        end_object_value(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_needs_convergence() {
        let mut r = VerificationReport::new("x", 10, 1e-6);
        r.push_residual(50, 1e-7);
        r.push_residual(100, 1e-8);
        r.push_residual(200, 1e-9);
        assert!(r.clone().finish().passed());
        r.push_residual(400, 1e-7);
        assert!(!r.finish().passed());
    }

    #[test]
    fn round_off_jitter_is_tolerated() {
        let mut r = VerificationReport::new("x", 10, 1e-6);
        for (n, v) in [(50, 3e-16), (100, 1.2e-15), (200, 8e-16)] {
            r.push_residual(n, v);
        }
        assert!(r.finish().passed());
    }

    #[test]
    fn json_floats_have_seventeen_digits() {
        let s = to_json_string(&serde_json::json!({"x": 0.1, "n": 3})).unwrap();
        assert!(s.contains("1.0000000000000001e-1"), "{s}");
        assert!(s.contains("\"n\": 3"));
        let back: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(back["x"].as_f64(), Some(0.1));
    }

    #[test]
    fn infinite_parameters_become_strings() {
        let mut r = VerificationReport::new("x", 1, 1.0);
        r.set_parameter("s", f64::INFINITY);
        assert_eq!(r.parameters["s"], Value::String("inf".into()));
    }
}
