//! JSON output with a fixed number of significant digits.

use std::io::{self, Write};

use serde::Serialize;
use serde_json::ser::{Formatter, PrettyFormatter};

/// Digits for documents and reports; enough to round-trip any `f64`.
pub const DOCUMENT_DIGITS: usize = 17;
pub const MEASURE_DIGITS: usize = 12;

/// `v` rounded to `digits` significant digits, in plain decimal notation
/// for moderate exponents and scientific notation otherwise.
pub fn format_sig(v: f64, digits: usize) -> String {
    if !v.is_finite() {
        return "null".to_string();
    }
    if v == 0.0 {
        return "0.0".to_string();
    }
    let sci = format!("{:.*e}", digits - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..digits as i32).contains(&exp) {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        let mut s = format!("{:.*}", decimals, v);
        if s.contains('.') {
            let trimmed = s.trim_end_matches('0').len();
            s.truncate(trimmed);
        }
        if s.ends_with('.') || !s.contains('.') {
            s.push_str(if s.ends_with('.') { "0" } else { ".0" });
        }
        s
    } else {
        let mut m = mantissa.to_string();
        if m.contains('.') {
            let trimmed = m.trim_end_matches('0').trim_end_matches('.').len();
            m.truncate(trimmed);
        }
        format!("{m}e{exp}")
    }
}

/// Pretty-printing formatter that rounds every float.
pub struct SigFormatter {
    digits: usize,
    inner: PrettyFormatter<'static>,
}

impl SigFormatter {
    pub fn new(digits: usize) -> Self {
        SigFormatter { digits, inner: PrettyFormatter::with_indent(b"  ") }
    }
}

impl Formatter for SigFormatter {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        writer.write_all(format_sig(value, self.digits).as_bytes())
    }

    fn write_f32<W: ?Sized + Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, value as f64)
    }

    fn begin_array<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.inner.begin_array(writer)
    }

    fn end_array<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.inner.end_array(writer)
    }

    fn begin_array_value<W: ?Sized + Write>(&mut self, writer: &mut W, first: bool) -> io::Result<()> {
        self.inner.begin_array_value(writer, first)
    }

    fn end_array_value<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.inner.end_array_value(writer)
    }

    fn begin_object<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.inner.begin_object(writer)
    }

    fn end_object<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.inner.end_object(writer)
    }

    fn begin_object_key<W: ?Sized + Write>(&mut self, writer: &mut W, first: bool) -> io::Result<()> {
        self.inner.begin_object_key(writer, first)
    }

    fn begin_object_value<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.inner.begin_object_value(writer)
    }

    fn end_object_value<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.inner.end_object_value(writer)
    }
}

/// Pretty JSON with floats at `digits` significant digits and a trailing
/// newline.
pub fn to_json<T: Serialize + ?Sized>(value: &T, digits: usize) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, SigFormatter::new(digits));
    value.serialize(&mut ser).expect("serializable");
    out.push(b'\n');
    String::from_utf8(out).expect("utf-8")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(format_sig(0.8, 12), "0.8");
        assert_eq!(format_sig(0.8, 17), "0.80000000000000004");
        assert_eq!(format_sig(1.0, 17), "1.0");
        assert_eq!(format_sig(-2.5e-9, 12), "-2.5e-9");
        assert_eq!(format_sig(1.2745557823062943, 12), "1.27455578231");
        assert_eq!(format_sig(123456.0, 3), "1.23e5");
        assert_eq!(format_sig(f64::NAN, 3), "null");
    }

    #[test]
    fn round_trips_at_seventeen_digits() {
        for v in [0.1, 1.0 / 3.0, std::f64::consts::PI, 1e-300, -7.25e22, 5e-324, f64::MAX] {
            let s = format_sig(v, DOCUMENT_DIGITS);
            assert_eq!(s.parse::<f64>().unwrap().to_bits(), v.to_bits(), "{s}");
        }
    }

    #[test]
    fn nested_output() {
        let v = serde_json::json!({"a": [0.5, 2], "b": {"c": 1e-7}});
        assert_eq!(to_json(&v, 12), "{\n  \"a\": [\n    0.5,\n    2\n  ],\n  \"b\": {\n    \"c\": 1e-7\n  }\n}\n");
    }
}
