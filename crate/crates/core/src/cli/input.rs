//! JSON input documents.
//!
//! Numbers may be JSON numbers, strings holding a decimal (`"-1.25"`,
//! `"3e-2"`) or a fraction (`"3/2"`), or objects `{"num": …, "den": …}`.
//! Every form is parsed into an exact rational; JSON numbers are read from
//! their literal text, so `0.1` means one tenth.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::Value;

use super::CliError;
use crate::Rational;

pub type RationalPoint = [Rational; 2];

/// A line given either as cycle coefficients or as a geodesic descriptor.
#[derive(Debug, Clone, PartialEq)]
pub enum LineSpec {
    Cycle { a: Rational, b: [Rational; 2], c: Rational },
    Vertical(Rational),
    /// Center and radius (not squared).
    Semicircle { center: Rational, radius: Rational },
}

impl LineSpec {
    /// Coefficients `(a, b₁, b₂, c)` of a cycle carrying this line.
    pub fn coeffs(&self) -> [Rational; 4] {
        match self {
            LineSpec::Cycle { a, b, c } => [a.clone(), b[0].clone(), b[1].clone(), c.clone()],
            LineSpec::Vertical(x) => [Rational::zero(), Rational::one(), Rational::zero(), -x],
            LineSpec::Semicircle { center, radius } => [
                Rational::one(),
                center * Rational::from_integer(BigInt::from(-2)),
                Rational::zero(),
                center * center - radius * radius,
            ],
        }
    }
}

pub fn parse_json(text: &str) -> Result<Value, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse(format!("invalid JSON: {e}")))
}

/// Parse a decimal (`[-]digits[.digits][e[-]digits]`) or `p/q` string exactly.
pub fn parse_rational_str(s: &str) -> Result<Rational, CliError> {
    let bad = || CliError::Parse(format!("not a number: {s:?}"));
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(CliError::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(Rational::new(p, q));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty()
        || !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let all: BigInt = format!("{int_part}{frac_part}").parse().map_err(|_| bad())?;
    let shift = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let mut value = if shift >= 0 {
        Rational::from_integer(all * ten.pow(shift as u32))
    } else {
        Rational::new(all, ten.pow(shift.unsigned_abs()))
    };
    if neg {
        value = -value;
    }
    Ok(value)
}

pub fn parse_number(v: &Value) -> Result<Rational, CliError> {
    match v {
        Value::Number(n) => parse_rational_str(&n.to_string()),
        Value::String(s) => parse_rational_str(s),
        Value::Object(map) => {
            let num = map
                .get("num")
                .ok_or_else(|| CliError::Parse("rational object needs \"num\"".into()))?;
            let den = map
                .get("den")
                .ok_or_else(|| CliError::Parse("rational object needs \"den\"".into()))?;
            let den = parse_number(den)?;
            if den.is_zero() {
                return Err(CliError::Parse("zero denominator".into()));
            }
            Ok(parse_number(num)? / den)
        }
        other => Err(CliError::Parse(format!("expected a number, found {other}"))),
    }
}

fn parse_point(v: &Value) -> Result<RationalPoint, CliError> {
    match v.as_array().map(Vec::as_slice) {
        Some([x, y]) => Ok([parse_number(x)?, parse_number(y)?]),
        _ => Err(CliError::Parse(format!("expected a point [x, y], found {v}"))),
    }
}

/// `{"triangle": [[x, y], [x, y], [x, y]]}`.
pub fn parse_triangle_doc(v: &Value) -> Result<[RationalPoint; 3], CliError> {
    let pts = v
        .get("triangle")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Parse("expected {\"triangle\": [[x,y],[x,y],[x,y]]}".into()))?;
    match pts.as_slice() {
        [a, b, c] => Ok([parse_point(a)?, parse_point(b)?, parse_point(c)?]),
        _ => Err(CliError::Parse(format!("a triangle needs 3 vertices, found {}", pts.len()))),
    }
}

pub fn parse_line(v: &Value) -> Result<LineSpec, CliError> {
    if let Some(x) = v.get("vertical") {
        return Ok(LineSpec::Vertical(parse_number(x)?));
    }
    if let Some(s) = v.get("semicircle") {
        let [center, radius] = parse_point(s)?;
        return Ok(LineSpec::Semicircle { center, radius });
    }
    match (v.get("a"), v.get("b"), v.get("c")) {
        (Some(a), Some(b), Some(c)) => Ok(LineSpec::Cycle {
            a: parse_number(a)?,
            b: parse_point(b)?,
            c: parse_number(c)?,
        }),
        _ => Err(CliError::Parse(format!(
            "expected a line {{\"a\",\"b\",\"c\"}}, {{\"vertical\"}} or {{\"semicircle\"}}, found {v}"
        ))),
    }
}

/// `{"lines": [line, line]}`.
pub fn parse_pair_doc(v: &Value) -> Result<[LineSpec; 2], CliError> {
    let lines = v
        .get("lines")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Parse("expected {\"lines\": [line, line]}".into()))?;
    match lines.as_slice() {
        [a, b] => Ok([parse_line(a)?, parse_line(b)?]),
        _ => Err(CliError::Parse(format!("a pair needs 2 lines, found {}", lines.len()))),
    }
}
