//! Case records: the machine-readable result of classifying one input.
//!
//! All exact quantities are serialized as strings (`"p/q"` for rationals,
//! shortest round-trip decimal for floats), so a record re-serializes to the
//! same bytes after parsing.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::input::{parse_json, parse_pair_doc, parse_triangle_doc, LineSpec, RationalPoint};
use super::{CliError, Mode, OutputFormat, RunConfig};
use crate::altitudes::{analyze_triangle, classify_pair, Configuration, HTriangle, IdealPoint};
use crate::cycle::Cycle;
use crate::error::GeometryError;
use crate::lines::{HLine, HPoint};
use crate::oracle::{
    classify_pair_oracle, classify_triangle_oracle, geodesic_from_cycle, Geodesic, OracleVerdict,
};
use crate::scalar::{Scalar, Tolerance};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CycleRecord {
    pub a: String,
    pub b: [String; 2],
    pub c: String,
}

impl CycleRecord {
    pub fn from_cycle<S: Scalar>(c: &Cycle<S>) -> Self {
        CycleRecord {
            a: c.a.to_string(),
            b: [c.b.x.to_string(), c.b.y.to_string()],
            c: c.c.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeodesicRecord {
    Vertical(String),
    Semicircle { center: String, radius_squared: String },
}

impl GeodesicRecord {
    pub fn from_geodesic<S: Scalar>(g: &Geodesic<S>) -> Self {
        match g {
            Geodesic::Vertical(x) => GeodesicRecord::Vertical(x.to_string()),
            Geodesic::Semicircle { center, radius_sq } => GeodesicRecord::Semicircle {
                center: center.to_string(),
                radius_squared: radius_sq.to_string(),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// Orthocenter `(x, √y²)`.
    Point {
        x: String,
        y_squared: String,
        approx: [f64; 2],
    },
    /// `"infinity"` or the abscissa of a boundary point.
    Ideal(String),
    Perpendicular {
        cycle: CycleRecord,
        geodesic: GeodesicRecord,
    },
}

impl Witness {
    pub fn from_configuration<S: Scalar>(c: &Configuration<S>, tol: &Tolerance) -> Self {
        match c {
            Configuration::Concurrent(p) => Witness::Point {
                x: p.x.to_string(),
                y_squared: p.y_sq.to_string(),
                approx: p.approx(),
            },
            Configuration::AsymptoticallyParallel(IdealPoint::Infinity) => {
                Witness::Ideal("infinity".into())
            }
            Configuration::AsymptoticallyParallel(IdealPoint::Finite(x)) => {
                Witness::Ideal(x.to_string())
            }
            Configuration::DivergentlyParallel(h) => Witness::Perpendicular {
                cycle: CycleRecord::from_cycle(h.cycle()),
                geodesic: geodesic_from_cycle(h.cycle(), tol)
                    .map(|g| GeodesicRecord::from_geodesic(&g))
                    .unwrap_or(GeodesicRecord::Vertical("nan".into())),
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseKind {
    Triangle,
    Pair,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub kind: CaseKind,
    pub mode: Mode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub triangle: Option<[[String; 2]; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lines: Option<[CycleRecord; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sides: Vec<CycleRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub altitudes: Vec<CycleRecord>,
    pub gram: [[String; 2]; 2],
    pub delta: String,
    pub delta_hat: String,
    pub configuration: String,
    pub witness: Witness,
    /// Oracle tag, `"abstained"`, or `"error"`.
    pub oracle: String,
    pub agreement: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_us: Option<u64>,
}

impl CaseRecord {
    pub fn to_json_line(&self) -> Result<String, CliError> {
        serde_json::to_string(self)
            .map(|s| s + "\n")
            .map_err(|e| CliError::Internal(format!("serialize: {e}")))
    }

    pub fn render(&self, format: OutputFormat) -> Result<String, CliError> {
        match format {
            OutputFormat::JsonLines => self.to_json_line(),
            OutputFormat::Human => Ok(self.to_human()),
        }
    }

    fn to_human(&self) -> String {
        let mut out = String::new();
        let cyc = |c: &CycleRecord| format!("({}, ({}, {}), {})", c.a, c.b[0], c.b[1], c.c);
        if let Some(t) = &self.triangle {
            let pts: Vec<String> = t.iter().map(|[x, y]| format!("({x}, {y})")).collect();
            out += &format!("triangle       {}\n", pts.join(" "));
        }
        if let Some(ls) = &self.lines {
            out += &format!("lines          {} {}\n", cyc(&ls[0]), cyc(&ls[1]));
        }
        for (name, c) in ["side l", "side m", "side n"].iter().zip(&self.sides) {
            out += &format!("{name:<15}{}\n", cyc(c));
        }
        for (name, c) in ["altitude A(u)", "altitude A(v)", "altitude A(w)"].iter().zip(&self.altitudes) {
            out += &format!("{name:<15}{}\n", cyc(c));
        }
        out += &format!(
            "gram           [[{}, {}], [{}, {}]]\n",
            self.gram[0][0], self.gram[0][1], self.gram[1][0], self.gram[1][1]
        );
        out += &format!("delta          {}\n", self.delta);
        out += &format!("delta_hat      {}\n", self.delta_hat);
        out += &format!("configuration  {}\n", self.configuration);
        let witness = match &self.witness {
            Witness::Point { x, y_squared, approx } => format!(
                "point ({}, {})  [x = {x}, y^2 = {y_squared}]",
                approx[0], approx[1]
            ),
            Witness::Ideal(at) => format!("ideal point {at}"),
            Witness::Perpendicular { cycle, geodesic } => {
                let g = match geodesic {
                    GeodesicRecord::Vertical(x) => format!("vertical x = {x}"),
                    GeodesicRecord::Semicircle { center, radius_squared } => {
                        format!("semicircle center {center}, r^2 = {radius_squared}")
                    }
                };
                format!("common perpendicular {}  [{g}]", cyc(cycle))
            }
        };
        out += &format!("witness        {witness}\n");
        out += &format!(
            "oracle         {} ({})\n",
            self.oracle,
            if self.agreement { "agrees" } else { "DISAGREES" }
        );
        if let Some(t) = self.timing_us {
            out += &format!("time           {t} us\n");
        }
        out
    }
}

fn geometry_error(e: GeometryError) -> CliError {
    match e {
        GeometryError::NotInUpperHalfPlane
        | GeometryError::CoincidentPoints
        | GeometryError::CollinearTriangle => CliError::Invalid(format!("triangle: {e}")),
        GeometryError::InvalidLineCycle
        | GeometryError::ZeroCycleInput
        | GeometryError::CoincidentLines => CliError::Invalid(format!("lines: {e}")),
        other => CliError::Internal(other.to_string()),
    }
}

fn gram_strings<S: Scalar>(g: &[[S; 2]; 2]) -> [[String; 2]; 2] {
    [
        [g[0][0].to_string(), g[0][1].to_string()],
        [g[1][0].to_string(), g[1][1].to_string()],
    ]
}

fn oracle_fields<S: Scalar>(
    engine: &Configuration<S>,
    verdict: Result<OracleVerdict<S>, crate::error::OracleError>,
) -> (String, bool) {
    match verdict {
        Ok(OracleVerdict::Decided(c)) => {
            let tag = c.kind();
            (tag.as_str().to_string(), tag == engine.kind())
        }
        Ok(OracleVerdict::Abstained) => ("abstained".to_string(), true),
        Err(_) => ("error".to_string(), false),
    }
}

/// Build the triangle in scalar type `S` from exact input coordinates.
pub fn triangle_from_rationals<S: Scalar>(
    pts: &[RationalPoint; 3],
    tol: &Tolerance,
) -> Result<HTriangle<S>, GeometryError> {
    let mk = |p: &RationalPoint| HPoint::from_xy(S::from_rational(&p[0]), S::from_rational(&p[1]), tol);
    HTriangle::new(mk(&pts[0])?, mk(&pts[1])?, mk(&pts[2])?, tol)
}

fn triangle_case<S: Scalar>(
    pts: &[RationalPoint; 3],
    mode: Mode,
    tol: &Tolerance,
) -> Result<CaseRecord, CliError> {
    let t = triangle_from_rationals::<S>(pts, tol).map_err(geometry_error)?;
    let analysis = analyze_triangle(&t, tol).map_err(geometry_error)?;
    let verdict = classify_triangle_oracle(&t, tol);
    let (oracle, agreement) = oracle_fields(&analysis.configuration, verdict);
    let ap = &analysis.pencil;
    Ok(CaseRecord {
        kind: CaseKind::Triangle,
        mode,
        triangle: Some(pts.clone().map(|[x, y]| [x.to_string(), y.to_string()])),
        lines: None,
        sides: analysis.sides.as_array().iter().map(|c| CycleRecord::from_cycle(c)).collect(),
        altitudes: ap.altitudes().iter().map(|c| CycleRecord::from_cycle(c)).collect(),
        gram: gram_strings(ap.gram()),
        delta: ap.delta().to_string(),
        delta_hat: ap.delta_hat().to_string(),
        configuration: analysis.configuration.kind().as_str().to_string(),
        witness: Witness::from_configuration(&analysis.configuration, tol),
        oracle,
        agreement,
        timing_us: None,
    })
}

/// Classify a triangle given in exact coordinates.
pub fn classify_triangle_record(
    pts: &[RationalPoint; 3],
    config: &RunConfig,
) -> Result<CaseRecord, CliError> {
    let start = Instant::now();
    let mut rec = match config.mode {
        Mode::Exact => triangle_case::<Rational>(pts, config.mode, &config.tolerance)?,
        Mode::Approximate => triangle_case::<f64>(pts, config.mode, &config.tolerance)?,
    };
    if config.timings {
        rec.timing_us = Some(start.elapsed().as_micros() as u64);
    }
    Ok(rec)
}

fn line_from_spec<S: Scalar>(spec: &LineSpec, tol: &Tolerance) -> Result<HLine<S>, CliError> {
    let [a, b1, b2, c] = spec.coeffs().map(|v| S::from_rational(&v));
    HLine::new(&Cycle::from_coeffs(a, b1, b2, c), tol).map_err(geometry_error)
}

fn pair_case<S: Scalar>(
    specs: &[LineSpec; 2],
    mode: Mode,
    tol: &Tolerance,
) -> Result<CaseRecord, CliError> {
    let first = line_from_spec::<S>(&specs[0], tol)?;
    let second = line_from_spec::<S>(&specs[1], tol)?;
    let (pencil, config) = classify_pair(&first, &second, tol).map_err(geometry_error)?;
    let verdict = match (geodesic_from_cycle(first.cycle(), tol), geodesic_from_cycle(second.cycle(), tol)) {
        (Ok(g), Ok(h)) => classify_pair_oracle(&g, &h, tol),
        (Err(e), _) | (_, Err(e)) => Err(e),
    };
    let (oracle, agreement) = oracle_fields(&config, verdict);
    Ok(CaseRecord {
        kind: CaseKind::Pair,
        mode,
        triangle: None,
        lines: Some([CycleRecord::from_cycle(first.cycle()), CycleRecord::from_cycle(second.cycle())]),
        sides: Vec::new(),
        altitudes: Vec::new(),
        gram: gram_strings(&pencil.gram),
        delta: pencil.delta.to_string(),
        delta_hat: pencil.delta_hat.to_string(),
        configuration: config.kind().as_str().to_string(),
        witness: Witness::from_configuration(&config, tol),
        oracle,
        agreement,
        timing_us: None,
    })
}

pub fn classify_pair_record(specs: &[LineSpec; 2], config: &RunConfig) -> Result<CaseRecord, CliError> {
    let start = Instant::now();
    let mut rec = match config.mode {
        Mode::Exact => pair_case::<Rational>(specs, config.mode, &config.tolerance)?,
        Mode::Approximate => pair_case::<f64>(specs, config.mode, &config.tolerance)?,
    };
    if config.timings {
        rec.timing_us = Some(start.elapsed().as_micros() as u64);
    }
    Ok(rec)
}

pub fn cmd_classify(config: &RunConfig, text: &str) -> Result<CaseRecord, CliError> {
    let pts = parse_triangle_doc(&parse_json(text)?)?;
    classify_triangle_record(&pts, config)
}

pub fn cmd_pair(config: &RunConfig, text: &str) -> Result<CaseRecord, CliError> {
    let specs = parse_pair_doc(&parse_json(text)?)?;
    classify_pair_record(&specs, config)
}
