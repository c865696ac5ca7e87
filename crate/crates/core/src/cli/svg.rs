//! SVG figures of triangle and line-pair configurations.
//!
//! Every figure is drawn from the classified case, in the scalar type
//! selected by the run mode, and only rounded to `f64` for plotting.

use std::fmt::Write as _;

use serde_json::Value;

use super::input::{parse_json, parse_pair_doc, parse_triangle_doc, LineSpec, RationalPoint};
use super::record::triangle_from_rationals;
use super::{CliError, Mode, RunConfig};
use crate::altitudes::{analyze_triangle, classify_pair, Configuration, IdealPoint};
use crate::cycle::Cycle;
use crate::lines::HLine;
use crate::oracle::{geodesic_from_cycle, Geodesic};
use crate::scalar::{Scalar, Tolerance};
use crate::Rational;

const WIDTH: f64 = 800.0;
const MARKER: f64 = 6.0;

/// A geodesic rounded for drawing, with the exact descriptor kept for
/// annotation.
#[derive(Debug, Clone)]
struct Drawn {
    shape: Shape,
    label: String,
}

#[derive(Debug, Clone, Copy)]
enum Shape {
    Vertical(f64),
    Semicircle { center: f64, radius: f64 },
}

fn drawn<S: Scalar>(m: &Cycle<S>, tol: &Tolerance) -> Result<Drawn, CliError> {
    let g = geodesic_from_cycle(m, tol).map_err(|e| CliError::Internal(e.to_string()))?;
    Ok(match g {
        Geodesic::Vertical(x) => Drawn {
            shape: Shape::Vertical(x.to_f64_lossy()),
            label: format!("data-x=\"{x}\""),
        },
        Geodesic::Semicircle { center, radius_sq } => Drawn {
            shape: Shape::Semicircle {
                center: center.to_f64_lossy(),
                radius: radius_sq.to_f64_lossy().sqrt(),
            },
            label: format!("data-center=\"{center}\" data-radius-squared=\"{radius_sq}\""),
        },
    })
}

#[derive(Debug, Clone)]
enum WitnessMark {
    Point { x: f64, y: f64, label: String },
    Boundary { x: f64, label: String },
    Infinity { x: f64 },
    Perpendicular(Drawn),
}

fn witness_mark<S: Scalar>(c: &Configuration<S>, tol: &Tolerance) -> Result<WitnessMark, CliError> {
    Ok(match c {
        Configuration::Concurrent(p) => {
            let [x, y] = p.approx();
            WitnessMark::Point { x, y, label: format!("data-x=\"{}\" data-y-squared=\"{}\"", p.x, p.y_sq) }
        }
        Configuration::AsymptoticallyParallel(IdealPoint::Finite(x)) => {
            WitnessMark::Boundary { x: x.to_f64_lossy(), label: format!("data-x=\"{x}\"") }
        }
        Configuration::AsymptoticallyParallel(IdealPoint::Infinity) => WitnessMark::Infinity { x: 0.0 },
        Configuration::DivergentlyParallel(h) => WitnessMark::Perpendicular(drawn(h.cycle(), tol)?),
    })
}

/// World window `[x0, x1] × [0, y1]`, mapped to pixels by
/// `px = (x − x0)·k`, `py = (y1 − y)·k` with `k = WIDTH / (x1 − x0)`.
#[derive(Debug, Clone, Copy)]
struct Viewport {
    x0: f64,
    x1: f64,
    y1: f64,
}

impl Viewport {
    fn new() -> Self {
        Viewport { x0: -5.0, x1: 5.0, y1: 5.0 }
    }

    fn include(&mut self, x: f64, y: f64) {
        if !(x.is_finite() && y.is_finite()) {
            return;
        }
        self.x0 = self.x0.min(x);
        self.x1 = self.x1.max(x);
        self.y1 = self.y1.max(y);
    }

    fn include_shape(&mut self, s: &Shape) {
        match *s {
            Shape::Vertical(x) => self.include(x, 0.0),
            Shape::Semicircle { center, radius } => {
                self.include(center - radius, radius);
                self.include(center + radius, 0.0);
            }
        }
    }

    /// Pad by 5% once everything is included.
    fn finish(mut self) -> Self {
        let pad = 0.05 * (self.x1 - self.x0).max(self.y1);
        if self.x0 < -5.0 {
            self.x0 -= pad;
        }
        if self.x1 > 5.0 {
            self.x1 += pad;
        }
        if self.y1 > 5.0 {
            self.y1 += pad;
        }
        self
    }

    fn k(&self) -> f64 {
        WIDTH / (self.x1 - self.x0)
    }

    fn height(&self) -> f64 {
        self.y1 * self.k()
    }

    fn px(&self, x: f64) -> f64 {
        (x - self.x0) * self.k()
    }

    fn py(&self, y: f64) -> f64 {
        (self.y1 - y) * self.k()
    }
}

fn full_path(vp: &Viewport, s: &Shape) -> String {
    match *s {
        Shape::Vertical(x) => format!("M {:.3} {:.3} L {:.3} {:.3}", vp.px(x), vp.py(0.0), vp.px(x), 0.0),
        Shape::Semicircle { center, radius } => {
            let r = radius * vp.k();
            format!(
                "M {:.3} {:.3} A {r:.3} {r:.3} 0 0 1 {:.3} {:.3}",
                vp.px(center - radius),
                vp.py(0.0),
                vp.px(center + radius),
                vp.py(0.0)
            )
        }
    }
}

/// The arc of `s` between two of its points.
fn segment_path(vp: &Viewport, s: &Shape, p: [f64; 2], q: [f64; 2]) -> String {
    let (p, q) = if p[0] <= q[0] { (p, q) } else { (q, p) };
    let start = format!("M {:.3} {:.3}", vp.px(p[0]), vp.py(p[1]));
    match *s {
        Shape::Vertical(_) => format!("{start} L {:.3} {:.3}", vp.px(q[0]), vp.py(q[1])),
        Shape::Semicircle { radius, .. } => {
            let r = radius * vp.k();
            format!("{start} A {r:.3} {r:.3} 0 0 1 {:.3} {:.3}", vp.px(q[0]), vp.py(q[1]))
        }
    }
}

struct Figure {
    title: String,
    /// Geodesic segments `(shape, label, endpoints)`.
    sides: Vec<(Drawn, [f64; 2], [f64; 2])>,
    lines: Vec<(Drawn, &'static str)>,
    witness: WitnessMark,
}

impl Figure {
    fn viewport(&self) -> Viewport {
        let mut vp = Viewport::new();
        for (d, p, q) in &self.sides {
            vp.include(p[0], p[1]);
            vp.include(q[0], q[1]);
            if let Shape::Semicircle { center, radius } = d.shape {
                if (p[0].min(q[0])..=p[0].max(q[0])).contains(&center) {
                    vp.include(center, radius);
                }
            }
        }
        match &self.witness {
            WitnessMark::Point { x, y, .. } => vp.include(*x, *y),
            WitnessMark::Boundary { x, .. } => vp.include(*x, 0.0),
            WitnessMark::Infinity { .. } => {}
            WitnessMark::Perpendicular(d) => vp.include_shape(&d.shape),
        }
        vp.finish()
    }

    fn render(&self) -> String {
        let vp = self.viewport();
        let h = vp.height();
        let mut s = String::new();
        let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            s,
            "<!-- {}\n     viewport: x in [{}, {}], y in [0, {}]\n     transform: px = (x - ({})) * {k}, py = ({} - y) * {k} -->",
            self.title,
            vp.x0,
            vp.x1,
            vp.y1,
            vp.x0,
            vp.y1,
            k = vp.k()
        );
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH:.0}" height="{h:.0}" viewBox="0 0 {WIDTH:.3} {h:.3}">"#
        );
        let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
        let _ = writeln!(
            s,
            r#"<line class="axis" x1="0" y1="{h:.3}" x2="{WIDTH:.3}" y2="{h:.3}" stroke="black" stroke-width="1.5"/>"#
        );
        for (d, p, q) in &self.sides {
            let _ = writeln!(
                s,
                r##"<path class="side" {} d="{}" fill="none" stroke="#333" stroke-width="1"/>"##,
                d.label,
                segment_path(&vp, &d.shape, *p, *q)
            );
        }
        for (d, class) in &self.lines {
            let _ = writeln!(
                s,
                r##"<path class="{class}" {} d="{}" fill="none" stroke="#1f5fbf" stroke-width="3"/>"##,
                d.label,
                full_path(&vp, &d.shape)
            );
        }
        let red = "#c0392b";
        match &self.witness {
            WitnessMark::Point { x, y, label } => {
                let _ = writeln!(
                    s,
                    r#"<circle class="witness point" {label} cx="{:.3}" cy="{:.3}" r="{MARKER}" fill="{red}"/>"#,
                    vp.px(*x),
                    vp.py(*y)
                );
            }
            WitnessMark::Boundary { x, label } => {
                let (cx, cy) = (vp.px(*x), vp.py(0.0));
                let _ = writeln!(
                    s,
                    r#"<path class="witness boundary" {label} d="M {:.3} {cy:.3} L {:.3} {:.3} L {:.3} {:.3} Z" fill="{red}"/>"#,
                    cx,
                    cx - MARKER,
                    cy - 2.0 * MARKER,
                    cx + MARKER,
                    cy - 2.0 * MARKER
                );
            }
            WitnessMark::Infinity { x } => {
                // Shaft pointing up with an arrowhead touching the top border.
                let cx = vp.px(*x);
                let _ = writeln!(
                    s,
                    r#"<path class="witness infinity" d="M {cx:.3} {:.3} L {cx:.3} 0.000 M {:.3} {:.3} L {cx:.3} 0.000 L {:.3} {:.3}" fill="none" stroke="{red}" stroke-width="3"/>"#,
                    5.0 * MARKER,
                    cx - MARKER,
                    2.0 * MARKER,
                    cx + MARKER,
                    2.0 * MARKER
                );
            }
            WitnessMark::Perpendicular(d) => {
                let _ = writeln!(
                    s,
                    r#"<path class="witness perpendicular" {} d="{}" fill="none" stroke="{red}" stroke-width="2" stroke-dasharray="8 6"/>"#,
                    d.label,
                    full_path(&vp, &d.shape)
                );
            }
        }
        s += "</svg>\n";
        s
    }
}

fn approx_pt<S: Scalar>(p: &crate::lines::HPoint<S>) -> [f64; 2] {
    [p.x().to_f64_lossy(), p.y().to_f64_lossy()]
}

fn triangle_figure<S: Scalar>(pts: &[RationalPoint; 3], tol: &Tolerance) -> Result<Figure, CliError> {
    let invalid = |e: crate::GeometryError| CliError::Invalid(format!("triangle: {e}"));
    let t = triangle_from_rationals::<S>(pts, tol).map_err(invalid)?;
    let a = analyze_triangle(&t, tol).map_err(invalid)?;
    let [u, v, w] = t.vertices().map(approx_pt);
    let [l, m, n] = a.sides.as_array();
    let sides = vec![(drawn(l, tol)?, v, w), (drawn(m, tol)?, u, w), (drawn(n, tol)?, u, v)];
    let lines: Vec<_> = a
        .pencil
        .altitudes()
        .iter()
        .map(|c| drawn(c, tol).map(|d| (d, "altitude")))
        .collect::<Result<_, _>>()?;
    let mut witness = witness_mark(&a.configuration, tol)?;
    if let WitnessMark::Infinity { x } = &mut witness {
        *x = infinity_anchor(&lines);
    }
    let title = format!(
        "triangle ({}, {}) ({}, {}) ({}, {}): {}",
        pts[0][0],
        pts[0][1],
        pts[1][0],
        pts[1][1],
        pts[2][0],
        pts[2][1],
        a.configuration.kind()
    );
    Ok(Figure { title, sides, lines, witness })
}

/// Lines through ∞ are verticals; anchor the arrow on the first of them.
fn infinity_anchor(lines: &[(Drawn, &'static str)]) -> f64 {
    lines
        .iter()
        .find_map(|(d, _)| match d.shape {
            Shape::Vertical(x) => Some(x),
            _ => None,
        })
        .unwrap_or(0.0)
}

fn pair_figure<S: Scalar>(specs: &[LineSpec; 2], tol: &Tolerance) -> Result<Figure, CliError> {
    let invalid = |e: crate::GeometryError| CliError::Invalid(format!("lines: {e}"));
    let line = |spec: &LineSpec| {
        let [a, b1, b2, c] = spec.coeffs().map(|v| S::from_rational(&v));
        HLine::new(&Cycle::from_coeffs(a, b1, b2, c), tol).map_err(invalid)
    };
    let (first, second) = (line(&specs[0])?, line(&specs[1])?);
    let (_, config) = classify_pair(&first, &second, tol).map_err(invalid)?;
    let lines = vec![(drawn(first.cycle(), tol)?, "line"), (drawn(second.cycle(), tol)?, "line")];
    let mut witness = witness_mark(&config, tol)?;
    if let WitnessMark::Infinity { x } = &mut witness {
        *x = infinity_anchor(&lines);
    }
    Ok(Figure { title: format!("line pair: {}", config.kind()), sides: Vec::new(), lines, witness })
}

/// Accepts a triangle document, a pair document, or a case record (whose
/// `triangle`/`lines` fields have the same shape).
pub fn cmd_svg(config: &RunConfig, text: &str) -> Result<String, CliError> {
    let doc: Value = parse_json(text)?;
    let tol = &config.tolerance;
    let figure = if doc.get("triangle").is_some() {
        let pts = parse_triangle_doc(&doc)?;
        match config.mode {
            Mode::Exact => triangle_figure::<Rational>(&pts, tol)?,
            Mode::Approximate => triangle_figure::<f64>(&pts, tol)?,
        }
    } else if doc.get("lines").is_some() {
        let specs = parse_pair_doc(&doc)?;
        match config.mode {
            Mode::Exact => pair_figure::<Rational>(&specs, tol)?,
            Mode::Approximate => pair_figure::<f64>(&specs, tol)?,
        }
    } else {
        return Err(CliError::Parse("expected a triangle, line-pair or case record document".into()));
    };
    Ok(figure.render())
}
