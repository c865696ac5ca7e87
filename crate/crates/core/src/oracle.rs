//! Independent classification by classical Euclidean constructions.
//!
//! Geodesics are handled as vertical rays and semicircles centered on the
//! x-axis, described by a center and a square radius. Nothing here goes
//! through the cycle pairing: intersections, orthogonality and altitudes are
//! computed with ruler-and-compass algebra, so agreement with the cycle
//! engine is a genuine cross-check. Every predicate is a sign test on a
//! polynomial in rational data; no square roots are taken.

use crate::altitudes::{ConfigurationKind, HTriangle, IdealPoint};
use crate::cycle::{Cycle, Vec2};
use crate::error::OracleError;
use crate::lines::SurdPoint;
use crate::scalar::{Scalar, Tolerance};

#[derive(Debug, Clone, PartialEq)]
pub enum Geodesic<S> {
    Vertical(S),
    Semicircle { center: S, radius_sq: S },
}

#[derive(Debug, Clone, PartialEq)]
pub enum MeetResult<S> {
    Point(SurdPoint<S>),
    Boundary(IdealPoint<S>),
    None,
}

/// Configuration with a Euclidean witness.
#[derive(Debug, Clone, PartialEq)]
pub enum OracleConfiguration<S> {
    Concurrent(SurdPoint<S>),
    AsymptoticallyParallel(IdealPoint<S>),
    DivergentlyParallel(Geodesic<S>),
}

impl<S: Scalar> OracleConfiguration<S> {
    pub fn kind(&self) -> ConfigurationKind {
        match self {
            OracleConfiguration::Concurrent(_) => ConfigurationKind::Concurrent,
            OracleConfiguration::AsymptoticallyParallel(_) => {
                ConfigurationKind::AsymptoticallyParallel
            }
            OracleConfiguration::DivergentlyParallel(_) => ConfigurationKind::DivergentlyParallel,
        }
    }
}

/// Outcome of the oracle; the approximate kernel may decline to decide
/// cases that sit inside its tolerance band.
#[derive(Debug, Clone, PartialEq)]
pub enum OracleVerdict<S> {
    Decided(OracleConfiguration<S>),
    Abstained,
}

impl<S: Scalar> OracleVerdict<S> {
    pub fn kind(&self) -> Option<ConfigurationKind> {
        match self {
            OracleVerdict::Decided(c) => Some(c.kind()),
            OracleVerdict::Abstained => None,
        }
    }
}

fn sq<S: Scalar>(v: &S) -> S {
    v.clone() * v.clone()
}

fn two<S: Scalar>() -> S {
    S::from_int(2)
}

fn same<S: Scalar>(a: &S, b: &S, scale: &S, tol: &Tolerance) -> bool {
    (a.clone() - b.clone()).is_negligible(scale, tol.eps)
}

fn mag<S: Scalar>(vals: &[&S]) -> S {
    vals.iter()
        .fold(S::one(), |acc, v| S::max_of(acc, v.abs()))
}

impl<S: Scalar> Geodesic<S> {
    /// Boundary feet other than ∞ are `center ± √radius_sq`; verticals have
    /// feet `x` and ∞.
    pub fn has_foot(&self, ideal: &IdealPoint<S>, tol: &Tolerance) -> bool {
        match (self, ideal) {
            (Geodesic::Vertical(_), IdealPoint::Infinity) => true,
            (Geodesic::Semicircle { .. }, IdealPoint::Infinity) => false,
            (Geodesic::Vertical(x0), IdealPoint::Finite(x)) => same(x0, x, &mag(&[x0, x]), tol),
            (Geodesic::Semicircle { center, radius_sq }, IdealPoint::Finite(x)) => {
                let d2 = sq(&(x.clone() - center.clone()));
                same(&d2, radius_sq, &mag(&[&d2, radius_sq]), tol)
            }
        }
    }

    /// Whether the geodesic passes through `(x, √y²)`.
    pub fn contains(&self, p: &SurdPoint<S>, tol: &Tolerance) -> bool {
        match self {
            Geodesic::Vertical(x0) => same(x0, &p.x, &mag(&[x0, &p.x]), tol),
            Geodesic::Semicircle { center, radius_sq } => {
                let lhs = sq(&(p.x.clone() - center.clone())) + p.y_sq.clone();
                same(&lhs, radius_sq, &mag(&[&lhs, radius_sq]), tol)
            }
        }
    }

    /// Coefficients of a cycle whose zero set carries this geodesic.
    pub fn to_cycle(&self) -> Cycle<S> {
        match self {
            Geodesic::Vertical(x) => Cycle::from_coeffs(S::zero(), S::one(), S::zero(), -x.clone()),
            Geodesic::Semicircle { center, radius_sq } => Cycle::from_coeffs(
                S::one(),
                -two::<S>() * center.clone(),
                S::zero(),
                sq(center) - radius_sq.clone(),
            ),
        }
    }

    pub fn approx_eq(&self, other: &Self, tol: &Tolerance) -> bool {
        match (self, other) {
            (Geodesic::Vertical(a), Geodesic::Vertical(b)) => same(a, b, &mag(&[a, b]), tol),
            (
                Geodesic::Semicircle { center: c1, radius_sq: r1 },
                Geodesic::Semicircle { center: c2, radius_sq: r2 },
            ) => {
                same(c1, c2, &mag(&[c1, c2]), tol) && same(r1, r2, &mag(&[r1, r2, &sq(c1)]), tol)
            }
            _ => false,
        }
    }
}

/// Read a line cycle as a vertical ray or semicircle.
pub fn geodesic_from_cycle<S: Scalar>(
    m: &Cycle<S>,
    tol: &Tolerance,
) -> Result<Geodesic<S>, OracleError> {
    let invalid = || OracleError::DegenerateInput("cycle is not a hyperbolic line");
    let scale = m.max_abs();
    if scale.is_zero() || !m.b.y.is_negligible(&scale, tol.eps) {
        return Err(invalid());
    }
    if m.a.is_negligible(&scale, tol.eps) {
        if m.b.x.is_negligible(&scale, tol.eps) {
            return Err(invalid());
        }
        return Ok(Geodesic::Vertical(-m.c.clone() / m.b.x.clone()));
    }
    let center = -m.b.x.clone() / (two::<S>() * m.a.clone());
    let radius_sq = sq(&center) - m.c.clone() / m.a.clone();
    if !radius_sq.is_positive() || radius_sq.is_negligible(&mag(&[&sq(&center)]), tol.eps) {
        return Err(invalid());
    }
    Ok(Geodesic::Semicircle { center, radius_sq })
}

/// Classical orthogonality: `r₁² + r₂² = (c₁ − c₂)²` for two semicircles; a
/// vertical is orthogonal to a semicircle through its center.
pub fn euclid_orthogonal<S: Scalar>(g: &Geodesic<S>, h: &Geodesic<S>, tol: &Tolerance) -> bool {
    match (g, h) {
        (Geodesic::Vertical(_), Geodesic::Vertical(_)) => false,
        (Geodesic::Vertical(x), Geodesic::Semicircle { center, .. })
        | (Geodesic::Semicircle { center, .. }, Geodesic::Vertical(x)) => {
            same(x, center, &mag(&[x, center]), tol)
        }
        (
            Geodesic::Semicircle { center: c1, radius_sq: r1 },
            Geodesic::Semicircle { center: c2, radius_sq: r2 },
        ) => {
            let lhs = r1.clone() + r2.clone();
            let rhs = sq(&(c1.clone() - c2.clone()));
            same(&lhs, &rhs, &mag(&[&lhs, &rhs]), tol)
        }
    }
}

/// The geodesic through two distinct points of the upper half-plane.
pub fn geodesic_through<S: Scalar>(
    p: &Vec2<S>,
    q: &Vec2<S>,
    tol: &Tolerance,
) -> Result<Geodesic<S>, OracleError> {
    let dx = q.x.clone() - p.x.clone();
    let scale = mag(&[&p.x, &q.x, &p.y, &q.y]);
    if dx.is_negligible(&scale, tol.eps) {
        if same(&p.y, &q.y, &scale, tol) {
            return Err(OracleError::DegenerateInput("coincident points"));
        }
        return Ok(Geodesic::Vertical(p.x.clone()));
    }
    // (c − p.x)² + p.y² = (c − q.x)² + q.y²
    let center = (sq(&q.x) + sq(&q.y) - sq(&p.x) - sq(&p.y)) / (two::<S>() * dx);
    let radius_sq = sq(&(p.x.clone() - center.clone())) + sq(&p.y);
    Ok(Geodesic::Semicircle { center, radius_sq })
}

/// The geodesic through `vertex` orthogonal to `side`.
pub fn altitude_geodesic<S: Scalar>(
    vertex: &Vec2<S>,
    side: &Geodesic<S>,
    tol: &Tolerance,
) -> Result<Geodesic<S>, OracleError> {
    match side {
        Geodesic::Vertical(x0) => Ok(Geodesic::Semicircle {
            center: x0.clone(),
            radius_sq: sq(&(vertex.x.clone() - x0.clone())) + sq(&vertex.y),
        }),
        Geodesic::Semicircle { center: c0, radius_sq: r0 } => {
            let dx = c0.clone() - vertex.x.clone();
            if dx.is_negligible(&mag(&[c0, &vertex.x]), tol.eps) {
                return Ok(Geodesic::Vertical(c0.clone()));
            }
            // (c₁ − vₓ)² + v_y² + r₀² = (c₁ − c₀)², linear in c₁.
            let numer = sq(c0) - sq(&vertex.x) - sq(&vertex.y) - r0.clone();
            let c1 = numer / (two::<S>() * dx);
            let r1 = sq(&(c1.clone() - vertex.x.clone())) + sq(&vertex.y);
            if !r1.is_positive() {
                return Err(OracleError::DegenerateInput("altitude has no real radius"));
            }
            Ok(Geodesic::Semicircle { center: c1, radius_sq: r1 })
        }
    }
}

/// Intersection plus a flag telling whether the decision sat inside the
/// tolerance band (never set for exact scalars).
fn meet<S: Scalar>(
    g: &Geodesic<S>,
    h: &Geodesic<S>,
    tol: &Tolerance,
) -> Result<(MeetResult<S>, bool), OracleError> {
    // Both cases below reduce to: the meeting abscissa x and the square
    // height y² = R − (x − c)² on one semicircle.
    let (x, center, radius_sq) = match (g, h) {
        (Geodesic::Vertical(a), Geodesic::Vertical(b)) => {
            if same(a, b, &mag(&[a, b]), tol) {
                return Err(OracleError::CoincidentGeodesics);
            }
            return Ok((MeetResult::Boundary(IdealPoint::Infinity), false));
        }
        (Geodesic::Vertical(x0), Geodesic::Semicircle { center, radius_sq })
        | (Geodesic::Semicircle { center, radius_sq }, Geodesic::Vertical(x0)) => {
            (x0.clone(), center.clone(), radius_sq.clone())
        }
        (
            Geodesic::Semicircle { center: c1, radius_sq: r1 },
            Geodesic::Semicircle { center: c2, radius_sq: r2 },
        ) => {
            let dc = c2.clone() - c1.clone();
            if dc.is_negligible(&mag(&[c1, c2]), tol.eps) {
                if same(r1, r2, &mag(&[r1, r2]), tol) {
                    return Err(OracleError::CoincidentGeodesics);
                }
                return Ok((MeetResult::None, false));
            }
            // Radical axis of the two circles.
            let x = (r1.clone() - r2.clone() + sq(c2) - sq(c1)) / (two::<S>() * dc);
            (x, c1.clone(), r1.clone())
        }
    };
    let d2 = sq(&(x.clone() - center));
    let y_sq = radius_sq.clone() - d2.clone();
    let scale = mag(&[&radius_sq, &d2]);
    let marginal = !S::EXACT && y_sq.is_negligible(&scale, ABSTAIN_FACTOR * tol.eps);
    Ok(match y_sq.sign_with(&scale, tol.eps) {
        1 => (MeetResult::Point(SurdPoint::new(x, y_sq)), marginal),
        0 => (MeetResult::Boundary(IdealPoint::Finite(x)), marginal),
        _ => (MeetResult::None, marginal),
    })
}

/// The approximate oracle abstains when `|y²|` is within this multiple of
/// the decision tolerance.
const ABSTAIN_FACTOR: f64 = 1e3;

pub fn intersect<S: Scalar>(
    g: &Geodesic<S>,
    h: &Geodesic<S>,
    tol: &Tolerance,
) -> Result<MeetResult<S>, OracleError> {
    Ok(meet(g, h, tol)?.0)
}

/// The geodesic orthogonal to two disjoint, non-asymptotic geodesics.
pub fn common_perpendicular<S: Scalar>(
    g: &Geodesic<S>,
    h: &Geodesic<S>,
    tol: &Tolerance,
) -> Result<Geodesic<S>, OracleError> {
    let no_perp = || OracleError::OracleInconsistent("geodesics have no common perpendicular".into());
    let out = match (g, h) {
        (Geodesic::Vertical(_), Geodesic::Vertical(_)) => return Err(no_perp()),
        (Geodesic::Vertical(x0), Geodesic::Semicircle { center, radius_sq })
        | (Geodesic::Semicircle { center, radius_sq }, Geodesic::Vertical(x0)) => {
            Geodesic::Semicircle {
                center: x0.clone(),
                radius_sq: sq(&(x0.clone() - center.clone())) - radius_sq.clone(),
            }
        }
        (
            Geodesic::Semicircle { center: c1, radius_sq: r1 },
            Geodesic::Semicircle { center: c2, radius_sq: r2 },
        ) => {
            let dc = c2.clone() - c1.clone();
            if dc.is_negligible(&mag(&[c1, c2]), tol.eps) {
                Geodesic::Vertical(c1.clone())
            } else {
                // R + r₁² = (c − c₁)² and R + r₂² = (c − c₂)².
                let c = (c1.clone() + c2.clone()) / two::<S>()
                    + (r1.clone() - r2.clone()) / (two::<S>() * dc);
                let radius_sq = sq(&(c.clone() - c1.clone())) - r1.clone();
                Geodesic::Semicircle { center: c, radius_sq }
            }
        }
    };
    if let Geodesic::Semicircle { radius_sq, .. } = &out {
        if !radius_sq.is_positive() {
            return Err(no_perp());
        }
    }
    Ok(out)
}

/// Classify a triangle's altitudes using only Euclidean constructions.
pub fn classify_triangle_oracle<S: Scalar>(
    t: &HTriangle<S>,
    tol: &Tolerance,
) -> Result<OracleVerdict<S>, OracleError> {
    let [u, v, w] = t.vertices().map(|p| p.pos().clone());
    let sides = [
        geodesic_through(&v, &w, tol)?,
        geodesic_through(&u, &w, tol)?,
        geodesic_through(&u, &v, tol)?,
    ];
    if sides[0] == sides[1] || sides[0] == sides[2] || sides[1] == sides[2] {
        return Err(OracleError::DegenerateInput("collinear triangle"));
    }
    let alts = [
        altitude_geodesic(&u, &sides[0], tol)?,
        altitude_geodesic(&v, &sides[1], tol)?,
        altitude_geodesic(&w, &sides[2], tol)?,
    ];
    classify_geodesics(&alts, tol)
}

/// Classify three geodesics that are expected to share a configuration.
pub fn classify_geodesics<S: Scalar>(
    alts: &[Geodesic<S>; 3],
    tol: &Tolerance,
) -> Result<OracleVerdict<S>, OracleError> {
    let [g, h, k] = alts;
    let (result, marginal) = meet(g, h, tol)?;
    if marginal {
        return Ok(OracleVerdict::Abstained);
    }
    let inconsistent = |what: &str| {
        if S::EXACT {
            Err(OracleError::OracleInconsistent(format!(
                "third altitude misses the {what}"
            )))
        } else {
            Ok(OracleVerdict::Abstained)
        }
    };
    let config = match result {
        MeetResult::Point(p) => {
            if !k.contains(&p, tol) {
                return inconsistent("common point");
            }
            OracleConfiguration::Concurrent(p)
        }
        MeetResult::Boundary(ideal) => {
            if !k.has_foot(&ideal, tol) {
                return inconsistent("common ideal point");
            }
            OracleConfiguration::AsymptoticallyParallel(ideal)
        }
        MeetResult::None => {
            let perp = common_perpendicular(g, h, tol)?;
            if !euclid_orthogonal(&perp, k, tol) {
                return inconsistent("common perpendicular");
            }
            OracleConfiguration::DivergentlyParallel(perp)
        }
    };
    Ok(OracleVerdict::Decided(config))
}

/// Classify two distinct geodesics: meeting point, shared ideal point, or
/// common perpendicular.
pub fn classify_pair_oracle<S: Scalar>(
    g: &Geodesic<S>,
    h: &Geodesic<S>,
    tol: &Tolerance,
) -> Result<OracleVerdict<S>, OracleError> {
    let (result, marginal) = meet(g, h, tol)?;
    if marginal {
        return Ok(OracleVerdict::Abstained);
    }
    Ok(OracleVerdict::Decided(match result {
        MeetResult::Point(p) => OracleConfiguration::Concurrent(p),
        MeetResult::Boundary(i) => OracleConfiguration::AsymptoticallyParallel(i),
        MeetResult::None => OracleConfiguration::DivergentlyParallel(common_perpendicular(g, h, tol)?),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lines::HPoint;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn semi(c: Rational, r2: Rational) -> Geodesic<Rational> {
        Geodesic::Semicircle { center: c, radius_sq: r2 }
    }

    fn vert(x: Rational) -> Geodesic<Rational> {
        Geodesic::Vertical(x)
    }

    #[test]
    fn geodesics_from_cycles() {
        let t = tol();
        let c = |a, b, cc| Cycle::<Rational>::from_ints(a, b, 0, cc);
        assert_eq!(geodesic_from_cycle(&c(0, 1, 0), &t), Ok(vert(q(0, 1))));
        assert_eq!(geodesic_from_cycle(&c(1, -2, -4), &t), Ok(semi(q(1, 1), q(5, 1))));
        assert_eq!(geodesic_from_cycle(&c(1, 0, -2), &t), Ok(semi(q(0, 1), q(2, 1))));
        assert!(geodesic_from_cycle(&c(1, 0, 2), &t).is_err());
        assert!(geodesic_from_cycle(&Cycle::<Rational>::from_ints(1, 0, -2, 1), &t).is_err());
    }

    #[test]
    fn orthogonality() {
        let t = tol();
        assert!(euclid_orthogonal(&semi(q(0, 1), q(2, 1)), &semi(q(2, 1), q(2, 1)), &t));
        assert!(euclid_orthogonal(&vert(q(1, 1)), &semi(q(1, 1), q(5, 1)), &t));
        assert!(!euclid_orthogonal(&vert(q(0, 1)), &vert(q(1, 1)), &t));
        assert!(!euclid_orthogonal(&semi(q(0, 1), q(1, 1)), &semi(q(2, 1), q(2, 1)), &t));
    }

    #[test]
    fn altitudes() {
        let t = tol();
        let p = |x, y| Vec2::new(x, y);
        assert_eq!(
            altitude_geodesic(&p(q(1, 1), q(1, 1)), &semi(q(7, 2), q(85, 4)), &t),
            Ok(semi(q(-11, 5), q(281, 25)))
        );
        assert_eq!(
            altitude_geodesic(&p(q(0, 1), q(3, 1)), &semi(q(0, 1), q(2, 1)), &t),
            Ok(vert(q(0, 1)))
        );
        assert_eq!(
            altitude_geodesic(&p(q(5, 1), q(1, 1)), &vert(q(0, 1)), &t),
            Ok(semi(q(0, 1), q(26, 1)))
        );
    }

    #[test]
    fn intersections() {
        let t = tol();
        assert_eq!(
            intersect(&vert(q(0, 1)), &semi(q(0, 1), q(2, 1)), &t),
            Ok(MeetResult::Point(SurdPoint::new(q(0, 1), q(2, 1))))
        );
        assert_eq!(
            intersect(&vert(q(0, 1)), &vert(q(1, 1)), &t),
            Ok(MeetResult::Boundary(IdealPoint::Infinity))
        );
        assert_eq!(intersect(&semi(q(17, 7), q(149, 49)), &vert(q(0, 1)), &t), Ok(MeetResult::None));
        assert_eq!(
            intersect(&semi(q(0, 1), q(1, 1)), &semi(q(2, 1), q(1, 1)), &t),
            Ok(MeetResult::Boundary(IdealPoint::Finite(q(1, 1))))
        );
        assert_eq!(intersect(&semi(q(0, 1), q(1, 1)), &semi(q(0, 1), q(4, 1)), &t), Ok(MeetResult::None));
        assert_eq!(
            intersect(&vert(q(3, 1)), &vert(q(3, 1)), &t),
            Err(OracleError::CoincidentGeodesics)
        );
    }

    fn family(h: Rational) -> HTriangle<Rational> {
        let t = tol();
        let p = |x: Rational, y: Rational| HPoint::from_xy(x, y, &t).unwrap();
        HTriangle::new(p(q(0, 1), h), p(q(1, 1), q(1, 1)), p(q(-1, 1), q(1, 1)), &t).unwrap()
    }

    #[test]
    fn reference_triangles() {
        let t = tol();
        assert_eq!(
            classify_triangle_oracle(&family(q(3, 1)), &t),
            Ok(OracleVerdict::Decided(OracleConfiguration::Concurrent(SurdPoint::new(
                q(0, 1),
                q(32, 5)
            ))))
        );
        assert_eq!(
            classify_triangle_oracle(&family(q(2, 1)), &t),
            Ok(OracleVerdict::Decided(OracleConfiguration::AsymptoticallyParallel(
                IdealPoint::Infinity
            )))
        );
        assert_eq!(
            classify_triangle_oracle(&family(q(3, 2)), &t),
            Ok(OracleVerdict::Decided(OracleConfiguration::DivergentlyParallel(semi(
                q(0, 1),
                q(20, 7)
            ))))
        );
    }

    #[test]
    fn moved_h2_triangle_shares_finite_foot() {
        let t = tol();
        let p = |x, y| HPoint::from_xy(x, y, &t).unwrap();
        let tr = HTriangle::new(
            p(q(16, 13), q(2, 13)),
            p(q(7, 5), q(1, 5)),
            p(q(21, 17), q(1, 17)),
            &t,
        )
        .unwrap();
        assert_eq!(
            classify_triangle_oracle(&tr, &t),
            Ok(OracleVerdict::Decided(OracleConfiguration::AsymptoticallyParallel(
                IdealPoint::Finite(q(1, 1))
            )))
        );
    }

    #[test]
    fn float_oracle_abstains_near_boundary() {
        let t = tol();
        let g = Geodesic::<f64>::Semicircle { center: 0.0, radius_sq: 1.0 };
        let h = Geodesic::Semicircle { center: 2.0 + 1e-11, radius_sq: 1.0 };
        assert_eq!(classify_pair_oracle(&g, &h, &t), Ok(OracleVerdict::Abstained));
        let h = Geodesic::Semicircle { center: 1.5, radius_sq: 1.0 };
        assert_eq!(
            classify_pair_oracle(&g, &h, &t).unwrap().kind(),
            Some(ConfigurationKind::Concurrent)
        );
    }
}
