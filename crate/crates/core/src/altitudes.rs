//! Altitudes of a hyperbolic triangle and the configuration they form.
//!
//! With side cycles `ℓ, m, n` opposite `u, v, w`, the altitude cycles are
//!
//! ```text
//! A(u) = ⟨n, ℓ⟩ m − ⟨m, ℓ⟩ n
//! A(v) = ⟨ℓ, m⟩ n − ⟨n, m⟩ ℓ
//! A(w) = ⟨m, n⟩ ℓ − ⟨ℓ, n⟩ m
//! ```
//!
//! which sum to zero, so they span a plane of cycles. The sign of the
//! determinant `Δ` of the pairing restricted to that plane selects one of
//! three configurations: a common point (`Δ > 0`), a common ideal point
//! (`Δ = 0`), or a common perpendicular (`Δ < 0`). The same machinery applied
//! to the span of two arbitrary lines classifies the pair.

use std::fmt;

use crate::cycle::{
    degree, norm, normalize, orthogonal_complement, pairing, pairing_scale, zero_cycle, Cycle,
    CycleDegree, Vec2,
};
use crate::error::GeometryError;
use crate::lines::{axis, is_valid_line, line_through, HLine, HPoint, SurdPoint};
use crate::scalar::{Scalar, Tolerance};

#[derive(Debug, Clone, PartialEq)]
pub struct HTriangle<S> {
    pub u: HPoint<S>,
    pub v: HPoint<S>,
    pub w: HPoint<S>,
}

impl<S: Scalar> HTriangle<S> {
    /// Validates distinctness and non-collinearity.
    pub fn new(
        u: HPoint<S>,
        v: HPoint<S>,
        w: HPoint<S>,
        tol: &Tolerance,
    ) -> Result<Self, GeometryError> {
        if u.coincides(&v, tol) || u.coincides(&w, tol) || v.coincides(&w, tol) {
            return Err(GeometryError::CoincidentPoints);
        }
        let t = HTriangle { u, v, w };
        side_cycles(&t, tol)?;
        Ok(t)
    }

    pub fn vertices(&self) -> [&HPoint<S>; 3] {
        [&self.u, &self.v, &self.w]
    }
}

/// Side cycles `ℓ, m, n`, opposite `u, v, w` respectively.
#[derive(Debug, Clone, PartialEq)]
pub struct SideCycles<S> {
    pub l: Cycle<S>,
    pub m: Cycle<S>,
    pub n: Cycle<S>,
}

impl<S: Scalar> SideCycles<S> {
    pub fn as_array(&self) -> [&Cycle<S>; 3] {
        [&self.l, &self.m, &self.n]
    }
}

/// Two generators of a plane of line cycles with their pairing matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Pencil<S> {
    pub first: Cycle<S>,
    pub second: Cycle<S>,
    pub gram: [[S; 2]; 2],
    pub delta: S,
    /// `Δ / (g₀₀ g₁₁)`, invariant under rescaling of the generators.
    pub delta_hat: S,
}

impl<S: Scalar> Pencil<S> {
    pub fn new(first: Cycle<S>, second: Cycle<S>) -> Self {
        let g00 = norm(&first);
        let g11 = norm(&second);
        let g01 = pairing(&first, &second);
        let delta = g00.clone() * g11.clone() - g01.clone() * g01.clone();
        let diag = g00.clone() * g11.clone();
        let delta_hat = if diag.is_zero() {
            S::zero()
        } else {
            delta.clone() / diag
        };
        Pencil {
            first,
            second,
            gram: [[g00, g01.clone()], [g01, g11]],
            delta,
            delta_hat,
        }
    }

    /// Sign of `Δ`: exact for exact scalars, otherwise zero inside the
    /// `eps_deg` band on `delta_hat`.
    pub fn delta_sign(&self, tol: &Tolerance) -> i8 {
        if S::EXACT {
            self.delta.sign_with(&S::one(), 0.0)
        } else {
            self.delta_hat.sign_with(&S::one(), tol.eps_deg)
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AltitudePencil<S> {
    pub a_u: Cycle<S>,
    pub a_v: Cycle<S>,
    pub a_w: Cycle<S>,
    /// Gram data over the basis `(A(u), A(v))`.
    pub pencil: Pencil<S>,
}

impl<S: Scalar> AltitudePencil<S> {
    pub fn gram(&self) -> &[[S; 2]; 2] {
        &self.pencil.gram
    }

    pub fn delta(&self) -> &S {
        &self.pencil.delta
    }

    pub fn delta_hat(&self) -> &S {
        &self.pencil.delta_hat
    }

    pub fn altitudes(&self) -> [&Cycle<S>; 3] {
        [&self.a_u, &self.a_v, &self.a_w]
    }

    /// `A(u) + A(v) + A(w)`; the zero cycle up to rounding.
    pub fn residual(&self) -> Cycle<S> {
        &(&self.a_u + &self.a_v) + &self.a_w
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum IdealPoint<S> {
    /// The boundary point `(x, 0)`.
    Finite(S),
    /// The point represented by every 0-cycle.
    Infinity,
}

impl<S: Scalar> IdealPoint<S> {
    /// An isotropic cycle representing this boundary point.
    pub fn cycle(&self) -> Cycle<S> {
        match self {
            IdealPoint::Finite(x) => zero_cycle(&Vec2::new(x.clone(), S::zero())),
            IdealPoint::Infinity => Cycle::from_coeffs(S::zero(), S::zero(), S::zero(), S::one()),
        }
    }

    pub fn coincides(&self, other: &Self, tol: &Tolerance) -> bool {
        match (self, other) {
            (IdealPoint::Infinity, IdealPoint::Infinity) => true,
            (IdealPoint::Finite(a), IdealPoint::Finite(b)) => {
                let scale = S::max_of(S::one(), S::max_of(a.abs(), b.abs()));
                (a.clone() - b.clone()).is_negligible(&scale, tol.eps)
            }
            _ => false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConfigurationKind {
    Concurrent,
    AsymptoticallyParallel,
    DivergentlyParallel,
}

impl ConfigurationKind {
    pub const ALL: [ConfigurationKind; 3] = [
        ConfigurationKind::Concurrent,
        ConfigurationKind::AsymptoticallyParallel,
        ConfigurationKind::DivergentlyParallel,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ConfigurationKind::Concurrent => "concurrent",
            ConfigurationKind::AsymptoticallyParallel => "asymptotically_parallel",
            ConfigurationKind::DivergentlyParallel => "divergently_parallel",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.as_str() == s)
    }
}

impl fmt::Display for ConfigurationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Configuration<S> {
    Concurrent(SurdPoint<S>),
    AsymptoticallyParallel(IdealPoint<S>),
    DivergentlyParallel(HLine<S>),
}

impl<S: Scalar> Configuration<S> {
    pub fn kind(&self) -> ConfigurationKind {
        match self {
            Configuration::Concurrent(_) => ConfigurationKind::Concurrent,
            Configuration::AsymptoticallyParallel(_) => ConfigurationKind::AsymptoticallyParallel,
            Configuration::DivergentlyParallel(_) => ConfigurationKind::DivergentlyParallel,
        }
    }

    /// Whether the witness is incident to (or orthogonal to) the line `m`.
    pub fn witness_fits(&self, m: &Cycle<S>, tol: &Tolerance) -> bool {
        match self {
            Configuration::Concurrent(s) => s.lies_on(m, tol),
            Configuration::AsymptoticallyParallel(r) => {
                crate::cycle::is_orthogonal(&r.cycle(), m, tol)
            }
            Configuration::DivergentlyParallel(h) => crate::cycle::is_orthogonal(h.cycle(), m, tol),
        }
    }

    /// Same tag and, up to the tolerance, the same witness.
    pub fn same_as(&self, other: &Self, tol: &Tolerance) -> bool {
        match (self, other) {
            (Configuration::Concurrent(a), Configuration::Concurrent(b)) => a.coincides(b, tol),
            (Configuration::AsymptoticallyParallel(a), Configuration::AsymptoticallyParallel(b)) => {
                a.coincides(b, tol)
            }
            (Configuration::DivergentlyParallel(a), Configuration::DivergentlyParallel(b)) => {
                a.cycle().is_proportional(b.cycle(), tol)
            }
            _ => false,
        }
    }
}

pub fn side_cycles<S: Scalar>(
    t: &HTriangle<S>,
    tol: &Tolerance,
) -> Result<SideCycles<S>, GeometryError> {
    let l = line_through(&t.v, &t.w, tol)?.into_cycle();
    let m = line_through(&t.u, &t.w, tol)?.into_cycle();
    let n = line_through(&t.u, &t.v, tol)?.into_cycle();
    if l.is_proportional(&m, tol) || l.is_proportional(&n, tol) || m.is_proportional(&n, tol) {
        return Err(GeometryError::CollinearTriangle);
    }
    Ok(SideCycles { l, m, n })
}

/// The three altitude cycles, unnormalized, as produced by the pairing formulas.
pub fn altitude_cycles<S: Scalar>(s: &SideCycles<S>) -> [Cycle<S>; 3] {
    let SideCycles { l, m, n } = s;
    let a_u = &m.scaled(&pairing(n, l)) - &n.scaled(&pairing(m, l));
    let a_v = &n.scaled(&pairing(l, m)) - &l.scaled(&pairing(n, m));
    let a_w = &l.scaled(&pairing(m, n)) - &m.scaled(&pairing(l, n));
    [a_u, a_v, a_w]
}

pub fn altitude_pencil<S: Scalar>(
    s: &SideCycles<S>,
    tol: &Tolerance,
) -> Result<AltitudePencil<S>, GeometryError> {
    let [l, m, n] = s.as_array();
    if l.is_proportional(m, tol) || l.is_proportional(n, tol) || m.is_proportional(n, tol) {
        return Err(GeometryError::CollinearTriangle);
    }
    let [a_u, a_v, a_w] = altitude_cycles(s);
    for (name, a) in [("A(u)", &a_u), ("A(v)", &a_v), ("A(w)", &a_w)] {
        if a.is_zero() || !is_valid_line(a, tol)? {
            return Err(GeometryError::InternalInvariant(format!(
                "altitude {name} = {a} is not a line cycle"
            )));
        }
    }
    let pencil = Pencil::new(a_u.clone(), a_v.clone());
    Ok(AltitudePencil {
        a_u,
        a_v,
        a_w,
        pencil,
    })
}

/// The cycle `q` of the orthogonal complement of the pencil that is itself
/// orthogonal to the axis. The complement is `span{axis, q}`, and
/// `sign(norm(q)) = −sign(Δ)`.
pub fn complement_axis_partner<S: Scalar>(
    pencil: &Pencil<S>,
    tol: &Tolerance,
) -> Result<Cycle<S>, GeometryError> {
    let basis = orthogonal_complement(&[pencil.first.clone(), pencil.second.clone()], 2, tol)?;
    let p = axis::<S>();
    // Project each basis cycle off the axis (norm(axis) = 1) and keep the
    // best-conditioned one.
    let q = basis
        .iter()
        .map(|h| h - &p.scaled(&pairing(h, &p)))
        .max_by(|x, y| {
            let (nx, ny) = (x.max_abs(), y.max_abs());
            nx.partial_cmp(&ny).unwrap_or(std::cmp::Ordering::Equal)
        })
        .ok_or_else(|| GeometryError::InternalInvariant("empty complement".into()))?;
    if q.max_abs().is_negligible(&S::one(), tol.eps) {
        return Err(GeometryError::InternalInvariant(
            "complement of the pencil collapses onto the axis".into(),
        ));
    }
    let mut q = normalize(&q, tol)?;
    if !S::EXACT {
        q.b.y = S::zero();
    }
    Ok(q)
}

/// Both isotropic directions of `span{axis, q}` as points `(x, ±y)`: returns
/// `(x, y²)` of the root on the upper side, or `None` when `norm(q) ≥ 0`
/// (no two real roots).
fn isotropic_roots<S: Scalar>(q: &Cycle<S>, tol: &Tolerance) -> Option<SurdPoint<S>> {
    if degree(q, tol).ok()? != CycleDegree::Two {
        return None;
    }
    // q = (1, (b₁, 0), c); z(s) = q + κ·axis with κ² = −norm(q), and
    // s = (−b₁/2, κ/2). The root with ⟨axis, z(s)⟩ = κ > 0 lies in ℋ.
    let nq = norm(q);
    if !nq.is_negative() || nq.is_negligible(&pairing_scale(q, q), tol.eps) {
        return None;
    }
    let x = -q.b.x.clone() / S::from_int(2);
    let y_sq = -nq / S::from_int(4);
    Some(SurdPoint::new(x, y_sq))
}

/// Whether the isotropic-direction quadratic of the pencil has two distinct
/// real roots.
pub fn has_two_isotropic_roots<S: Scalar>(pencil: &Pencil<S>, tol: &Tolerance) -> bool {
    complement_axis_partner(pencil, tol)
        .ok()
        .and_then(|q| isotropic_roots(&q, tol))
        .is_some()
}

fn orthocenter_of<S: Scalar>(
    pencil: &Pencil<S>,
    tol: &Tolerance,
) -> Result<SurdPoint<S>, GeometryError> {
    if pencil.delta_sign(tol) <= 0 {
        return Err(GeometryError::NotConcurrent);
    }
    let q = complement_axis_partner(pencil, tol)?;
    let s = isotropic_roots(&q, tol).ok_or_else(|| {
        GeometryError::InternalInvariant(format!(
            "positive discriminant but no isotropic pair in complement (q = {q})"
        ))
    })?;
    if !s.y_sq.is_positive() {
        return Err(GeometryError::InternalInvariant(
            "orthocenter root not in the upper half-plane".into(),
        ));
    }
    Ok(s)
}

fn ideal_point_of<S: Scalar>(
    pencil: &Pencil<S>,
    tol: &Tolerance,
) -> Result<(IdealPoint<S>, Cycle<S>), GeometryError> {
    if pencil.delta_sign(tol) != 0 {
        return Err(GeometryError::NotDegenerate);
    }
    let [[g00, g01], [_, g11]] = &pencil.gram;
    // Kernel of the Gram matrix from its better-conditioned row.
    let (mu, lambda) = if g00.abs() >= g11.abs() {
        (g01.clone(), -g00.clone())
    } else {
        (g11.clone(), -g01.clone())
    };
    let r = Cycle::combine(&mu, &pencil.first, &lambda, &pencil.second);
    let ideal = match degree(&r, tol)? {
        CycleDegree::Zero => IdealPoint::Infinity,
        CycleDegree::Two => {
            let r = normalize(&r, tol)?;
            IdealPoint::Finite(-r.b.x.clone() / S::from_int(2))
        }
        CycleDegree::One => {
            return Err(GeometryError::InternalInvariant(format!(
                "radical cycle {r} is a 1-cycle"
            )))
        }
    };
    Ok((ideal, r))
}

fn common_perpendicular_of<S: Scalar>(
    pencil: &Pencil<S>,
    tol: &Tolerance,
) -> Result<HLine<S>, GeometryError> {
    if pencil.delta_sign(tol) >= 0 {
        return Err(GeometryError::NotDivergent);
    }
    let q = complement_axis_partner(pencil, tol)?;
    let nq = norm(&q);
    if !nq.is_positive() {
        return Err(GeometryError::InternalInvariant(format!(
            "negative discriminant but complement partner {q} has norm {nq}"
        )));
    }
    HLine::new(&q, tol).map_err(|e| {
        GeometryError::InternalInvariant(format!("common perpendicular {q} rejected: {e}"))
    })
}

fn classify_span<S: Scalar>(
    pencil: &Pencil<S>,
    tol: &Tolerance,
) -> Result<Configuration<S>, GeometryError> {
    Ok(match pencil.delta_sign(tol) {
        1 => Configuration::Concurrent(orthocenter_of(pencil, tol)?),
        0 => Configuration::AsymptoticallyParallel(ideal_point_of(pencil, tol)?.0),
        _ => Configuration::DivergentlyParallel(common_perpendicular_of(pencil, tol)?),
    })
}

pub fn orthocenter_witness<S: Scalar>(
    pencil: &AltitudePencil<S>,
    tol: &Tolerance,
) -> Result<SurdPoint<S>, GeometryError> {
    orthocenter_of(&pencil.pencil, tol)
}

pub fn ideal_point_witness<S: Scalar>(
    pencil: &AltitudePencil<S>,
    tol: &Tolerance,
) -> Result<IdealPoint<S>, GeometryError> {
    Ok(ideal_point_of(&pencil.pencil, tol)?.0)
}

/// The radical generator of a degenerate pencil, as computed from the Gram kernel.
pub fn radical_cycle<S: Scalar>(
    pencil: &Pencil<S>,
    tol: &Tolerance,
) -> Result<Cycle<S>, GeometryError> {
    Ok(ideal_point_of(pencil, tol)?.1)
}

pub fn common_perpendicular_witness<S: Scalar>(
    pencil: &AltitudePencil<S>,
    tol: &Tolerance,
) -> Result<HLine<S>, GeometryError> {
    common_perpendicular_of(&pencil.pencil, tol)
}

pub fn classify<S: Scalar>(
    pencil: &AltitudePencil<S>,
    tol: &Tolerance,
) -> Result<Configuration<S>, GeometryError> {
    classify_span(&pencil.pencil, tol)
}

/// Configuration of two distinct lines; returns `(Δ, configuration)` for the
/// basis `(ℓ, m)`.
pub fn classify_pair<S: Scalar>(
    first: &HLine<S>,
    second: &HLine<S>,
    tol: &Tolerance,
) -> Result<(Pencil<S>, Configuration<S>), GeometryError> {
    if first.cycle().is_proportional(second.cycle(), tol) {
        return Err(GeometryError::CoincidentLines);
    }
    let pencil = Pencil::new(first.cycle().clone(), second.cycle().clone());
    let config = classify_span(&pencil, tol)?;
    Ok((pencil, config))
}

/// `(Δ(s), Δ(s'))` where `s'` rescales the sides by `α, β, γ`.
pub fn scaling_check<S: Scalar>(
    s: &SideCycles<S>,
    alpha: &S,
    beta: &S,
    gamma: &S,
    tol: &Tolerance,
) -> Result<(S, S), GeometryError> {
    if alpha.is_zero() || beta.is_zero() || gamma.is_zero() {
        return Err(GeometryError::ZeroScalar);
    }
    let scaled = SideCycles {
        l: s.l.scaled(alpha),
        m: s.m.scaled(beta),
        n: s.n.scaled(gamma),
    };
    let base = altitude_pencil(s, tol)?;
    let other = altitude_pencil(&scaled, tol)?;
    Ok((base.delta().clone(), other.delta().clone()))
}

/// Everything computed for one triangle.
#[derive(Debug, Clone, PartialEq)]
pub struct TriangleAnalysis<S> {
    pub sides: SideCycles<S>,
    pub pencil: AltitudePencil<S>,
    pub configuration: Configuration<S>,
}

pub fn analyze_triangle<S: Scalar>(
    t: &HTriangle<S>,
    tol: &Tolerance,
) -> Result<TriangleAnalysis<S>, GeometryError> {
    let sides = side_cycles(t, tol)?;
    let pencil = altitude_pencil(&sides, tol)?;
    let configuration = classify(&pencil, tol)?;
    Ok(TriangleAnalysis {
        sides,
        pencil,
        configuration,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle::is_orthogonal;
    use crate::lines::perpendicular_through;
    use num_traits::Signed;
    use crate::Rational;

    type C = Cycle<Rational>;

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn tri(pts: [(Rational, Rational); 3]) -> HTriangle<Rational> {
        let t = tol();
        let [a, b, c] = pts.map(|(x, y)| HPoint::from_xy(x, y, &t).unwrap());
        HTriangle::new(a, b, c, &t).unwrap()
    }

    /// `((0, h), (1, 1), (−1, 1))`.
    fn family(h: Rational) -> HTriangle<Rational> {
        tri([(q(0, 1), h), (q(1, 1), q(1, 1)), (q(-1, 1), q(1, 1))])
    }

    #[test]
    fn sides_of_reference_triangles() {
        let s = side_cycles(&family(q(3, 1)), &tol()).unwrap();
        assert_eq!(s.l, C::from_ints(1, 0, 0, -2));
        assert_eq!(s.m, C::from_ints(1, -7, 0, -9));
        assert_eq!(s.n, C::from_ints(1, 7, 0, -9));
        let s = side_cycles(&family(q(2, 1)), &tol()).unwrap();
        assert_eq!(s.l, C::from_ints(1, 0, 0, -2));
        assert_eq!(s.m, C::from_ints(1, -2, 0, -4));
        assert_eq!(s.n, C::from_ints(1, 2, 0, -4));
    }

    #[test]
    fn collinear_triangle_rejected() {
        let t = tol();
        let p = |y| HPoint::from_xy(q(0, 1), q(y, 1), &t).unwrap();
        assert_eq!(
            HTriangle::new(p(1), p(2), p(3), &t),
            Err(GeometryError::CollinearTriangle)
        );
        assert_eq!(
            HTriangle::new(p(1), p(2), p(1), &t),
            Err(GeometryError::CoincidentPoints)
        );
    }

    #[test]
    fn pencil_h2_is_degenerate() {
        let s = side_cycles(&family(q(2, 1)), &tol()).unwrap();
        let ap = altitude_pencil(&s, &tol()).unwrap();
        assert_eq!(ap.a_u, C::from_ints(0, -4, 0, 0).scaled(&q(12, 1)));
        assert_eq!(ap.gram(), &[[q(2304, 1), q(-1152, 1)], [q(-1152, 1), q(576, 1)]]);
        assert_eq!(ap.delta(), &q(0, 1));
        assert!(ap.residual().is_zero());
    }

    #[test]
    fn pencil_h3_is_positive() {
        let s = side_cycles(&family(q(3, 1)), &tol()).unwrap();
        let ap = altitude_pencil(&s, &tol()).unwrap();
        assert_eq!(ap.gram(), &[[q(94864, 1), q(-47432, 1)], [q(-47432, 1), q(55076, 1)]]);
        assert_eq!(ap.delta(), &q(2974935040, 1));
        assert_eq!(ap.delta_hat(), &(q(2974935040, 1) / q(5224729664, 1)));
    }

    #[test]
    fn pencil_h3_2_is_negative() {
        let s = side_cycles(&family(q(3, 2)), &tol()).unwrap();
        let ap = altitude_pencil(&s, &tol()).unwrap();
        assert_eq!(ap.gram(), &[[q(289, 16), q(-289, 32)], [q(-289, 32), q(149, 64)]]);
        assert_eq!(ap.delta(), &q(-10115, 256));
        assert_eq!(ap.delta_hat(), &q(-40460, 43061));
        assert_eq!(ap.a_u, C::from_coeffs(q(0, 1), q(-17, 4), q(0, 1), q(0, 1)));
        assert_eq!(ap.a_v, C::from_coeffs(q(-7, 16), q(17, 8), q(0, 1), q(-5, 4)));
    }

    #[test]
    fn classify_reference_triangles() {
        let t = tol();
        let a = analyze_triangle(&family(q(3, 1)), &t).unwrap();
        assert_eq!(
            a.configuration,
            Configuration::Concurrent(SurdPoint::new(q(0, 1), q(32, 5)))
        );
        let a = analyze_triangle(&family(q(2, 1)), &t).unwrap();
        assert_eq!(a.configuration, Configuration::AsymptoticallyParallel(IdealPoint::Infinity));
        let a = analyze_triangle(&family(q(3, 2)), &t).unwrap();
        let expected = HLine::new(&C::from_coeffs(q(1, 1), q(0, 1), q(0, 1), q(-20, 7)), &t).unwrap();
        assert_eq!(a.configuration, Configuration::DivergentlyParallel(expected));
    }

    #[test]
    fn orthocenter_h3_and_wrong_branch_errors() {
        let t = tol();
        let s = side_cycles(&family(q(3, 1)), &t).unwrap();
        let ap = altitude_pencil(&s, &t).unwrap();
        let o = orthocenter_witness(&ap, &t).unwrap();
        for a in ap.altitudes() {
            assert!(o.lies_on(a, &t));
        }
        // the mirror root (0, −√(32/5)) is on the same Euclidean circles but
        // is encoded by κ < 0; the upper root has positive height
        assert!(o.y_sq.is_positive());
        let [x, y] = o.approx();
        assert!(x.abs() < 1e-15);
        assert!((y - (32.0f64 / 5.0).sqrt()).abs() < 1e-12);
        assert_eq!(ideal_point_witness(&ap, &t), Err(GeometryError::NotDegenerate));
        assert_eq!(common_perpendicular_witness(&ap, &t), Err(GeometryError::NotDivergent));
    }

    #[test]
    fn degenerate_and_divergent_witness_errors() {
        let t = tol();
        let ap = altitude_pencil(&side_cycles(&family(q(2, 1)), &t).unwrap(), &t).unwrap();
        assert_eq!(orthocenter_witness(&ap, &t), Err(GeometryError::NotConcurrent));
        assert_eq!(common_perpendicular_witness(&ap, &t), Err(GeometryError::NotDivergent));
        let r = radical_cycle(&ap.pencil, &t).unwrap();
        for a in ap.altitudes() {
            assert!(is_orthogonal(&r, a, &t));
        }
        let ap = altitude_pencil(&side_cycles(&family(q(3, 2)), &t).unwrap(), &t).unwrap();
        assert_eq!(orthocenter_witness(&ap, &t), Err(GeometryError::NotConcurrent));
        assert_eq!(ideal_point_witness(&ap, &t), Err(GeometryError::NotDegenerate));
        let h = common_perpendicular_witness(&ap, &t).unwrap();
        for a in ap.altitudes() {
            assert_eq!(pairing(h.cycle(), a), q(0, 1));
        }
    }

    #[test]
    fn translated_h2_triangle_stays_at_infinity() {
        let t = tol();
        let tr = tri([(q(1, 1), q(2, 1)), (q(2, 1), q(1, 1)), (q(0, 1), q(1, 1))]);
        let a = analyze_triangle(&tr, &t).unwrap();
        assert_eq!(a.configuration, Configuration::AsymptoticallyParallel(IdealPoint::Infinity));
    }

    #[test]
    fn finite_ideal_point_from_moved_h2_triangle() {
        // Image of the h=2 triangle under z ↦ 1 − 1/(z − 3), an isometry of ℋ
        // sending ∞ to 1.
        let t = tol();
        let tr = tri([(q(16, 13), q(2, 13)), (q(7, 5), q(1, 5)), (q(21, 17), q(1, 17))]);
        let a = analyze_triangle(&tr, &t).unwrap();
        assert_eq!(a.pencil.delta(), &q(0, 1));
        assert_eq!(
            a.configuration,
            Configuration::AsymptoticallyParallel(IdealPoint::Finite(q(1, 1)))
        );
    }

    #[test]
    fn altitudes_agree_with_perpendicular_construction() {
        let t = tol();
        let tr = family(q(3, 1));
        let s = side_cycles(&tr, &t).unwrap();
        let ap = altitude_pencil(&s, &t).unwrap();
        for (vertex, side, alt) in [(&tr.u, &s.l, &ap.a_u), (&tr.v, &s.m, &ap.a_v), (&tr.w, &s.n, &ap.a_w)] {
            let side = HLine::new(side, &t).unwrap();
            let perp = perpendicular_through(vertex, &side, &t).unwrap();
            assert!(perp.cycle().is_proportional(alt, &t));
        }
    }

    #[test]
    fn pair_examples() {
        let t = tol();
        let vert = |x| HLine::vertical(q(x, 1));
        let semi = |r2| HLine::semicircle(q(0, 1), q(r2, 1), &t).unwrap();

        let (p, c) = classify_pair(&vert(0), &semi(2), &t).unwrap();
        assert_eq!(p.delta, q(8, 1));
        assert_eq!(c, Configuration::Concurrent(SurdPoint::new(q(0, 1), q(2, 1))));

        let (p, c) = classify_pair(&vert(0), &vert(1), &t).unwrap();
        assert_eq!(p.delta, q(0, 1));
        assert_eq!(c, Configuration::AsymptoticallyParallel(IdealPoint::Infinity));

        let (p, c) = classify_pair(&semi(1), &semi(4), &t).unwrap();
        assert_eq!(p.delta, q(-36, 1));
        assert_eq!(c, Configuration::DivergentlyParallel(vert(0)));

        assert_eq!(classify_pair(&vert(2), &vert(2), &t), Err(GeometryError::CoincidentLines));
    }

    #[test]
    fn pair_tangent_on_boundary() {
        let t = tol();
        let a = HLine::semicircle(q(0, 1), q(1, 1), &t).unwrap();
        let b = HLine::semicircle(q(2, 1), q(1, 1), &t).unwrap();
        let (p, c) = classify_pair(&a, &b, &t).unwrap();
        assert_eq!(p.delta, q(0, 1));
        assert_eq!(c, Configuration::AsymptoticallyParallel(IdealPoint::Finite(q(1, 1))));
    }

    #[test]
    fn scaling_examples() {
        let t = tol();
        let s3 = side_cycles(&family(q(3, 1)), &t).unwrap();
        let (d, ds) = scaling_check(&s3, &q(1, 1), &q(1, 1), &q(1, 1), &t).unwrap();
        assert_eq!(ds / d, q(1, 1));
        let (d, ds) = scaling_check(&s3, &q(2, 1), &q(1, 1), &q(1, 1), &t).unwrap();
        assert_eq!(ds / d, q(16, 1));
        let s32 = side_cycles(&family(q(3, 2)), &t).unwrap();
        let (d, ds) = scaling_check(&s32, &q(-1, 1), &q(1, 1), &q(1, 1), &t).unwrap();
        assert_eq!(ds, d);
        assert!(d.is_negative());
        assert_eq!(
            scaling_check(&s32, &q(0, 1), &q(1, 1), &q(1, 1), &t),
            Err(GeometryError::ZeroScalar)
        );
    }

    #[test]
    fn float_kernel_matches_reference_triangles() {
        let t = tol();
        let make = |h: f64| {
            let p = |x: f64, y: f64| HPoint::from_xy(x, y, &t).unwrap();
            HTriangle::new(p(0.0, h), p(1.0, 1.0), p(-1.0, 1.0), &t).unwrap()
        };
        let a = analyze_triangle(&make(3.0), &t).unwrap();
        match a.configuration {
            Configuration::Concurrent(s) => {
                let [x, y] = s.approx();
                assert!(x.abs() < 1e-12);
                assert!((y - (32.0f64 / 5.0).sqrt()).abs() < 1e-12);
            }
            other => panic!("unexpected {other:?}"),
        }
        let a = analyze_triangle(&make(2.0), &t).unwrap();
        assert_eq!(a.configuration, Configuration::AsymptoticallyParallel(IdealPoint::Infinity));
        let a = analyze_triangle(&make(1.5), &t).unwrap();
        match a.configuration {
            Configuration::DivergentlyParallel(h) => {
                let c = h.cycle();
                assert!((c.a - 1.0).abs() < 1e-12 && c.b.x.abs() < 1e-12);
                assert!((c.c + 20.0 / 7.0).abs() < 1e-12);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
