//! Points and lines of the upper half-plane model.
//!
//! A point `u` with `u.y > 0` is encoded by its zero-radius cycle `z(u)`; a
//! hyperbolic line by a cycle orthogonal to the axis cycle with positive norm
//! (a vertical ray or a semicircle centered on the x-axis). Incidence is
//! `⟨z(u), m⟩ = 0`.

use crate::cycle::{
    is_orthogonal, norm, normalize, orthogonal_complement, pairing, pairing_scale, zero_cycle,
    Cycle, Vec2,
};
use crate::error::GeometryError;
use crate::scalar::{Scalar, Tolerance};

/// The boundary axis `p(X) = j·X` with `j = (0, −1)`.
pub fn axis<S: Scalar>() -> Cycle<S> {
    Cycle::from_coeffs(S::zero(), S::zero(), -S::one(), S::zero())
}

#[derive(Debug, Clone, PartialEq)]
pub struct HPoint<S> {
    pos: Vec2<S>,
}

impl<S: Scalar> HPoint<S> {
    pub fn new(pos: Vec2<S>, tol: &Tolerance) -> Result<Self, GeometryError> {
        if in_upper_half(&pos, tol) {
            Ok(HPoint { pos })
        } else {
            Err(GeometryError::NotInUpperHalfPlane)
        }
    }

    pub fn from_xy(x: S, y: S, tol: &Tolerance) -> Result<Self, GeometryError> {
        HPoint::new(Vec2::new(x, y), tol)
    }

    pub fn pos(&self) -> &Vec2<S> {
        &self.pos
    }

    pub fn x(&self) -> &S {
        &self.pos.x
    }

    pub fn y(&self) -> &S {
        &self.pos.y
    }

    pub fn zero_cycle(&self) -> Cycle<S> {
        zero_cycle(&self.pos)
    }

    pub fn coincides(&self, other: &Self, tol: &Tolerance) -> bool {
        let d = &self.pos - &other.pos;
        let scale = S::max_of(self.pos.max_abs(), other.pos.max_abs());
        d.x.is_negligible(&scale, tol.eps) && d.y.is_negligible(&scale, tol.eps)
    }
}

/// A validated, normalized line cycle.
#[derive(Debug, Clone, PartialEq)]
pub struct HLine<S> {
    cycle: Cycle<S>,
}

impl<S: Scalar> HLine<S> {
    pub fn new(cycle: &Cycle<S>, tol: &Tolerance) -> Result<Self, GeometryError> {
        if !is_valid_line(cycle, tol)? {
            return Err(GeometryError::InvalidLineCycle);
        }
        Ok(HLine {
            cycle: normalize(cycle, tol)?,
        })
    }

    /// The vertical ray `x = x0`.
    pub fn vertical(x0: S) -> Self {
        HLine {
            cycle: Cycle::from_coeffs(S::zero(), S::one(), S::zero(), -x0),
        }
    }

    /// The semicircle with the given center on the axis and square radius.
    pub fn semicircle(center: S, radius_sq: S, tol: &Tolerance) -> Result<Self, GeometryError> {
        let c = center.clone() * center.clone() - radius_sq;
        let cycle = Cycle::from_coeffs(S::one(), S::from_int(-2) * center, S::zero(), c);
        HLine::new(&cycle, tol)
    }

    pub fn cycle(&self) -> &Cycle<S> {
        &self.cycle
    }

    pub fn into_cycle(self) -> Cycle<S> {
        self.cycle
    }
}

pub fn in_upper_half<S: Scalar>(u: &Vec2<S>, tol: &Tolerance) -> bool {
    let p = axis::<S>();
    let z = zero_cycle(u);
    // ⟨p, z(u)⟩ = 2·u.y
    let value = pairing(&p, &z);
    value.is_positive() && !u.y.is_negligible(&u.max_abs(), tol.eps)
}

pub fn is_valid_line<S: Scalar>(m: &Cycle<S>, tol: &Tolerance) -> Result<bool, GeometryError> {
    if m.max_abs().is_zero() {
        return Err(GeometryError::ZeroCycleInput);
    }
    let p = axis::<S>();
    let nm = norm(m);
    let positive = nm.is_positive() && !nm.is_negligible(&pairing_scale(m, m), tol.eps);
    Ok(is_orthogonal(m, &p, tol) && positive)
}

pub fn point_on_line<S: Scalar>(u: &HPoint<S>, line: &HLine<S>, tol: &Tolerance) -> bool {
    is_orthogonal(&u.zero_cycle(), line.cycle(), tol)
}

/// The line spanning the one-dimensional complement of three cycles.
fn complement_line<S: Scalar>(
    generators: &[Cycle<S>; 3],
    tol: &Tolerance,
) -> Result<HLine<S>, GeometryError> {
    let basis = orthogonal_complement(generators, 3, tol)?;
    let [m] = basis.as_slice() else {
        return Err(GeometryError::InternalInvariant(format!(
            "complement has dimension {}, expected 1",
            basis.len()
        )));
    };
    let m = normalize(m, tol)?;
    if !is_valid_line(&m, tol)? {
        return Err(GeometryError::InternalInvariant(format!(
            "complement cycle {m} is not a hyperbolic line"
        )));
    }
    Ok(HLine { cycle: m })
}

/// The hyperbolic line through two distinct points.
pub fn line_through<S: Scalar>(
    u: &HPoint<S>,
    v: &HPoint<S>,
    tol: &Tolerance,
) -> Result<HLine<S>, GeometryError> {
    if u.coincides(v, tol) {
        return Err(GeometryError::CoincidentPoints);
    }
    complement_line(&[axis(), u.zero_cycle(), v.zero_cycle()], tol)
}

/// The unique line through `u` orthogonal to `line`.
pub fn perpendicular_through<S: Scalar>(
    u: &HPoint<S>,
    line: &HLine<S>,
    tol: &Tolerance,
) -> Result<HLine<S>, GeometryError> {
    complement_line(&[axis(), line.cycle().clone(), u.zero_cycle()], tol)
}

/// A point of the upper half-plane given by `x` and the square of its height.
///
/// Orthocenters and Euclidean intersection points of rational lines have
/// rational `x` and `y²` but generally irrational `y`; keeping `y²` lets the
/// exact kernel check incidences without rounding.
#[derive(Debug, Clone, PartialEq)]
pub struct SurdPoint<S> {
    pub x: S,
    pub y_sq: S,
}

impl<S: Scalar> SurdPoint<S> {
    pub fn new(x: S, y_sq: S) -> Self {
        SurdPoint { x, y_sq }
    }

    pub fn from_point(p: &HPoint<S>) -> Self {
        SurdPoint::new(p.x().clone(), p.y().clone() * p.y().clone())
    }

    /// `(x, y)` rounded to `f64`.
    pub fn approx(&self) -> [f64; 2] {
        [self.x.to_f64_lossy(), crate::scalar::approx_sqrt(&self.y_sq)]
    }

    /// The height, when it is representable in `S`.
    pub fn y(&self) -> Option<S> {
        self.y_sq.sqrt_exact()
    }

    pub fn coincides(&self, other: &Self, tol: &Tolerance) -> bool {
        let scale = S::max_of(
            S::max_of(self.x.abs(), other.x.abs()),
            S::max_of(self.y_sq.abs(), other.y_sq.abs()),
        );
        (self.x.clone() - other.x.clone()).is_negligible(&scale, tol.eps)
            && (self.y_sq.clone() - other.y_sq.clone()).is_negligible(&scale, tol.eps)
    }

    /// Whether `⟨z(s), m⟩ = 0` for this point `s`.
    ///
    /// Writes the pairing as `P + Q·y` with `P, Q` free of `y`; when `y` is
    /// not representable the test is `P = −Q·y` decided by signs and squares.
    pub fn lies_on(&self, m: &Cycle<S>, tol: &Tolerance) -> bool {
        let m2 = S::from_int(-2);
        let r_sq = self.x.clone() * self.x.clone() + self.y_sq.clone();
        let p_part = m2.clone() * m.b.x.clone() * self.x.clone()
            - S::from_int(2) * m.c.clone()
            - S::from_int(2) * m.a.clone() * r_sq.clone();
        let q_part = m2 * m.b.y.clone();
        let scale = m.max_abs() * S::max_of(S::one(), S::max_of(self.x.abs(), r_sq.abs()));
        match self.y() {
            Some(y) => (p_part + q_part * y).is_negligible(&scale, tol.eps),
            None => {
                if q_part.is_zero() {
                    return p_part.is_zero();
                }
                let lhs = p_part.clone() * p_part.clone();
                let rhs = q_part.clone() * q_part.clone() * self.y_sq.clone();
                lhs == rhs && (p_part.is_zero() || p_part.signum() != q_part.signum())
            }
        }
    }
}
