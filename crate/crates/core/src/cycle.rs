//! The four-dimensional space of cycles `a X·X + b·X + c` and its pairing.
//!
//! A cycle is identified with its coefficient vector `(a, b₁, b₂, c)`. The
//! pairing `⟨p, q⟩ = b_p·b_q − 2 a_p c_q − 2 a_q c_p` is a symmetric bilinear
//! form of signature (3, 1); its zero set structure is what the rest of the
//! crate builds on.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::GeometryError;
use crate::scalar::{Scalar, Tolerance};

#[derive(Debug, Clone, PartialEq)]
pub struct Vec2<S> {
    pub x: S,
    pub y: S,
}

impl<S: Scalar> Vec2<S> {
    pub fn new(x: S, y: S) -> Self {
        Vec2 { x, y }
    }

    pub fn zero() -> Self {
        Vec2::new(S::zero(), S::zero())
    }

    pub fn dot(&self, other: &Self) -> S {
        self.x.clone() * other.x.clone() + self.y.clone() * other.y.clone()
    }

    pub fn scaled(&self, k: &S) -> Self {
        Vec2::new(self.x.clone() * k.clone(), self.y.clone() * k.clone())
    }

    pub fn max_abs(&self) -> S {
        S::max_of(self.x.abs(), self.y.abs())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
}

impl<S: Scalar> Add for &Vec2<S> {
    type Output = Vec2<S>;
    fn add(self, rhs: &Vec2<S>) -> Vec2<S> {
        Vec2::new(self.x.clone() + rhs.x.clone(), self.y.clone() + rhs.y.clone())
    }
}

impl<S: Scalar> Sub for &Vec2<S> {
    type Output = Vec2<S>;
    fn sub(self, rhs: &Vec2<S>) -> Vec2<S> {
        Vec2::new(self.x.clone() - rhs.x.clone(), self.y.clone() - rhs.y.clone())
    }
}

impl<S: Scalar> fmt::Display for Vec2<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CycleDegree {
    Zero,
    One,
    Two,
}

/// `p(X) = a X·X + b·X + c`.
#[derive(Debug, Clone, PartialEq)]
pub struct Cycle<S> {
    pub a: S,
    pub b: Vec2<S>,
    pub c: S,
}

impl<S: Scalar> Cycle<S> {
    pub fn new(a: S, b: Vec2<S>, c: S) -> Self {
        Cycle { a, b, c }
    }

    /// Shorthand for `Cycle::new(a, Vec2::new(b1, b2), c)`.
    pub fn from_coeffs(a: S, b1: S, b2: S, c: S) -> Self {
        Cycle::new(a, Vec2::new(b1, b2), c)
    }

    pub fn from_ints(a: i64, b1: i64, b2: i64, c: i64) -> Self {
        Cycle::from_coeffs(S::from_int(a), S::from_int(b1), S::from_int(b2), S::from_int(c))
    }

    pub fn zero() -> Self {
        Cycle::new(S::zero(), Vec2::zero(), S::zero())
    }

    /// Coefficients in the order `(a, b₁, b₂, c)`.
    pub fn coords(&self) -> [S; 4] {
        [self.a.clone(), self.b.x.clone(), self.b.y.clone(), self.c.clone()]
    }

    pub fn from_coords([a, b1, b2, c]: [S; 4]) -> Self {
        Cycle::from_coeffs(a, b1, b2, c)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    /// Largest absolute coefficient, used as the scale for relative zero tests.
    pub fn max_abs(&self) -> S {
        S::max_of(S::max_of(self.a.abs(), self.b.max_abs()), self.c.abs())
    }

    /// Evaluate the quadratic at a point.
    pub fn eval(&self, at: &Vec2<S>) -> S {
        self.a.clone() * at.dot(at) + self.b.dot(at) + self.c.clone()
    }

    /// Componentwise multiple, without the nonzero check of [`scale`].
    pub fn scaled(&self, k: &S) -> Self {
        Cycle::new(self.a.clone() * k.clone(), self.b.scaled(k), self.c.clone() * k.clone())
    }

    /// `α·p + β·q`.
    pub fn combine(alpha: &S, p: &Self, beta: &S, q: &Self) -> Self {
        &p.scaled(alpha) + &q.scaled(beta)
    }

    /// Whether the two cycles are nonzero multiples of each other.
    pub fn is_proportional(&self, other: &Self, tol: &Tolerance) -> bool {
        let p = self.coords();
        let q = other.coords();
        let scale = self.max_abs() * other.max_abs();
        // All 2x2 minors of the 2x4 matrix [p; q] vanish.
        for i in 0..4 {
            for j in (i + 1)..4 {
                let minor = p[i].clone() * q[j].clone() - p[j].clone() * q[i].clone();
                if !minor.is_negligible(&scale, tol.eps) {
                    return false;
                }
            }
        }
        !self.is_zero() && !other.is_zero()
    }
}

impl<S: Scalar> Add for &Cycle<S> {
    type Output = Cycle<S>;
    fn add(self, rhs: &Cycle<S>) -> Cycle<S> {
        Cycle::new(
            self.a.clone() + rhs.a.clone(),
            &self.b + &rhs.b,
            self.c.clone() + rhs.c.clone(),
        )
    }
}

impl<S: Scalar> Sub for &Cycle<S> {
    type Output = Cycle<S>;
    fn sub(self, rhs: &Cycle<S>) -> Cycle<S> {
        Cycle::new(
            self.a.clone() - rhs.a.clone(),
            &self.b - &rhs.b,
            self.c.clone() - rhs.c.clone(),
        )
    }
}

impl<S: Scalar> Neg for &Cycle<S> {
    type Output = Cycle<S>;
    fn neg(self) -> Cycle<S> {
        self.scaled(&-S::one())
    }
}

impl<S: Scalar> fmt::Display for Cycle<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

pub fn pairing<S: Scalar>(p: &Cycle<S>, q: &Cycle<S>) -> S {
    let two = S::from_int(2);
    p.b.dot(&q.b) - two.clone() * p.a.clone() * q.c.clone() - two * q.a.clone() * p.c.clone()
}

/// `⟨p, p⟩ = b·b − 4ac`.
pub fn norm<S: Scalar>(p: &Cycle<S>) -> S {
    pairing(p, p)
}

/// Scale against which a pairing of `p` and `q` is judged to be zero.
pub fn pairing_scale<S: Scalar>(p: &Cycle<S>, q: &Cycle<S>) -> S {
    p.max_abs() * q.max_abs()
}

/// Whether `⟨p, q⟩` vanishes (exactly, or relative to the operands' scale).
pub fn is_orthogonal<S: Scalar>(p: &Cycle<S>, q: &Cycle<S>, tol: &Tolerance) -> bool {
    pairing(p, q).is_negligible(&pairing_scale(p, q), tol.eps)
}

/// The zero-radius circle `z(u)(X) = (X − u)·(X − u)`.
pub fn zero_cycle<S: Scalar>(u: &Vec2<S>) -> Cycle<S> {
    Cycle::new(S::one(), u.scaled(&S::from_int(-2)), u.dot(u))
}

pub fn degree<S: Scalar>(p: &Cycle<S>, tol: &Tolerance) -> Result<CycleDegree, GeometryError> {
    let scale = p.max_abs();
    if scale.is_zero() {
        return Err(GeometryError::ZeroCycleInput);
    }
    if !p.a.is_negligible(&scale, tol.eps) {
        Ok(CycleDegree::Two)
    } else if !p.b.max_abs().is_negligible(&scale, tol.eps) {
        Ok(CycleDegree::One)
    } else {
        Ok(CycleDegree::Zero)
    }
}

/// Center `−b/2a` and square radius `(b·b − 4ac)/4a²` of a 2-cycle.
pub fn center_and_square_radius<S: Scalar>(
    p: &Cycle<S>,
    tol: &Tolerance,
) -> Result<(Vec2<S>, S), GeometryError> {
    if degree(p, tol)? != CycleDegree::Two {
        return Err(GeometryError::NotATwoCycle);
    }
    let two_a = S::from_int(2) * p.a.clone();
    let center = p.b.scaled(&(-S::one() / two_a.clone()));
    let s = norm(p) / (two_a.clone() * two_a);
    Ok((center, s))
}

pub fn scale<S: Scalar>(p: &Cycle<S>, lambda: &S) -> Result<Cycle<S>, GeometryError> {
    if lambda.is_zero() {
        return Err(GeometryError::ZeroScalar);
    }
    Ok(p.scaled(lambda))
}

/// Canonical representative of the projective class of `p`.
///
/// 2-cycles get `a = 1`, 0-cycles get `c = 1`. 1-cycles are scaled so the
/// first non-negligible component of `b` equals `1`; for line cycles (`b₂ = 0`)
/// that is the same as `|b| = 1` with `b₁ > 0`.
pub fn normalize<S: Scalar>(p: &Cycle<S>, tol: &Tolerance) -> Result<Cycle<S>, GeometryError> {
    let scale = p.max_abs();
    let mut out = match degree(p, tol)? {
        CycleDegree::Two => p.scaled(&(S::one() / p.a.clone())),
        CycleDegree::One => {
            let lead = if p.b.x.is_negligible(&scale, tol.eps) {
                p.b.y.clone()
            } else {
                p.b.x.clone()
            };
            let mut q = p.scaled(&(S::one() / lead));
            q.a = S::zero();
            q
        }
        CycleDegree::Zero => Cycle::new(S::zero(), Vec2::zero(), S::one()),
    };
    if !S::EXACT {
        // Snap components that are negligible against the largest one.
        let s = out.max_abs();
        for v in [&mut out.a, &mut out.b.x, &mut out.b.y, &mut out.c] {
            if v.is_negligible(&s, tol.eps) {
                *v = S::zero();
            }
        }
    }
    Ok(out)
}

/// Row of the linear system `⟨q, g⟩ = 0` in the unknowns `(a, b₁, b₂, c)` of `q`.
fn constraint_row<S: Scalar>(g: &Cycle<S>) -> [S; 4] {
    let m2 = S::from_int(-2);
    [m2.clone() * g.c.clone(), g.b.x.clone(), g.b.y.clone(), m2 * g.a.clone()]
}

/// Reduced row echelon form with full pivot search. Returns the pivot columns.
///
/// Rows are pre-scaled to unit max-norm; a candidate pivot is rejected when it
/// is negligible against the largest entry of the scaled matrix.
pub(crate) fn row_reduce<S: Scalar>(rows: &mut Vec<[S; 4]>, tol: &Tolerance) -> Vec<usize> {
    for row in rows.iter_mut() {
        let m = row.iter().fold(S::zero(), |acc, v| S::max_of(acc, v.abs()));
        if !m.is_zero() {
            for v in row.iter_mut() {
                *v = v.clone() / m.clone();
            }
        }
    }
    let global = rows
        .iter()
        .flat_map(|r| r.iter())
        .fold(S::zero(), |acc, v| S::max_of(acc, v.abs()));
    let mut pivots = Vec::new();
    let mut used = [false; 4];
    for r in 0..rows.len() {
        let mut best: Option<(usize, usize, S)> = None;
        for (i, row) in rows.iter().enumerate().skip(r) {
            for (j, v) in row.iter().enumerate() {
                if used[j] {
                    continue;
                }
                let a = v.abs();
                if best.as_ref().is_none_or(|(_, _, b)| a > *b) {
                    best = Some((i, j, a));
                }
            }
        }
        let Some((pi, pj, pv)) = best else { break };
        if pv.is_zero() || pv.is_negligible(&global, tol.eps) {
            break;
        }
        rows.swap(r, pi);
        used[pj] = true;
        let pivot = rows[r][pj].clone();
        for v in rows[r].iter_mut() {
            *v = v.clone() / pivot.clone();
        }
        let prow = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[pj].is_zero() {
                continue;
            }
            let f = row[pj].clone();
            for (v, pv) in row.iter_mut().zip(prow.iter()) {
                *v = v.clone() - f.clone() * pv.clone();
            }
            row[pj] = S::zero();
        }
        pivots.push(pj);
    }
    pivots
}

/// Dimension of the span of the given cycles.
pub fn span_rank<S: Scalar>(cycles: &[Cycle<S>], tol: &Tolerance) -> usize {
    let mut rows: Vec<[S; 4]> = cycles.iter().map(|c| c.coords()).collect();
    row_reduce(&mut rows, tol).len()
}

/// Basis of `{q : ⟨q, g⟩ = 0 for every generator g}`.
///
/// `expected_rank` is the dimension the caller asserts the generators span;
/// a mismatch is reported as [`GeometryError::RankDeficient`].
pub fn orthogonal_complement<S: Scalar>(
    generators: &[Cycle<S>],
    expected_rank: usize,
    tol: &Tolerance,
) -> Result<Vec<Cycle<S>>, GeometryError> {
    let mut rows: Vec<[S; 4]> = generators.iter().map(constraint_row).collect();
    let pivots = row_reduce(&mut rows, tol);
    if pivots.len() != expected_rank {
        return Err(GeometryError::RankDeficient {
            expected: expected_rank,
            found: pivots.len(),
        });
    }
    let basis = (0..4)
        .filter(|j| !pivots.contains(j))
        .map(|free| {
            let mut v: [S; 4] = std::array::from_fn(|_| S::zero());
            v[free] = S::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[r][free].clone();
            }
            Cycle::from_coords(v)
        })
        .collect();
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type C = Cycle<Rational>;

    fn r(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    fn pt(x: i64, y: i64) -> Vec2<Rational> {
        Vec2::new(Rational::from_int(x), Rational::from_int(y))
    }

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn pairing_examples() {
        let p = C::from_ints(1, 0, 0, 1);
        assert_eq!(pairing(&p, &p), r(-4, 1));
        assert_eq!(pairing(&zero_cycle(&pt(0, 1)), &zero_cycle(&pt(0, 2))), r(-2, 1));
        let q = C::from_ints(1, -7, 0, -9);
        assert_eq!(pairing(&C::from_ints(1, 0, 0, -2), &q), r(22, 1));
    }

    #[test]
    fn norm_examples() {
        assert_eq!(norm(&C::from_ints(0, 0, -1, 0)), r(1, 1));
        assert_eq!(norm(&zero_cycle(&pt(3, -1))), r(0, 1));
        assert_eq!(norm(&C::from_ints(1, -7, 0, -9)), r(85, 1));
    }

    #[test]
    fn zero_cycle_examples() {
        assert_eq!(zero_cycle(&pt(0, 0)), C::from_ints(1, 0, 0, 0));
        assert_eq!(zero_cycle(&pt(1, 2)), C::from_ints(1, -2, -4, 5));
        let z = zero_cycle(&pt(0, 2));
        assert_eq!(pairing(&z, &C::from_ints(1, 0, 0, -2)), r(-4, 1));
        // ⟨p, z(u)⟩ = −2 a_p · (p(u)/a_p) for a_z = 1
        let p = C::from_ints(1, 0, 0, -2);
        assert_eq!(pairing(&p, &z), r(-2, 1) * p.eval(&pt(0, 2)));
    }

    #[test]
    fn degree_examples() {
        assert_eq!(degree(&C::from_ints(1, 0, 0, 1), &tol()), Ok(CycleDegree::Two));
        assert_eq!(degree(&C::from_ints(0, 3, 4, 7), &tol()), Ok(CycleDegree::One));
        assert_eq!(degree(&C::from_ints(0, 0, 0, 5), &tol()), Ok(CycleDegree::Zero));
        assert_eq!(degree(&C::zero(), &tol()), Err(GeometryError::ZeroCycleInput));
    }

    #[test]
    fn degree_float_tolerance() {
        let p = Cycle::<f64>::from_coeffs(1e-13, 1.0, 0.0, 2.0);
        assert_eq!(degree(&p, &tol()), Ok(CycleDegree::One));
        let q = Cycle::<f64>::from_coeffs(1e-13, 1e-14, 0.0, 2.0);
        assert_eq!(degree(&q, &tol()), Ok(CycleDegree::Zero));
    }

    #[test]
    fn center_and_square_radius_examples() {
        let (c, s) = center_and_square_radius(&C::from_ints(1, -2, 0, -4), &tol()).unwrap();
        assert_eq!((c, s), (pt(1, 0), r(5, 1)));
        let (c, s) = center_and_square_radius(&zero_cycle(&pt(2, 3)), &tol()).unwrap();
        assert_eq!((c, s), (pt(2, 3), r(0, 1)));
        let (c, s) = center_and_square_radius(&C::from_ints(1, 0, 0, 1), &tol()).unwrap();
        assert_eq!((c, s), (pt(0, 0), r(-1, 1)));
        assert_eq!(
            center_and_square_radius(&C::from_ints(0, 1, 0, 0), &tol()),
            Err(GeometryError::NotATwoCycle)
        );
    }

    #[test]
    fn scale_examples() {
        let p = C::from_ints(1, 0, 0, -2);
        assert_eq!(scale(&p, &r(3, 1)).unwrap(), C::from_ints(3, 0, 0, -6));
        let q = C::from_ints(1, -7, 0, -9);
        assert_eq!(norm(&scale(&q, &r(2, 1)).unwrap()), r(340, 1));
        assert_eq!(scale(&p, &r(1, 1)).unwrap(), p);
        assert_eq!(scale(&p, &r(0, 1)), Err(GeometryError::ZeroScalar));
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize(&C::from_ints(3, 0, 0, -6), &tol()).unwrap(), C::from_ints(1, 0, 0, -2));
        assert_eq!(normalize(&C::from_ints(0, -14, 0, 0), &tol()).unwrap(), C::from_ints(0, 1, 0, 0));
        assert_eq!(normalize(&C::from_ints(0, 0, 0, -4), &tol()).unwrap(), C::from_ints(0, 0, 0, 1));
        assert_eq!(normalize(&C::zero(), &tol()), Err(GeometryError::ZeroCycleInput));
        assert_eq!(
            normalize(&C::from_ints(0, 0, -3, 6), &tol()).unwrap(),
            C::from_ints(0, 0, 1, -2)
        );
    }

    #[test]
    fn complement_of_three_is_vertical_axis() {
        let axis = C::from_ints(0, 0, -1, 0);
        let gens = [axis, zero_cycle(&pt(0, 1)), C::from_ints(1, 0, 0, -2)];
        let basis = orthogonal_complement(&gens, 3, &tol()).unwrap();
        assert_eq!(basis.len(), 1);
        assert!(basis[0].is_proportional(&C::from_ints(0, 1, 0, 0), &tol()));
    }

    #[test]
    fn complement_of_axis_has_dimension_three() {
        let axis = C::from_ints(0, 0, -1, 0);
        let basis = orthogonal_complement(std::slice::from_ref(&axis), 1, &tol()).unwrap();
        assert_eq!(basis.len(), 3);
        assert_eq!(span_rank(&basis, &tol()), 3);
        for q in &basis {
            assert_eq!(pairing(q, &axis), r(0, 1));
        }
    }

    #[test]
    fn complement_reports_rank_deficiency() {
        let p = C::from_ints(1, 0, 0, -2);
        let err = orthogonal_complement(&[p.clone(), p.scaled(&r(2, 1))], 2, &tol());
        assert_eq!(err, Err(GeometryError::RankDeficient { expected: 2, found: 1 }));
    }

    #[test]
    fn complement_float_matches_exact() {
        let gens = [
            Cycle::<f64>::from_coeffs(0.0, 0.0, -1.0, 0.0),
            zero_cycle(&Vec2::new(0.0, 1.0)),
            Cycle::<f64>::from_coeffs(1.0, 0.0, 0.0, -2.0),
        ];
        let basis = orthogonal_complement(&gens, 3, &tol()).unwrap();
        let n = normalize(&basis[0], &tol()).unwrap();
        assert_eq!(n, Cycle::from_coeffs(0.0, 1.0, 0.0, 0.0));
    }

    #[test]
    fn proportionality() {
        let p = C::from_ints(1, -7, 0, -9);
        assert!(p.is_proportional(&p.scaled(&r(-3, 7)), &tol()));
        assert!(!p.is_proportional(&C::from_ints(1, 7, 0, -9), &tol()));
        assert!(!p.is_proportional(&C::zero(), &tol()));
    }
}
