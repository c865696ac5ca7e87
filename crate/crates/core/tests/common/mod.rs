//! Seeded generators shared by the integration and acceptance tests.
#![allow(dead_code)]

use hypalt::{Cycle, HLine, HPoint, Rational, Scalar, Tolerance, Vec2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn tol() -> Tolerance {
    Tolerance::default()
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::ratio(n, d)
}

/// `p/q` with `p ∈ [-r, r]`, `q ∈ [1, 8]`.
pub fn rat(rng: &mut ChaCha8Rng, r: i64) -> Rational {
    q(rng.random_range(-r..=r), rng.random_range(1..=8))
}

pub fn nonzero_rat(rng: &mut ChaCha8Rng, r: i64) -> Rational {
    loop {
        let v = rat(rng, r);
        if v != q(0, 1) {
            return v;
        }
    }
}

pub fn positive_rat(rng: &mut ChaCha8Rng, r: i64) -> Rational {
    q(rng.random_range(1..=r), rng.random_range(1..=8))
}

pub fn point(rng: &mut ChaCha8Rng) -> HPoint<Rational> {
    HPoint::from_xy(rat(rng, 20), positive_rat(rng, 20), &tol()).unwrap()
}

pub fn vec2(rng: &mut ChaCha8Rng) -> Vec2<Rational> {
    Vec2::new(rat(rng, 20), rat(rng, 20))
}

/// Which kind of cycle to draw.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Zero,
    One,
    Two,
    /// A 2-cycle of radius zero, `z(u)`.
    Point,
}

pub fn cycle_of(rng: &mut ChaCha8Rng, kind: Kind) -> Cycle<Rational> {
    let zero = q(0, 1);
    match kind {
        Kind::Zero => Cycle::from_coeffs(zero.clone(), zero.clone(), zero, nonzero_rat(rng, 20)),
        Kind::One => loop {
            let c = Cycle::from_coeffs(zero.clone(), rat(rng, 20), rat(rng, 20), rat(rng, 20));
            if !c.b.is_zero() {
                return c;
            }
        },
        Kind::Two => Cycle::new(nonzero_rat(rng, 20), vec2(rng), rat(rng, 20)),
        Kind::Point => hypalt::zero_cycle(&vec2(rng)).scaled(&nonzero_rat(rng, 20)),
    }
}

pub fn any_cycle(rng: &mut ChaCha8Rng) -> (Kind, Cycle<Rational>) {
    let kind = [Kind::Zero, Kind::One, Kind::Two, Kind::Two, Kind::Point][rng.random_range(0..5)];
    (kind, cycle_of(rng, kind))
}

pub fn to_f64(c: &Cycle<Rational>) -> Cycle<f64> {
    Cycle::from_coords(c.coords().map(|v| v.to_f64_lossy()))
}

/// A line through two boundary points drawn from a small grid, so that
/// shared endpoints (asymptotic pairs) occur often. `None` is `∞`.
pub fn line_from_feet(a: Option<Rational>, b: Option<Rational>) -> Option<HLine<Rational>> {
    match (a, b) {
        (None, None) => None,
        (Some(x), None) | (None, Some(x)) => Some(HLine::vertical(x)),
        (Some(x), Some(y)) if x == y => None,
        (Some(x), Some(y)) => {
            let center = (&x + &y) / q(2, 1);
            let r = (&x - &y) / q(2, 1);
            Some(HLine::semicircle(center, &r * &r, &tol()).unwrap())
        }
    }
}

pub fn boundary_foot(rng: &mut ChaCha8Rng) -> Option<Rational> {
    if rng.random_range(0..8) == 0 {
        None
    } else {
        Some(q(rng.random_range(-8..=8), 2))
    }
}

pub fn random_line(rng: &mut ChaCha8Rng) -> HLine<Rational> {
    loop {
        if let Some(l) = line_from_feet(boundary_foot(rng), boundary_foot(rng)) {
            return l;
        }
    }
}

/// A random line through two random interior points.
pub fn line_through_points(rng: &mut ChaCha8Rng) -> HLine<Rational> {
    loop {
        let (u, v) = (point(rng), point(rng));
        if let Ok(l) = hypalt::lines::line_through(&u, &v, &tol()) {
            return l;
        }
    }
}
