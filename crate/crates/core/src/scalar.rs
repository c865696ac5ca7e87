//! Scalar abstraction shared by the exact and approximate kernels.
//!
//! Every geometric routine in this crate is generic over [`Scalar`]. The
//! exact realization is [`BigRational`]; the approximate ones are `f64` and
//! `f32`. Zero tests go through [`Scalar::is_negligible`], which is an exact
//! comparison for rationals and a relative-tolerance comparison for floats.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive, Zero};

/// Tolerances used by the approximate kernel. Ignored by exact scalars.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    /// Relative tolerance for incidence, degree and rank decisions.
    pub eps: f64,
    /// Band on the normalized discriminant inside which a configuration is
    /// declared degenerate.
    pub eps_deg: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            eps: 1e-9,
            eps_deg: 1e-9,
        }
    }
}

impl Tolerance {
    pub fn new(eps: f64, eps_deg: f64) -> Self {
        Tolerance { eps, eps_deg }
    }
}

pub trait Scalar:
    Clone + Debug + Display + PartialOrd + Num + Signed + ToPrimitive + Send + Sync + 'static
{
    /// True when arithmetic is exact and sign tests are certified.
    const EXACT: bool;

    /// Whether `self` is zero relative to `scale` (a nonnegative magnitude of
    /// the operands the value was computed from).
    fn is_negligible(&self, scale: &Self, eps: f64) -> bool;

    fn from_rational(r: &BigRational) -> Self;

    fn from_int(v: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(v)))
    }

    fn ratio(num: i64, den: i64) -> Self {
        Self::from_rational(&BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Sign in {-1, 0, 1} after the tolerance test.
    fn sign_with(&self, scale: &Self, eps: f64) -> i8 {
        if self.is_negligible(scale, eps) {
            0
        } else if self.is_positive() {
            1
        } else {
            -1
        }
    }

    /// Larger of two magnitudes.
    fn max_of(a: Self, b: Self) -> Self {
        if a >= b {
            a
        } else {
            b
        }
    }

    /// Square root, exact when the argument is a perfect rational square.
    /// Rationals that are not perfect squares yield `None`.
    fn sqrt_exact(&self) -> Option<Self>;
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn is_negligible(&self, _scale: &Self, _eps: f64) -> bool {
        self.is_zero()
    }

    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }

    fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        if &(&n * &n) == self.numer() && &(&d * &d) == self.denom() {
            Some(BigRational::new(n, d))
        } else {
            None
        }
    }
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            const EXACT: bool = false;

            fn is_negligible(&self, scale: &Self, eps: f64) -> bool {
                let s = scale.abs();
                // A value computed from all-zero operands is zero.
                if s == 0.0 {
                    return *self == 0.0;
                }
                (self.abs() / s) as f64 <= eps
            }

            fn from_rational(r: &BigRational) -> Self {
                r.to_f64().unwrap_or(f64::NAN) as $t
            }

            fn sqrt_exact(&self) -> Option<Self> {
                if *self < 0.0 {
                    None
                } else {
                    Some(self.sqrt())
                }
            }
        }
    };
}

float_scalar!(f64);
float_scalar!(f32);

/// Approximate `sqrt` usable for any scalar; goes through `f64`.
pub fn approx_sqrt<S: Scalar>(value: &S) -> f64 {
    value.to_f64_lossy().max(0.0).sqrt()
}

/// Build a rational from an `f64` exactly (binary expansion).
pub fn rational_from_f64(v: f64) -> Option<BigRational> {
    BigRational::from_f64(v)
}
