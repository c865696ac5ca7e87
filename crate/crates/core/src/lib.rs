//! Hyperbolic triangle altitudes in the upper half-plane, computed with the
//! cycle pairing on quadratic forms `a X·X + b·X + c`.
//!
//! The kernel is generic over [`Scalar`]: use [`Rational`] for certified
//! classification and `f64` for plotting and quick estimates.

pub mod altitudes;
pub mod cli;
pub mod cycle;
pub mod error;
pub mod lines;
pub mod oracle;
pub mod scalar;

pub use altitudes::{
    analyze_triangle, classify, classify_pair, AltitudePencil, Configuration, ConfigurationKind,
    HTriangle, IdealPoint, Pencil, SideCycles,
};
pub use cycle::{norm, pairing, zero_cycle, Cycle, CycleDegree, Vec2};
pub use error::{GeometryError, OracleError};
pub use lines::{axis, HLine, HPoint, SurdPoint};
pub use scalar::{Scalar, Tolerance};

/// Exact scalar: arbitrary-precision rationals.
pub type Rational = num_rational::BigRational;

pub type ExactCycle = Cycle<Rational>;
pub type ExactTriangle = HTriangle<Rational>;
pub type ExactConfiguration = Configuration<Rational>;

pub type FloatCycle = Cycle<f64>;
pub type FloatTriangle = HTriangle<f64>;
pub type FloatConfiguration = Configuration<f64>;
