use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("the zero cycle is not a valid input")]
    ZeroCycleInput,
    #[error("cycle is not a 2-cycle")]
    NotATwoCycle,
    #[error("scale factor must be nonzero")]
    ZeroScalar,
    #[error("generators span dimension {found}, expected {expected}")]
    RankDeficient { expected: usize, found: usize },
    #[error("point is not in the upper half-plane")]
    NotInUpperHalfPlane,
    #[error("points coincide")]
    CoincidentPoints,
    #[error("cycle does not define a hyperbolic line")]
    InvalidLineCycle,
    #[error("triangle vertices are collinear")]
    CollinearTriangle,
    #[error("lines coincide")]
    CoincidentLines,
    #[error("altitudes are not concurrent (discriminant not positive)")]
    NotConcurrent,
    #[error("altitude pencil is not degenerate (discriminant nonzero)")]
    NotDegenerate,
    #[error("altitudes are not divergently parallel (discriminant not negative)")]
    NotDivergent,
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("degenerate oracle input: {0}")]
    DegenerateInput(&'static str),
    #[error("geodesics coincide")]
    CoincidentGeodesics,
    #[error("oracle inconsistency: {0}")]
    OracleInconsistent(String),
}
