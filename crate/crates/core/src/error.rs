use alloc::string::String;
use alloc::vec::Vec;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("zero vector has no primitive form")]
    ZeroVector,
    #[error("matrix must be nonempty and nonzero")]
    DegenerateMatrix,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("cone not full-dimensional")]
    NotFullDimensional,
    #[error("cone not strongly convex")]
    NotPointed,
    #[error("ZA ≠ Z^d")]
    NotSaturated,
    #[error("semigroup is not normal: {witness:?} lies in the cone but not in NA")]
    NotNormal { witness: Vec<i64> },
    #[error("exponent {exponent:?} does not lie in the semigroup")]
    NotInSemigroup { exponent: Vec<i64> },
    #[error("ideal needs at least one generator")]
    EmptyIdeal,
    #[error("Newton polyhedron needs at least one point")]
    EmptyPointSet,
    #[error("recession cone is not full-dimensional")]
    DegenerateRecessionCone,
    #[error("coordinates of c must sum to 1")]
    CoordinateSum,
    #[error("alpha must be positive")]
    NonPositiveAlpha,
    #[error("boundary divisor not effective")]
    BoundaryNotEffective,
    #[error("upper bound {bound} lies below the log-canonical threshold {lct}")]
    BelowThreshold { bound: String, lct: String },
    #[error("the unit ideal has no log-canonical threshold")]
    UnitIdeal,
    #[error("no nonzero univariate polynomial found up to box bound {cap}")]
    BoxCapExhausted { cap: u32 },
    #[error("integer overflow converting {0}")]
    Overflow(&'static str),
    #[error("invariant violated: {0}")]
    Invariant(String),
}
