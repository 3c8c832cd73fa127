//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {q} exceeds the configured bound {bound}")]
    FieldTooLarge { q: u64, bound: u64 },
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("coefficient vector has length {got}, expected {expected}")]
    CoefficientLength { expected: usize, got: usize },
    #[error("index {index} out of range for {count} elements")]
    IndexOutOfRange { index: u64, count: u64 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("the zero triple is not a projective point")]
    ZeroTriple,
    #[error("point index {index} out of range (plane has {count} points)")]
    PointOutOfRange { index: usize, count: usize },
    #[error("line index {index} out of range (plane has {count} lines)")]
    LineOutOfRange { index: usize, count: usize },
    #[error("need two distinct points, got index {0} twice")]
    SamePoint(usize),
    #[error("need two distinct lines, got index {0} twice")]
    SameLine(usize),
    #[error("points {a} and {b} lie on {found} common lines, expected exactly 1")]
    JoinNotUnique { a: usize, b: usize, found: usize },
    #[error("lines {l} and {m} share {found} common points, expected exactly 1")]
    MeetNotUnique { l: usize, m: usize, found: usize },
    #[error("plane carries no coordinates (ingested from incidence data)")]
    NoCoordinates,
    #[error("no point with the requested coordinates")]
    NoSuchPoint,
    #[error("invalid plane data: {0}")]
    PlaneFormat(String),
    #[error("invalid labeling data: {0}")]
    LabelingFormat(String),
    #[error("cyclic factor orders must be at least 2, got {0}")]
    BadGroupOrder(u64),
    #[error("group must have at least one cyclic factor")]
    EmptyGroup,
    #[error("elements belong to different groups")]
    GroupMismatch,
    #[error("labeling has {got} values for a plane with {expected} points")]
    LabelingLength { expected: usize, got: usize },
    #[error("labelings live on different planes")]
    PlaneMismatch,
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("construction needs plane order at least {min}, got {got}")]
    OrderTooSmall { got: usize, min: usize },
    #[error("construction applies only to planes of order {expected}, got {got}")]
    WrongOrder { expected: usize, got: usize },
    #[error("frame construction failed: {0}")]
    FrameDegenerate(String),
    #[error("auxiliary line search found {found} working candidates, expected exactly 1")]
    AuxLineSearch { found: usize },
    #[error("{n} is not prime")]
    BoundNeedsPrime { n: u64 },
    #[error("linear system is singular")]
    Singular,
    #[error("enumeration space {m}^{points} exceeds the bound {bound}")]
    BoundExceeded { m: u64, points: usize, bound: u64 },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
