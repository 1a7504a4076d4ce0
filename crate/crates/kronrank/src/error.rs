use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Contract violations surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("exhaustive enumeration requires a finite field")]
    ExhaustiveOverInfiniteField,
    #[error("arrow count r must be at least 2 (got {0})")]
    ArrowCountTooSmall(usize),
    #[error("modules live over different fields")]
    FieldMismatch,
    #[error("modules have different arrow counts ({0} vs {1})")]
    ArrowCountMismatch(usize, usize),
    #[error("{context}: expected shape {expected:?}, got {got:?}")]
    ShapeViolation {
        context: &'static str,
        expected: (usize, usize),
        got: (usize, usize),
    },
    #[error("{context}: shapes {left:?} and {right:?} are incompatible")]
    ShapeMismatch {
        context: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("expected exactly {expected} arrow maps, got {got}")]
    WrongMapCount { expected: usize, got: usize },
    #[error("subspace dimension d must satisfy 1 <= d < r (got d = {d}, r = {r})")]
    SubspaceDimensionOutOfRange { d: usize, r: usize },
    #[error("the given vectors span a space of dimension {got}, expected {expected}")]
    NotLinearlyIndependent { expected: usize, got: usize },
    #[error("the zero module is not allowed here")]
    ZeroModule,
    #[error("the zero dimension vector is not a root")]
    ZeroDimVector,
    #[error("module has dimension vector {got:?}, expected (1, r - d) with 1 <= d < r")]
    NotATestModuleDimension { got: (usize, usize) },
    #[error("module is not generated at vertex 1, so it is decomposable or malformed")]
    NotGeneratedAtVertexOne,
    #[error("inflation requires s > r (got r = {r}, s = {s})")]
    InflationTargetTooSmall { r: usize, s: usize },
    #[error("restriction requires r < s (got r = {r}, s = {s})")]
    RestrictionTargetTooLarge { r: usize, s: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("functor into kE_r-modules needs positive characteristic")]
    CharacteristicZero,
    #[error("survey sample must be non-empty")]
    EmptySample,
    #[error("operator tuple has {got} vectors, expected {expected}")]
    WrongTupleLength { expected: usize, got: usize },
    #[error("vector has {got} coordinates, expected {expected}")]
    WrongVectorLength { expected: usize, got: usize },
    #[error("extension tower needs a brick with self-extensions: {0}")]
    TowerPrecondition(String),
    #[error("extension tower aborted at stage {stage}: {reason}")]
    TowerStage { stage: usize, reason: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Invalid(String),
}
