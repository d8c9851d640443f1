use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a supported prime modulus")]
    NotPrime(u64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("ambient mismatch ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error(
        "relation {relation} has a nonzero coefficient on generator {generator} of larger degree"
    )]
    NotHomogeneous { relation: usize, generator: usize },
    #[error("negative degree: {0}")]
    NegativeDegree(String),
    #[error("degree {found:?} has length {}, expected {expected}", found.len())]
    DegreeLength { expected: usize, found: Vec<i64> },
    #[error("degrees {0:?} and {1:?} are not comparable in the required order")]
    NotComparable(Vec<i64>, Vec<i64>),
    #[error("expected {expected} parameters for {name}, got {found}")]
    WrongParameterCount {
        name: String,
        expected: usize,
        found: usize,
    },
    #[error("axis {axis} out of range for m = {m}")]
    AxisOutOfRange { axis: usize, m: usize },
    #[error("negative multiplicity {value} at {location}")]
    NegativeMultiplicity { location: String, value: i64 },
    #[error("map is not surjective after localization on axis {0}")]
    NotEpimorphism(usize),
    #[error("map is not well defined: {0}")]
    MapNotWellDefined(String),
    #[error("invalid simplicial complex: {0}")]
    InvalidComplex(String),
    #[error("skeleton dimension {i} out of range for m = {m}")]
    SkeletonOutOfRange { m: usize, i: i64 },
    #[error("module is not in the truncation range for n = {0}")]
    NotInLeqN(i64),
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error("empty parameter range: {0}")]
    EmptyParameterRange(String),
    #[error("invalid quiver representation: {0}")]
    QuiverShape(String),
    #[error("operation needs m = {expected}, got m = {found}")]
    UnsupportedM { expected: usize, found: usize },
    #[error("objects are defined over different fields")]
    FieldMismatch,
}

pub type Result<T> = std::result::Result<T, Error>;
