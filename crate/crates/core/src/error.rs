use thiserror::Error;

/// Errors raised by the arrangement, matrix and theorem routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line form (0,0) does not define a line")]
    ZeroForm,
    #[error("lines {first} and {second} define the same projective line")]
    DuplicateLine { first: usize, second: usize },
    #[error("multiplicity {value} at position {index} is not positive")]
    NonPositiveMult { index: usize, value: i64 },
    #[error("{lines} lines but {mults} multiplicities")]
    LengthMismatch { lines: usize, mults: usize },
    #[error("an arrangement needs at least one line")]
    EmptyArrangement,
    #[error("transform is singular")]
    SingularTransform,
    #[error("operation needs at least 2 lines, got {0}")]
    TooFewLines(usize),
    #[error("line is not part of the arrangement")]
    LineNotInArrangement,
    #[error("multiplicity would drop below 1")]
    MultiplicityUnderflow,

    #[error("bad range ({n2}:{n1})")]
    BadRange { n2: i64, n1: i64 },
    #[error("tuple {0} is not strictly descending")]
    NotDescending(String),

    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("shape mismatch: {0}x{1} vs {2}x{3}")]
    ShapeMismatch(usize, usize, usize, usize),
    #[error("index {index} out of range for dimension {bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("selection of {rows} rows and {cols} columns is not square")]
    NotSquareSelection { rows: usize, cols: usize },

    #[error("first two lines must be ker(x) and ker(y)")]
    NotNormalized,
    #[error("|m| = {0} is odd")]
    OddSize(usize),
    #[error("multiplicity is unbalanced")]
    Unbalanced,
    #[error("multiplicity is balanced")]
    NotUnbalanced,
    #[error("|m| = {size} exceeds 2|A| - 2 = {bound}")]
    NotSmall { size: usize, bound: usize },

    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("prediction failed: {0}")]
    PredictionFailed(String),
    #[error("determinant polynomial is identically zero")]
    IdenticallyZero,
    #[error("degenerate template: {0}")]
    DegenerateTemplate(String),
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("interpolated determinant has non-integral coefficients")]
    NonIntegral,

    #[error("valuation of zero is infinite")]
    ZeroInput,
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid sweep configuration: {0}")]
    InvalidConfig(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Parse(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
