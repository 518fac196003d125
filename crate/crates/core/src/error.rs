use thiserror::Error;

/// Failure to read a polynomial expression.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { pos: usize, name: String },
    #[error("coefficient {0} has no image in the prime field")]
    Coefficient(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("operands belong to different polynomial rings")]
    RingMismatch,
    #[error("negative exponent {0}")]
    NegativeExponent(i64),
    #[error("operand kind does not fit operation `{0}`")]
    OperandKind(&'static str),
    #[error("degree of the zero polynomial is undefined")]
    ZeroDegree,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid variable set: {0}")]
    InvalidVariables(String),
    #[error("variable `{0}` is not assigned")]
    Unassigned(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("division is not exact")]
    InexactDivision,
    #[error("resultant of the zero polynomial")]
    ZeroResultantInput,
    #[error("both arguments are constant in `{0}`")]
    ConstantInVariable(String),
    #[error("{0} is not a prime in (2^20, 2^63)")]
    BadModulus(u64),
    #[error("{0} has no image in the prime field")]
    NonInvertible(String),
    #[error("point has {found} coordinates, expected {expected}")]
    PointDimension { expected: usize, found: usize },
    #[error("all coordinates of a projective point are zero")]
    ZeroPoint,
    #[error("order {order} outside {min}..={max}")]
    OrderOutOfRange { order: u32, min: u32, max: u32 },
    #[error("point is not on the hypersurface")]
    NotOnHypersurface,
    #[error("point is singular on the hypersurface")]
    SingularPoint,
    #[error("the two points coincide")]
    CoincidentPoints,
    #[error("degree {found} is below the minimum {min}")]
    DegreeTooSmall { found: i64, min: i64 },
    #[error("expected {expected} variables, found {found}")]
    VariableCount { expected: usize, found: usize },
    #[error("generator {0} pulls back to zero")]
    DegeneratePullback(usize),
    #[error("inconsistent data: {0}")]
    Inconsistent(String),
    #[error("insufficient data: {0}")]
    Insufficient(String),
}

pub type Result<T> = std::result::Result<T, Error>;
