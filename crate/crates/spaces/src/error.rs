use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("variable contexts do not match: {0}")]
    ContextMismatch(String),
    #[error("missing assignment for variable `{0}`")]
    MissingVariable(String),
    #[error("coefficient denominator vanishes at n = {0}")]
    Pole(String),
    #[error("zero input where a nonzero value is required: {0}")]
    ZeroInput(String),
    #[error("polynomial is not univariate: {0}")]
    NotUnivariate(String),
    #[error("interval endpoint {0} is a root of the polynomial")]
    EndpointRoot(String),
    #[error("resource budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("ideal is not zero-dimensional: {0}")]
    NotZeroDimensional(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid case or parameters: {0}")]
    BadCase(String),
    #[error("degenerate linear solve: {0}")]
    DegenerateSolve(String),
    #[error("back-substitution failed: {0}")]
    BackSubstitution(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
