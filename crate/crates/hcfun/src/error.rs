use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid interval: lo = {lo} exceeds hi = {hi}")]
    InvalidInterval { lo: String, hi: String },

    #[error("not a number: {0}")]
    NotANumber(String),

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("unknown cell: {0}")]
    UnknownCell(String),

    #[error("functions are defined on different complexes")]
    ComplexMismatch,

    #[error("point {0:?} is outside the declared domain")]
    OutsideDomain(Vec<f64>),

    #[error("evaluator error at {point:?}: {reason}")]
    Evaluator { point: Vec<f64>, reason: String },

    #[error("oracle refused: complex has {0} cells, limit is {1}")]
    OracleTooLarge(usize, usize),

    #[error("input is not s-continuous")]
    NotSContinuous,

    #[error("input is not H-continuous")]
    NotHContinuous,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
