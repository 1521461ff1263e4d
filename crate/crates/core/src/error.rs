use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("undefined empirical loss: the sample is empty")]
    EmptySample,

    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("invalid hypothesis: {0}")]
    InvalidHypothesis(String),

    #[error("enumeration budget exceeded: {what} needs {needed} items, budget is {budget}")]
    BudgetExceeded {
        what: &'static str,
        needed: String,
        budget: u64,
    },

    #[error("undefined for empty class")]
    EmptyClass,

    #[error("witness arity mismatch: expected tuples of length {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("malformed program: {0}")]
    MalformedProgram(String),

    #[error("machine did not halt within {budget} steps")]
    NotHalted { budget: u64 },

    #[error("f({0}) not yet enumerated within the step budget")]
    NotYetEnumerated(u64),

    #[error("function is undefined at {0}; the domain starts at 1")]
    OutsideDomain(u64),

    #[error("range membership of f is only semi-decidable; refusing to compute {0}")]
    Uncomputable(&'static str),

    #[error("block index must be at least 1")]
    ZeroBlock,

    #[error("index {index} out of range 1..={bound}")]
    OutOfRange { index: u64, bound: u64 },

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("class `{0}` does not support {1}")]
    Unsupported(String, &'static str),

    #[error("learner output is not a member of the class: {0}")]
    ImproperOutput(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("parse error: {0}")]
    Parse(String),
}
