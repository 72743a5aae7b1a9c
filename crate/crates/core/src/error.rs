//! Error type shared by the whole crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ring mismatch: expected variables {expected:?}, got {got:?}")]
    RingMismatch {
        expected: Vec<String>,
        got: Vec<String>,
    },

    #[error("weight vector has {got} entries but the ring has {expected} variables")]
    WeightArityMismatch { expected: usize, got: usize },

    #[error("saturation by the zero polynomial")]
    ZeroSaturant,

    #[error("{0} requires a homogeneous ideal")]
    NonHomogeneous(&'static str),

    #[error("{0} is only available in projective mode")]
    AffineModeUnsupported(&'static str),

    #[error("{0} is only available on a family with a parameter variable")]
    MissingParameter(&'static str),

    #[error("computation budget exceeded during {stage}: {detail}")]
    BudgetExceeded { stage: &'static str, detail: String },

    #[error("the chosen component is not contained in the central fibre: {0}")]
    BNotComponent(String),

    #[error("the component split is not exact: I_B ∩ I_R differs from I_W ({0})")]
    SplitNotExact(String),

    #[error("vanishing order undefined: the polynomial lies in the family ideal")]
    OrderUndefined,

    #[error("invalid section: {0}")]
    SectionInvalid(String),

    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),

    #[error("polynomial fit did not stabilize within budget (table length {0})")]
    FitUnstable(usize),

    #[error("denominator vanishes in the expansion identity: {0}")]
    ZeroDenominator(&'static str),

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    /// Exit-code category used by the CLI and the FFI layer.
    pub fn category(&self) -> ErrorCategory {
        use Error::*;
        match self {
            Parse { .. } | Invalid(_) | Io(_) => ErrorCategory::Input,
            BudgetExceeded { .. } | FitUnstable(_) => ErrorCategory::Budget,
            BNotComponent(_) | SplitNotExact(_) | HypothesisFailed(_) | SectionInvalid(_)
            | OrderUndefined | ZeroDenominator(_) => ErrorCategory::Hypothesis,
            _ => ErrorCategory::Usage,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    /// Bad input files or flags.
    Input,
    /// Resource limits hit before a mathematical answer was reached.
    Budget,
    /// A mathematical precondition of the requested operation failed.
    Hypothesis,
    /// API misuse (ring mismatches and similar).
    Usage,
}

impl ErrorCategory {
    pub fn exit_code(self) -> i32 {
        match self {
            ErrorCategory::Input => 2,
            ErrorCategory::Budget => 3,
            ErrorCategory::Hypothesis => 4,
            ErrorCategory::Usage => 5,
        }
    }
}
