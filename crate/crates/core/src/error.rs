use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate abscissa {0}")]
    DuplicateAbscissa(String),
    #[error("need at least {needed} samples, got {got}")]
    NotEnoughSamples { needed: usize, got: usize },
    #[error(
        "sample at {0} is inconsistent with the interpolant: degree bound or reduction failure"
    )]
    InconsistentSample(String),
    #[error("series constant term must be {0}")]
    SeriesConstant(&'static str),
    #[error("negative length {0}")]
    NegativeLength(i64),
    #[error("hyperplane index {index} out of range ({len} hyperplanes)")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("non-central subset")]
    NonCentral,
    #[error("arrangement is not central")]
    NotCentral,
    #[error("zero normal with nonzero offset is not a hyperplane")]
    InvalidHyperplane,
    #[error("expected vectors of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("cannot contract a loop")]
    ContractLoop,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("bad prime {prime}: subset {witness:?} changes rank or centrality")]
    BadPrime { prime: u64, witness: Vec<usize> },
    #[error("prime {prime} is not above the certified floor {floor}")]
    PrimeBelowFloor { prime: u64, floor: String },
    #[error("enumeration needs {required} points, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
    #[error("{0} hyperplanes is too many for subset enumeration")]
    TooManyHyperplanes(usize),
    #[error("operation requires an arrangement over the rationals")]
    NeedsRationalField,
    #[error("result is not a polynomial: {0}")]
    NotPolynomial(String),
    #[error("no closed form for {0}; use the generating oracle or the engines")]
    NoClosedForm(String),
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("truncation order {order} is below requested index {requested}")]
    BeyondTruncation { order: usize, requested: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("identity failed: {0}")]
    IdentityFailure(String),
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// Stable machine-readable code used by the command line front end.
    pub fn code(&self) -> &'static str {
        match self {
            Error::UnknownVariable(_) => "unknown-variable",
            Error::DuplicateAbscissa(_) => "duplicate-abscissa",
            Error::NotEnoughSamples { .. } => "not-enough-samples",
            Error::InconsistentSample(_) => "inconsistent-sample",
            Error::SeriesConstant(_) => "series-constant",
            Error::NegativeLength(_) => "negative-length",
            Error::IndexOutOfRange { .. } => "index-out-of-range",
            Error::NonCentral => "non-central",
            Error::NotCentral => "not-central",
            Error::InvalidHyperplane => "invalid-hyperplane",
            Error::DimensionMismatch { .. } => "dimension-mismatch",
            Error::ContractLoop => "contract-loop",
            Error::NotPrime(_) => "not-prime",
            Error::BadPrime { .. } => "bad-prime",
            Error::PrimeBelowFloor { .. } => "prime-below-floor",
            Error::BudgetExceeded { .. } => "budget-exceeded",
            Error::TooManyHyperplanes(_) => "too-many-hyperplanes",
            Error::NeedsRationalField => "needs-rational-field",
            Error::NotPolynomial(_) => "not-polynomial",
            Error::NoClosedForm(_) => "no-closed-form",
            Error::InvalidFamily(_) => "invalid-family",
            Error::BeyondTruncation { .. } => "beyond-truncation",
            Error::Parse(_) => "parse",
            Error::IdentityFailure(_) => "identity-failure",
            Error::Io(_) => "io",
        }
    }

    /// Input errors map to exit status 1, computation errors to 2.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::Io(_)
                | Error::InvalidHyperplane
                | Error::DimensionMismatch { .. }
                | Error::InvalidFamily(_)
                | Error::IndexOutOfRange { .. }
                | Error::UnknownVariable(_)
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
