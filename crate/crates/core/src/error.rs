use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial has a zero constant term")]
    ZeroConstantTerm,
    #[error("polynomial has an even constant term")]
    EvenConstantTerm,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("polynomial has non-integer coefficients")]
    NotIntegral,
    #[error("interval is empty: lo must be strictly less than hi")]
    EmptyInterval,
    #[error("interval contains {found} real roots, expected exactly 1")]
    RootCount { found: usize },
    #[error("no real root greater than 1")]
    NoRootAboveOne,
    #[error("operands belong to different number fields")]
    FieldMismatch,
    #[error("expected {expected} coordinates, got {found}")]
    CoordinateCount { expected: usize, found: usize },
    #[error("inversion of zero")]
    DivisionByZero,
    #[error("reducible modulus: found nontrivial factor {factor}")]
    ReducibleModulus { factor: String },
    #[error("sign determination did not converge within {0} bisections")]
    SignUndetermined(usize),
    #[error("length of interval {0} is not positive")]
    NonPositiveLength(usize),
    #[error("lengths do not sum to total")]
    LengthSum,
    #[error("perm not a bijection")]
    NotBijection,
    #[error("exchange needs at least one interval")]
    EmptyExchange,
    #[error("pieces do not tile the domain")]
    BadPartition,
    #[error("point outside the domain [0, L)")]
    OutOfDomain,
    #[error("exchanges have different domains")]
    DomainMismatch,
    #[error("operation requires circle semantics")]
    NotCircle,
    #[error("scale factor must be positive")]
    NonPositiveScale,
    #[error("pairing is not an involution")]
    NotInvolution,
    #[error("paired blocks {0} and {1} have different lengths")]
    PairLengthMismatch(usize, usize),
    #[error("first return exceeded the cap of {0} point-iterations")]
    IterationCap(usize),
    #[error("search space too large: {0}")]
    SearchTooLarge(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    /// True for failures caused by an iteration budget rather than bad input.
    pub fn is_cap_exceeded(&self) -> bool {
        matches!(self, Error::IterationCap(_) | Error::SignUndetermined(_))
    }
}
