use core::fmt;

/// Errors produced by the polynomial arithmetic and the dynamics engines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The requested map or quantity is undefined on the zero polynomial.
    ZeroInput,
    /// An operation requiring an even polynomial (divisible by x) got an odd one.
    OddInput,
    /// An operation requiring an odd polynomial got an even one.
    EvenInput,
    /// `(x+1)^n` has fewer terms than were requested.
    InsufficientTerms { available: u128, requested: u64 },
    /// The iteration did not reach its target within the step budget.
    BudgetExhausted { budget: u64 },
    /// The identity being checked is not defined for parameters this small.
    DomainTooSmall,
    /// A sweep was asked to exceed the configured degree safety cap.
    CapExceeded { requested: u32, cap: u32 },
    /// Family parameters must satisfy (a, b) != (0, 0) and n >= 1.
    InvalidFamily,
    /// The modulus is not a prime >= 2.
    InvalidModulus { p: u64 },
    /// A polynomial could not be parsed.
    Parse(ParseError),
}

/// Errors from the textual polynomial grammars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    /// Malformed input; `offset` is the byte position of the offending character.
    Syntax {
        offset: usize,
        message: &'static str,
    },
    /// The same exponent appeared twice in a term list.
    DuplicateTerm { exponent: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroInput => write!(f, "undefined on the zero polynomial"),
            Error::OddInput => write!(f, "input polynomial is odd (not divisible by x)"),
            Error::EvenInput => write!(f, "input polynomial is even (divisible by x)"),
            Error::InsufficientTerms {
                available,
                requested,
            } => write!(
                f,
                "requested {requested} leading terms but the expansion has only {available}"
            ),
            Error::BudgetExhausted { budget } => {
                write!(f, "iteration budget of {budget} steps exhausted")
            }
            Error::DomainTooSmall => {
                write!(f, "parameters are below the domain of the identity")
            }
            Error::CapExceeded { requested, cap } => {
                write!(f, "degree {requested} exceeds the safety cap {cap}")
            }
            Error::InvalidFamily => {
                write!(f, "family parameters require (a, b) != (0, 0) and n >= 1")
            }
            Error::InvalidModulus { p } => write!(f, "{p} is not a prime modulus >= 2"),
            Error::Parse(e) => e.fmt(f),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { offset, message } => {
                write!(f, "syntax error at byte {offset}: {message}")
            }
            ParseError::DuplicateTerm { exponent } => {
                write!(f, "duplicate term with exponent {exponent}")
            }
        }
    }
}

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Self {
        Error::Parse(e)
    }
}

impl core::error::Error for Error {}
impl core::error::Error for ParseError {}
