use thiserror::Error;

/// Failures reported by the decision procedures.
///
/// Variants split into two families: malformed inputs (see
/// [`Error::is_input_error`]) and violated mathematical hypotheses of an
/// otherwise well-formed request.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("scale must satisfy |N| >= 2, got {0}")]
    InvalidScale(i64),
    #[error("digit set is empty")]
    EmptyDigits,
    #[error("digit {0} is repeated")]
    DuplicateDigit(i64),
    #[error("candidate set is empty")]
    EmptyCandidate,
    #[error("candidate element {0} is repeated")]
    DuplicateCandidate(i64),
    #[error("truncation policy invalid: {0}")]
    InvalidPolicy(&'static str),
    #[error("cyclotomic index must be positive")]
    ZeroCyclotomicIndex,
    #[error("divisibility of the zero polynomial is not meaningful")]
    ZeroPolynomial,
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("power must be at least 1")]
    ZeroPower,

    #[error("|S| = {candidate} but |D| = {digits}; compatible pairs need equal cardinality")]
    CardinalityMismatch { digits: usize, candidate: usize },
    #[error("|N| = 2 leaves an empty reduction window; use the unit-interval case")]
    DegenerateWindow,
    #[error(
        "{first} and {second} coincide modulo {modulus}; a compatible pair needs distinct residues"
    )]
    RepeatedResidue {
        first: i64,
        second: i64,
        modulus: u64,
    },
    #[error("0 must belong to the digit set")]
    DigitsMissingZero,
    #[error("gcd of the digit set is {0}, expected 1")]
    DigitsNotPrimitive(u64),
    #[error("0 must belong to the candidate set")]
    CandidateMissingZero,
    #[error("(D/N, S) is not a compatible pair")]
    NotCompatible,
    #[error("enumeration of {requested} points exceeds the budget of {budget}")]
    BudgetExceeded { requested: u128, budget: usize },
    #[error("integer overflow while expanding digit sums")]
    Overflow,
    #[error("|D| = {0} has more than two distinct prime factors")]
    TooManyPrimes(usize),
    #[error("digit set is not a complementing set modulo {0}")]
    NotComplementing(u64),
    #[error("no divisor of {0} with the prime factors of |D| admits a complement")]
    NoModulus(u64),
    #[error("found {found} powers of {prime} dividing the digit polynomial, expected {expected}")]
    PrimePowerCount {
        prime: u64,
        found: usize,
        expected: usize,
    },
    #[error("modulus {modulus} does not have exactly the prime factors of |D| = {cardinality}")]
    ModulusPrimes { modulus: u64, cardinality: usize },
    #[error("internal consistency check failed: {0}")]
    Internal(&'static str),
}

impl Error {
    /// True for errors caused by a malformed request rather than an unmet
    /// hypothesis.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidScale(_)
                | Error::EmptyDigits
                | Error::DuplicateDigit(_)
                | Error::EmptyCandidate
                | Error::DuplicateCandidate(_)
                | Error::InvalidPolicy(_)
                | Error::ZeroCyclotomicIndex
                | Error::ZeroPolynomial
                | Error::ZeroModulus
                | Error::ZeroPower
        )
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
