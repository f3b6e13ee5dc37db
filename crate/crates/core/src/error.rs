use std::fmt;

/// Errors raised by construction and formula preconditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `from_generators` was handed an empty set.
    EmptyGenerators,
    /// The generators have a common divisor greater than one, so the
    /// complement would be infinite.
    NonCoprimeGenerators { gcd: u64 },
    /// Frobenius number requested for the full monoid, which has no gaps.
    FullMonoid,
    /// A standard basis was requested with respect to an element that is not
    /// the multiplicity of the semigroup.
    NotMultiplicity { given: u64, multiplicity: u64 },
    /// A formula requires gcd(a, r) = 1.
    NonCoprime { a: u64, r: u64 },
    /// An index argument fell outside its admissible interval.
    OutOfRange { value: u64, max: u64 },
    /// The two-generated quotient closed form needs t to divide a.
    NotADivisor { t: u64, a: u64 },
    /// The floor-sum gap-count identity only applies when the normalized
    /// remainder is strictly below a.
    FormulaCaseOnly,
    /// The pole-order search terminated without matching the expected gap
    /// count, even after widening the exponent bounds.
    CertificationFailed { expected_genus: u64, found_genus: u64 },
    /// An input pair fell outside the domain of the requested operation.
    DomainError(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyGenerators => write!(f, "generator set is empty"),
            Error::NonCoprimeGenerators { gcd } => {
                write!(f, "generators not coprime (gcd = {gcd})")
            }
            Error::FullMonoid => write!(f, "the full monoid has no Frobenius number"),
            Error::NotMultiplicity { given, multiplicity } => write!(
                f,
                "{given} is not the multiplicity of the semigroup (smallest positive element is {multiplicity})"
            ),
            Error::NonCoprime { a, r } => write!(f, "expected gcd({a}, {r}) = 1"),
            Error::OutOfRange { value, max } => {
                write!(f, "argument {value} out of range [0, {max}]")
            }
            Error::NotADivisor { t, a } => write!(f, "{t} does not divide {a}"),
            Error::FormulaCaseOnly => write!(
                f,
                "gap-count identity applies only when the normalized remainder is below a"
            ),
            Error::CertificationFailed { expected_genus, found_genus } => write!(
                f,
                "pole-order search not certified: expected genus {expected_genus}, search yields {found_genus}"
            ),
            Error::DomainError(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
