use thiserror::Error;

use crate::exact::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("mixed radicands: sqrt({0}) and sqrt({1}) cannot share an expression")]
    MixedRadicands(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("radicand {0} is not a squarefree integer >= 2")]
    BadRadicand(u64),
    #[error("value {0} does not fit in a 64-bit integer")]
    Overflow(String),
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("invalid range [{lo}, {hi})")]
    InvalidRange { lo: i64, hi: i64 },
    #[error("modulus must be positive, got {0}")]
    NonPositiveModulus(String),
    #[error("modulus must exceed 1, got {0}")]
    ModulusTooSmall(String),
    #[error("value {value} is hit by several indices, the smallest being {smallest}")]
    AmbiguousIndex { value: i64, smallest: i64 },
    #[error("expected a rational value, got {0}")]
    NotRational(String),
    #[error("expected an irrational value, got {0}")]
    NotIrrational(String),
    #[error("sequences have different moduli")]
    AlphasDiffer,

    #[error("moduli {0} and {1} are not complementary")]
    NotComplementary(String, String),
    #[error("{r} and {s} are not coprime")]
    NotCoprime { r: i64, s: i64 },
    #[error("moduli require r > s >= 1, got r = {r}, s = {s}")]
    BadModuli { r: i64, s: i64 },
    #[error("the partition criterion does not hold for these offsets")]
    CriterionNotSatisfied,
    #[error("relocation parameter must lie strictly between 0 and 1, got {0}")]
    NuOutOfRange(String),
    #[error("expected a positive integer, got {0}")]
    NonPositive(i64),
    #[error("no disjoint offsets exist for these moduli")]
    NoWitness,
    #[error("constructed offsets intersect at {0}")]
    VerificationFailed(i64),
    #[error("athlete list must not be empty")]
    NoAthletes,
}
