use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,

    #[error("division by zero")]
    DivisionByZero,

    #[error("denominator has zero constant term: no power-series expansion at the origin")]
    NoSeriesExpansion,

    #[error("invalid partition ({0}, {1}): need lambda1 >= lambda2 >= 0")]
    InvalidPartition(i64, i64),

    #[error("series is not symmetric: coeff({0},{1}) != coeff({1},{0})")]
    NotSymmetric(u32, u32),

    #[error("expected a polynomial in {expected}, found variable {found}")]
    UnexpectedVariable { expected: String, found: String },

    #[error("factor basis does not cover the denominator")]
    BasisNotCovering,

    #[error("factor basis is not pairwise coprime: factors {0} and {1} share a common factor")]
    BasisNotCoprime(usize, usize),

    #[error("residue hypothesis violated: {0}")]
    ResidueHypothesis(String),

    #[error("syntax error at offset {offset}: expected {}, found {found}", .expected.join(" or "))]
    Syntax {
        offset: usize,
        expected: Vec<String>,
        found: String,
    },

    #[error("unknown identifier '{name}' at offset {offset} (allowed: x, y, t, u, v)")]
    UnknownIdentifier { name: String, offset: usize },

    #[error("expression is not a polynomial: a non-unit denominator remains")]
    NotPolynomial,

    #[error("linear system is inconsistent: the input lacks the required rational shape or is not symmetric")]
    Inconsistent,

    #[error("linear system is underdetermined (nullity {nullity})")]
    Underdetermined { nullity: usize },

    #[error("x - y does not divide the numerator: not a valid multiplicity series")]
    InvalidMultiplicitySeries,

    #[error("fraction outside the allowed basis: {0}")]
    OutsideBasis(String),

    #[error("stored and solved multiplicity series disagree: {0}")]
    StoredSolvedMismatch(String),

    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}
