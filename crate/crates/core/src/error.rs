use thiserror::Error;

/// Errors shared by every module in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("curve has empty support")]
    EmptyCurve,
    #[error("curve has a constant term, so it does not pass through the origin")]
    ConstantTerm,
    #[error("truncation removed every term of the curve")]
    EmptyTruncation,
    #[error("ideal has no generators")]
    EmptyIdeal,
    #[error("ideal contains a unit")]
    UnitIdeal,
    #[error("ideal is not primary to the maximal ideal")]
    NotPrimary,
    #[error("pair is not klt")]
    NotKlt,
    #[error("pair is not klt on the monomial rays")]
    NotKltOnMonomialRays,
    #[error("operation requires every boundary curve to be a single monomial")]
    NonMonomialBoundary,
    #[error("log discrepancy is not positive")]
    NonPositiveDiscrepancy,
    #[error("a different coefficient is at least one, so the blow-up is not plt")]
    NotPlt,
    #[error("divisor degree is not in the log Fano range")]
    NotLogFano,
    #[error("divisor is not K-semistable")]
    NotKss,
    #[error("boundary coefficient must lie strictly between zero and one")]
    CoefficientRange,
    #[error("boundary curves share a common factor")]
    NotCoprime,
    #[error("curve is not invariant under the group action")]
    NotInvariant,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal consistency check failed: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
