use thiserror::Error;

/// Errors raised by the exact algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("valuation of zero undefined")]
    ValuationOfZero,
    #[error("expected a positive integer, got {0}")]
    NotPositive(String),
    #[error("invalid rational literal {0:?}")]
    ParseRational(String),
    #[error("division by zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("dilation factor must be nonzero")]
    ZeroDilation,
    #[error("duplicate abscissa {0} in interpolation points")]
    DuplicateAbscissa(String),
    #[error("step d must be a positive integer")]
    ZeroStep,
    #[error("no Banna representation exists: polynomial is not in E_{0}")]
    NoBannaRepresentation(u32),
    #[error("Banna representation needs d >= 2, got d = {0}")]
    BannaStepTooSmall(u32),
    #[error("polynomial is not in E_{0}")]
    NotMember(u32),
    #[error("not a polynomial sequence: numerator degree {degree} >= pole order {pole_order}")]
    NotPolynomialSequence { degree: i64, pole_order: u32 },
    #[error("D must not vanish at 1")]
    DVanishesAtOne,
    #[error("D must be a nonzero polynomial")]
    ZeroD,
    #[error("direct-sum violation: {0}")]
    DirectSumViolation(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
