use thiserror::Error;

/// Errors produced by the exact engine.
///
/// Every error is a contract violation or a bounded-search failure; none of
/// them is recoverable by retrying with the same inputs, except
/// [`Error::NotFoundWithinBound`] which signals the bound, not nonexistence.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("quadratic form is degenerate")]
    Degenerate,
    #[error("restriction of the form to the subspace is degenerate")]
    DegenerateRestriction,
    #[error("subspace is not contained in the claimed larger subspace")]
    NotContained,
    #[error("no integer solution with coordinates bounded by {bound}")]
    NotFoundWithinBound { bound: i64 },
    #[error("vector is not isotropic")]
    IsotropyViolation,
    #[error("signature mismatch: expected {expected}, found {found}")]
    SignatureMismatch { expected: String, found: String },
    #[error("matrix does not lie in the orthogonal Lie algebra of the form")]
    NotOrthogonal,
    #[error("operator is not nilpotent")]
    NotNilpotent,
    #[error("nilpotency index is {found}, expected {expected}")]
    IndexMismatch { expected: u32, found: u32 },
    #[error("the pair (N, x) does not define a nilpotent orbit")]
    NotAnOrbit,
    #[error("construction exceeds the hard cap: {0}")]
    CapExceeded(String),
    #[error("weight and Hodge filtrations do not define a mixed Hodge structure: {0}")]
    PurityFailure(String),
    #[error("Cartan action is not semisimple with rational eigenvalues")]
    NonSemisimpleCartan,
    #[error("vector is not a root of the given root system")]
    UnknownRoot,
    #[error("rank {0} is too small for type D (need l >= 2)")]
    RankTooSmall(usize),
    #[error("dominant weight has a negative coefficient")]
    NegativeWeight,
    #[error("hyperbolic basis unit vector carries a square-root scale flag (s^2 = {0}); an exact unit vector is required here")]
    UnnormalizedUnit(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}
