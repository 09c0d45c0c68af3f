//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    ZeroPolynomialDivision,
    #[error("the zero polynomial is not a valid input here")]
    ZeroPolynomial,
    #[error("expected a monic polynomial, got leading coefficient {0}")]
    NonMonic(String),
    #[error("expected a nonconstant polynomial")]
    ConstantPolynomial,
    #[error("expected an irreducible polynomial, {0} factors")]
    NotIrreducible(String),
    #[error("expected a nonzero rational here")]
    ZeroRational,
    #[error("{0} is not prime, places must be `inf` or a rational prime")]
    NonPrimePlace(String),
    #[error("invariants sum to {0}, not an integer")]
    InvariantSumNonzero(String),
    #[error("invariant at the infinite place must be 0 or 1/2, got {0}")]
    BadArchimedeanInvariant(String),
    #[error("capacity must be a positive integer")]
    BadCapacity,
    #[error("local computation unsupported for {poly} at {place}: {detail}")]
    UnsupportedLocalComputation {
        poly: String,
        place: String,
        detail: String,
    },
    #[error("polynomial {0} does not have integer coefficients after scaling")]
    NonIntegralInput(String),
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("factor {factor} obstructs the reduction: {multiplicity} * deg = {product} is not a multiple of the division degree {division_degree}")]
    ReductionObstructed {
        factor: String,
        multiplicity: usize,
        product: usize,
        division_degree: usize,
    },
    #[error("the algebra is split, a division algebra is required here")]
    SplitAlgebra,
    #[error("{poly}^{multiplicity} is not a characteristic polynomial of the algebra")]
    NotACharPoly { poly: String, multiplicity: usize },
    #[error("expected an integer value, got {0}")]
    NonIntegral(String),
    #[error("t cannot appear here: class invariants only cover invertible elements")]
    KeyIsT,
    #[error("the element is not invertible (t divides its characteristic polynomial)")]
    NotInvertible,
    #[error("invalid class invariant: {0}")]
    InvalidClass(String),
    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("the algebra has capacity > 1, a division algebra is required")]
    NotDivisionAlgebra,
    #[error("integer factorization gave up on {0}; input is beyond desk scale")]
    IntegerFactorization(String),
    #[error("parse error at byte {position}: expected {expected}")]
    Parse { position: usize, expected: String },
    #[error("invalid document: {0}")]
    Document(String),
    #[error("{0}")]
    Io(String),
    #[error("value out of range: {0}")]
    Overflow(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
