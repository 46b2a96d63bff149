//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// `poly_gcd(0, 0)` has no normalized representative.
    #[error("undefined gcd: both inputs are zero")]
    UndefinedGcd,

    #[error("division by zero")]
    DivisionByZero,

    /// A denominator vanished at an evaluation point; the caller must resample.
    #[error("pole: denominator vanishes at the evaluation point")]
    Pole,

    #[error("no value assigned for variable {0}")]
    MissingAssignment(String),

    #[error("substitution map is not injective on the occurring variables")]
    NonInjectiveSubstitution,

    #[error("rank must be at least 2, got {0}")]
    InvalidRank(i64),

    #[error("family {family} out of range for rank {rank}")]
    InvalidFamily { family: u32, rank: u32 },

    #[error("window of sites must be nonempty and start at site >= 1")]
    InvalidWindow,

    #[error("unable to sample a pole-free point after {0} redraws")]
    DegenerateSampling(u32),

    #[error("not representable in basis")]
    NotRepresentable,

    #[error("verification failed at witness point {witness}")]
    VerificationFailed { witness: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
