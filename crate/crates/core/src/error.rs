use thiserror::Error;

/// Errors raised by the counting, sampling and fitting routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A caller-supplied value is outside the operation's domain.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An odd alternation count was requested. Alternations on a cycle are always even.
    #[error("alternation count must be even (got {0})")]
    OddAlternation(u64),

    /// The empty necklace (no beads of either color).
    #[error("necklace must contain at least one bead")]
    EmptyNecklace,

    /// A series factor with a positive power but zero stride.
    #[error("series factor f(x^0)^{power} is undefined for positive power")]
    ZeroStride { power: u64 },

    /// The exact Polya sum did not come out integral. This means the cycle index is malformed.
    #[error("orbit count is not an integer: {0}")]
    Integrality(String),

    /// The brute-force enumerator refuses lengths beyond its bound.
    #[error("enumeration length {n} exceeds the bound {max}")]
    EnumerationBound { n: u64, max: u64 },

    /// Gaussian fitting needs at least three nonzero points.
    #[error("support too small to fit ({points} nonzero points, need at least 3)")]
    SupportTooSmall { points: usize },

    /// The fitted width collapsed during refinement.
    #[error("gaussian width degenerated below {0:e}")]
    DegenerateSigma(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
