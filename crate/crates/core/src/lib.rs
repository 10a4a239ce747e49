//! Exact statistics of color alternations in two-colored circular chains.
//!
//! A circular chain of `n_at` white and `n_gc` black beads, counted up to
//! rotation and reflection, is a bracelet. An *alternation* is a pair of
//! adjacent beads of different colors. The number of alternations `alpha`
//! is always even. This crate counts the bracelets with given content and
//! given `alpha` exactly. It does so by Polya enumeration over the ring of
//! same-colored runs ("containers"), using a cycle index that tracks white
//! and black containers separately.
//!
//! Modules, bottom-up:
//!
//! - [`numtheory`]: big-integer binomials, totient, divisors
//! - [`series`]: coefficients of powers and products of `f(x) = x + x^2 + ...`
//! - [`cycle_index`]: bipartite cycle indices and the orbit count
//! - [`counting`]: counts by alternation number, totals, a direct Burnside check
//! - [`oracle`]: exhaustive enumeration for small rings
//! - [`montecarlo`]: seeded random chains and distances to theory
//! - [`stats`]: pdfs, Gaussian fits, sweeps
//!
//! ```
//! use polya_necklace::{counting::alternation_distribution, NecklaceSpec};
//!
//! let spec = NecklaceSpec::new(3, 3)?;
//! let dist = alternation_distribution(spec)?;
//! let counts: Vec<u32> = dist.values().map(|c| c.try_into().unwrap()).collect();
//! assert_eq!(counts, [0, 1, 1, 1]);
//! # Ok::<(), polya_necklace::Error>(())
//! ```

pub mod counting;
pub mod cycle_index;
mod error;
pub mod montecarlo;
mod necklace;
pub mod numtheory;
pub mod oracle;
pub mod series;
pub mod stats;

pub use error::{Error, Result};
pub use necklace::{AlternationCount, NecklaceSpec};
pub use numtheory::BigCount;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/alternations.md")]
    mod alternations {}
    #[doc = include_str!("../../../book/src/series.md")]
    mod series {}
    #[doc = include_str!("../../../book/src/cycle-index.md")]
    mod cycle_index {}
    #[doc = include_str!("../../../book/src/counting.md")]
    mod counting {}
    #[doc = include_str!("../../../book/src/worked-example.md")]
    mod worked_example {}
    #[doc = include_str!("../../../book/src/monte-carlo.md")]
    mod monte_carlo {}
    #[doc = include_str!("../../../book/src/fitting.md")]
    mod fitting {}
}
