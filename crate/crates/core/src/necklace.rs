use std::fmt;

use crate::error::{Error, Result};

/// Bead content of a circular two-colored chain: `n_at` white (AT, bit 1)
/// and `n_gc` black (GC, bit 0) beads.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NecklaceSpec {
    pub n_at: u64,
    pub n_gc: u64,
}

impl NecklaceSpec {
    pub fn new(n_at: u64, n_gc: u64) -> Result<Self> {
        if n_at == 0 && n_gc == 0 {
            return Err(Error::EmptyNecklace);
        }
        Ok(NecklaceSpec { n_at, n_gc })
    }

    /// Total bead count `N`.
    pub fn len(&self) -> u64 {
        self.n_at + self.n_gc
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Largest possible alternation count, `2 * min(n_at, n_gc)`.
    pub fn max_alternations(&self) -> u64 {
        2 * self.n_at.min(self.n_gc)
    }

    /// Every admissible alternation count, ascending.
    pub fn alternation_support(&self) -> impl Iterator<Item = AlternationCount> {
        (0..=self.max_alternations() / 2).map(|m| AlternationCount(2 * m))
    }
}

impl fmt::Display for NecklaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n_at={}, n_gc={})", self.n_at, self.n_gc)
    }
}

/// Number of color changes around the ring. Always even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlternationCount(u64);

impl AlternationCount {
    pub fn new(alpha: u64) -> Result<Self> {
        if !alpha.is_multiple_of(2) {
            return Err(Error::OddAlternation(alpha));
        }
        Ok(AlternationCount(alpha))
    }

    /// Build from the number of containers of one color, `alpha = 2M`.
    pub fn from_containers(m: u64) -> Self {
        AlternationCount(2 * m)
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// Containers of each color, `M = alpha / 2`.
    pub fn containers(self) -> u64 {
        self.0 / 2
    }
}

impl fmt::Display for AlternationCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_spec_rejected() {
        assert_eq!(NecklaceSpec::new(0, 0), Err(Error::EmptyNecklace));
        assert!(NecklaceSpec::new(0, 1).is_ok());
    }

    #[test]
    fn odd_alternation_rejected() {
        assert_eq!(AlternationCount::new(3), Err(Error::OddAlternation(3)));
        assert_eq!(AlternationCount::new(10).unwrap().containers(), 5);
    }

    #[test]
    fn support_is_even_range() {
        let s = NecklaceSpec::new(3, 5).unwrap();
        let alphas: Vec<u64> = s.alternation_support().map(AlternationCount::get).collect();
        assert_eq!(alphas, vec![0, 2, 4, 6]);
        let h = NecklaceSpec::new(0, 4).unwrap();
        assert_eq!(h.alternation_support().count(), 1);
    }
}
