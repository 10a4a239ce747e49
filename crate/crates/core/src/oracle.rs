//! Brute-force ground truth for small rings.
//!
//! Strings are enumerated exhaustively and reduced to a canonical
//! representative by taking the minimum over all rotations and reflections.
//! No counting formula is used anywhere in this module.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::necklace::AlternationCount;
use crate::numtheory::BigCount;

/// Largest ring length [`enumerate_all`] accepts.
pub const MAX_ENUMERATION_LEN: u64 = 18;

/// A circular bead string; `true` is white (AT, written `1`), `false` black
/// (GC, written `0`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BeadString {
    beads: Vec<bool>,
}

impl BeadString {
    pub fn new(beads: Vec<bool>) -> Result<Self> {
        if beads.is_empty() {
            return Err(Error::InvalidInput("bead string must be non-empty".into()));
        }
        Ok(BeadString { beads })
    }

    pub fn beads(&self) -> &[bool] {
        &self.beads
    }

    pub fn len(&self) -> usize {
        self.beads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.beads.is_empty()
    }

    /// Number of white beads.
    pub fn white_count(&self) -> usize {
        self.beads.iter().filter(|&&b| b).count()
    }

    /// Shift left by `k` positions.
    pub fn rotate(&self, k: usize) -> BeadString {
        let mut beads = self.beads.clone();
        let n = beads.len();
        beads.rotate_left(k % n);
        BeadString { beads }
    }

    pub fn reversed(&self) -> BeadString {
        BeadString { beads: self.beads.iter().rev().copied().collect() }
    }
}

impl FromStr for BeadString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let beads = s
            .chars()
            .map(|c| match c {
                '1' => Ok(true),
                '0' => Ok(false),
                other => Err(Error::InvalidInput(format!("bead must be 0 or 1, got {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        BeadString::new(beads)
    }
}

impl fmt::Display for BeadString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.beads {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Number of positions `i` with `s[i] != s[i+1 mod N]`.
pub fn count_alternations(s: &BeadString) -> AlternationCount {
    let n = s.len();
    let changes = (0..n).filter(|&i| s.beads[i] != s.beads[(i + 1) % n]).count();
    AlternationCount::new(changes as u64).expect("changes around a cycle are even")
}

/// Lexicographically smallest of the `2N` rotations of `s` and of its reversal.
pub fn canonical_form(s: &BeadString) -> BeadString {
    let rev = s.reversed();
    (0..s.len())
        .flat_map(|k| [s.rotate(k), rev.rotate(k)])
        .min()
        .expect("non-empty")
}

// Bit-packed variants for the exhaustive sweep: bead i is bit (n-1-i), so
// numeric order equals lexicographic order of the bead string.

fn rotate_bits(x: u32, k: u32, n: u32) -> u32 {
    let mask = (1u32 << n) - 1;
    if k == 0 {
        x
    } else {
        ((x << k) | (x >> (n - k))) & mask
    }
}

fn reverse_bits(x: u32, n: u32) -> u32 {
    x.reverse_bits() >> (32 - n)
}

fn canonical_bits(x: u32, n: u32) -> u32 {
    let r = reverse_bits(x, n);
    (0..n)
        .flat_map(|k| [rotate_bits(x, k, n), rotate_bits(r, k, n)])
        .min()
        .expect("n >= 1")
}

fn alternations_bits(x: u32, n: u32) -> u64 {
    (x ^ rotate_bits(x, 1, n)).count_ones() as u64
}

/// Counts of distinct bracelets of length `n`, bucketed by
/// `(white bead count, alternations)`.
pub fn enumerate_all(n: u64) -> Result<BTreeMap<(u64, AlternationCount), BigCount>> {
    if n == 0 {
        return Err(Error::InvalidInput("ring length must be >= 1".into()));
    }
    if n > MAX_ENUMERATION_LEN {
        return Err(Error::EnumerationBound { n, max: MAX_ENUMERATION_LEN });
    }
    let n = n as u32;
    let classes: HashSet<u32> = (0..1u32 << n)
        .into_par_iter()
        .map(|x| canonical_bits(x, n))
        .collect();
    let mut buckets: BTreeMap<(u64, AlternationCount), BigCount> = BTreeMap::new();
    for c in classes {
        let alpha = AlternationCount::new(alternations_bits(c, n)).expect("even");
        *buckets.entry((c.count_ones() as u64, alpha)).or_default() += 1u32;
    }
    Ok(buckets)
}
