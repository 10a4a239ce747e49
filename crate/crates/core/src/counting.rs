//! Exact counts of bracelets by bead content and number of alternations.
//!
//! For `alpha = 2M >= 2` the count is the orbit count of the container ring
//! under its order-`2M` symmetry group, read off the dihedral bipartite cycle
//! index. `alpha = 0` (a single-colored ring) is handled directly.
//!
//! All counts are class-uniform: each bracelet, that is each equivalence
//! class under rotation and reflection, counts once however many distinct
//! linear strings it represents.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::cycle_index::BipartiteCycleIndex;
use crate::error::{Error, Result};
use crate::necklace::{AlternationCount, NecklaceSpec};
use crate::numtheory::{binomial_u, divisors, totient, BigCount};

/// Alternation count to number of distinct bracelets.
pub type Distribution = BTreeMap<AlternationCount, BigCount>;

/// Bracelets with content `spec` and exactly `2M` alternations.
///
/// ```
/// use polya_necklace::{counting::necklace_count, NecklaceSpec};
/// let spec = NecklaceSpec::new(8, 6).unwrap();
/// assert_eq!(necklace_count(5, spec).unwrap(), 19u32.into());
/// ```
pub fn necklace_count(m: u64, spec: NecklaceSpec) -> Result<BigCount> {
    if m == 0 {
        return Err(Error::InvalidInput(
            "container count M must be >= 1; use zero_alternation_count for alpha = 0".into(),
        ));
    }
    if m > spec.n_at.min(spec.n_gc) {
        return Ok(BigCount::zero());
    }
    BipartiteCycleIndex::dihedral(m as i64)?.count_orbits(spec.n_at, spec.n_gc)
}

/// Bracelets with content `spec` and exactly `alpha` alternations.
pub fn count_for_alternation(alpha: AlternationCount, spec: NecklaceSpec) -> Result<BigCount> {
    match alpha.containers() {
        0 => Ok(zero_alternation_count(spec)),
        m => necklace_count(m, spec),
    }
}

/// `1` for a single-colored ring, `0` if both colors are present.
pub fn zero_alternation_count(spec: NecklaceSpec) -> BigCount {
    if spec.n_at == 0 || spec.n_gc == 0 {
        BigCount::one()
    } else {
        BigCount::zero()
    }
}

/// Counts for every admissible alternation number `0, 2, ..., 2 min(n_at, n_gc)`.
/// Per-`M` counts run in parallel; the first error in `M` order wins.
pub fn alternation_distribution(spec: NecklaceSpec) -> Result<Distribution> {
    let max_m = spec.n_at.min(spec.n_gc);
    let per_m: Vec<Result<BigCount>> = (1..=max_m)
        .into_par_iter()
        .map(|m| necklace_count(m, spec))
        .collect();
    let mut out = Distribution::new();
    out.insert(AlternationCount::from_containers(0), zero_alternation_count(spec));
    for (m, count) in (1..=max_m).zip(per_m) {
        out.insert(AlternationCount::from_containers(m), count?);
    }
    Ok(out)
}

/// Total number of bracelets with content `spec`, summed over alternation counts.
pub fn total_count(spec: NecklaceSpec) -> Result<BigCount> {
    Ok(alternation_distribution(spec)?.into_values().sum())
}

/// Bracelets with content `spec`, by Burnside's lemma over the `2N` rotations
/// and reflections of the `N` bead positions.
///
/// This does not go through containers at all and serves as an independent
/// check on [`total_count`].
pub fn bracelet_count_direct(spec: NecklaceSpec) -> BigCount {
    let n = spec.len();
    let k = spec.n_at;

    // Rotation by j has gcd(j, N) cycles of length d = N / gcd; there are
    // phi(d) such rotations, and a coloring is fixed iff d | k.
    let mut fixed = BigCount::zero();
    for d in divisors(n as i64).expect("n >= 1") {
        if k.is_multiple_of(d) {
            let phi = totient(d as i64).expect("d >= 1");
            fixed += binomial_u(n / d, k / d) * phi;
        }
    }

    if n.is_odd() {
        // N axes, each through one bead: one fixed point and (N-1)/2 swaps.
        fixed += binomial_u((n - 1) / 2, k / 2) * n;
    } else {
        let half = n / 2;
        // N/2 axes through two beads: two fixed points and (N-2)/2 swaps.
        let vertex = if k.is_even() {
            binomial_u(half - 1, k / 2) + if k >= 2 { binomial_u(half - 1, k / 2 - 1) } else { BigCount::zero() }
        } else {
            binomial_u(half - 1, (k - 1) / 2) * 2u32
        };
        // N/2 axes through two edges: N/2 swaps, no fixed points.
        let edge = if k.is_even() { binomial_u(half, k / 2) } else { BigCount::zero() };
        fixed += (vertex + edge) * half;
    }

    let (q, r) = fixed.div_rem(&BigCount::from(2 * n));
    debug_assert!(r.is_zero(), "Burnside sum not divisible by group order");
    q
}
