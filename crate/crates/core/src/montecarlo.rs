//! Seeded Monte Carlo sampling of random rings with fixed bead content.
//!
//! Each chain is a uniform shuffle of `n_at` white and `n_gc` black beads,
//! so every one of the `C(N, n_at)` arrangements is equally likely.
//!
//! Reproducibility: every simulated set draws from its own [`ChaCha8Rng`]
//! seeded with [`sub_seed`]`(master, counter)`. The sub-seed is a splitmix64
//! finalizer applied to `master + (counter + 1) * 0x9E3779B97F4A7C15`. No
//! generator state is shared between sets, so results do not depend on how
//! sets are scheduled across threads.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::necklace::NecklaceSpec;
use crate::oracle::{count_alternations, BeadString};
use crate::stats::{theoretical_pdf, DiscretePdf, Provenance};

/// Identifier of the generator algorithm, echoed in every output.
pub const PRNG_ID: &str = "chacha8/rand_chacha-0.9/seed_from_u64";

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// Derives the seed for the `counter`-th independent stream.
pub fn sub_seed(master: u64, counter: u64) -> u64 {
    let mut z = master.wrapping_add(counter.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Generator for a given seed.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MCConfig {
    pub spec: NecklaceSpec,
    /// Chains per set (`N_MC`).
    pub runs: u64,
    pub seed: u64,
    /// Independent repetitions.
    pub sets: u64,
}

impl MCConfig {
    pub const DEFAULT_SETS: u64 = 5;

    pub fn new(spec: NecklaceSpec, runs: u64, seed: u64, sets: u64) -> Result<Self> {
        if runs == 0 {
            return Err(Error::InvalidInput("runs must be >= 1".into()));
        }
        if sets == 0 {
            return Err(Error::InvalidInput("sets must be >= 1".into()));
        }
        Ok(MCConfig { spec, runs, seed, sets })
    }
}

/// A uniformly random arrangement of the beads in `spec`.
pub fn sample_chain<R: Rng + ?Sized>(spec: NecklaceSpec, rng: &mut R) -> BeadString {
    let mut beads: Vec<bool> = std::iter::repeat_n(true, spec.n_at as usize)
        .chain(std::iter::repeat_n(false, spec.n_gc as usize))
        .collect();
    beads.shuffle(rng);
    BeadString::new(beads).expect("spec is non-empty")
}

/// Normalized histogram of alternation counts over `runs` chains drawn from
/// `rng`. Keys cover the spec's whole even support, zeros included.
pub fn sample_pdf<R: Rng + ?Sized>(spec: NecklaceSpec, runs: u64, rng: &mut R) -> DiscretePdf {
    let mut counts: BTreeMap<u64, u64> =
        spec.alternation_support().map(|a| (a.get(), 0)).collect();
    for _ in 0..runs {
        let alpha = count_alternations(&sample_chain(spec, rng));
        *counts.get_mut(&alpha.get()).expect("alpha within support") += 1;
    }
    let entries = counts
        .into_iter()
        .map(|(a, c)| (a, c as f64 / runs as f64))
        .collect();
    DiscretePdf::from_entries(entries, Provenance::Empirical)
}

/// Empirical pdf of one set, drawn from a generator seeded directly with
/// `config.seed`.
pub fn empirical_pdf(config: &MCConfig) -> DiscretePdf {
    sample_pdf(config.spec, config.runs, &mut rng_from_seed(config.seed))
}

/// `sum_alpha |p(alpha) - q(alpha)|` over the union of both supports.
pub fn total_abs_diff(p: &DiscretePdf, q: &DiscretePdf) -> f64 {
    let mut keys: Vec<u64> = p.entries().keys().chain(q.entries().keys()).copied().collect();
    keys.sort_unstable();
    keys.dedup();
    keys.into_iter().map(|a| (p.get(a) - q.get(a)).abs()).sum()
}

/// One simulated set and its distance from the theoretical pdf.
#[derive(Debug, Clone, PartialEq)]
pub struct SetResult {
    pub index: u64,
    pub sub_seed: u64,
    pub pdf: DiscretePdf,
    pub distance: f64,
}

/// Runs `config.sets` independent sets; set `i` uses `sub_seed(config.seed, i)`.
pub fn run_sets(config: &MCConfig) -> Result<Vec<SetResult>> {
    let theory = theoretical_pdf(config.spec)?;
    Ok(run_sets_against(config, 0, &theory))
}

fn run_sets_against(config: &MCConfig, first_counter: u64, theory: &DiscretePdf) -> Vec<SetResult> {
    (0..config.sets)
        .into_par_iter()
        .map(|i| {
            let seed = sub_seed(config.seed, first_counter + i);
            let pdf = sample_pdf(config.spec, config.runs, &mut rng_from_seed(seed));
            let distance = total_abs_diff(&pdf, theory);
            SetResult { index: i, sub_seed: seed, pdf, distance }
        })
        .collect()
}

/// Mean and spread of the distance to theory at one `N_MC`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRow {
    pub runs: u64,
    pub mean_distance: f64,
    /// Population standard deviation over sets (zero for a single set).
    pub std_distance: f64,
    pub sets: Vec<SetResult>,
}

/// For each `N_MC` in `run_counts`, runs `sets` independent simulations and
/// summarizes their distance to the theoretical pdf. Row `j`, set `i` uses
/// sub-seed counter `j * sets + i`.
pub fn convergence_study(
    spec: NecklaceSpec,
    run_counts: &[u64],
    sets: u64,
    seed: u64,
) -> Result<Vec<ConvergenceRow>> {
    if run_counts.is_empty() {
        return Err(Error::InvalidInput("run_counts must be non-empty".into()));
    }
    let theory = theoretical_pdf(spec)?;
    run_counts
        .iter()
        .enumerate()
        .map(|(j, &runs)| {
            let config = MCConfig::new(spec, runs, seed, sets)?;
            let results = run_sets_against(&config, j as u64 * sets, &theory);
            let n = results.len() as f64;
            let mean = results.iter().map(|r| r.distance).sum::<f64>() / n;
            let var = results.iter().map(|r| (r.distance - mean).powi(2)).sum::<f64>() / n;
            Ok(ConvergenceRow { runs, mean_distance: mean, std_distance: var.sqrt(), sets: results })
        })
        .collect()
}
