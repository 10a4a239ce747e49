use std::collections::HashMap;

use polya_necklace::montecarlo::{
    convergence_study, empirical_pdf, rng_from_seed, run_sets, sample_chain, total_abs_diff, MCConfig,
};
use polya_necklace::oracle::count_alternations;
use polya_necklace::stats::theoretical_pdf;
use polya_necklace::NecklaceSpec;

fn spec(a: u64, b: u64) -> NecklaceSpec {
    NecklaceSpec::new(a, b).unwrap()
}

#[test]
fn sample_mean_matches_linearity_of_expectation() {
    for (a, b) in [(50, 50), (40, 60), (10, 3)] {
        let s = spec(a, b);
        let mut rng = rng_from_seed(2024);
        let draws = 100_000;
        let xs: Vec<f64> = (0..draws)
            .map(|_| count_alternations(&sample_chain(s, &mut rng)).get() as f64)
            .collect();
        let mean = xs.iter().sum::<f64>() / draws as f64;
        let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (draws - 1) as f64;
        let se = (var / draws as f64).sqrt();
        let n = (a + b) as f64;
        let expected = 2.0 * a as f64 * b as f64 / (n - 1.0);
        assert!((mean - expected).abs() < 5.0 * se, "({a},{b}): {mean} vs {expected} (se {se})");
    }
}

#[test]
fn arrangements_of_two_and_two_are_uniform() {
    let s = spec(2, 2);
    let mut rng = rng_from_seed(99);
    let draws = 120_000;
    let mut freq: HashMap<String, u64> = HashMap::new();
    for _ in 0..draws {
        *freq.entry(sample_chain(s, &mut rng).to_string()).or_default() += 1;
    }
    assert_eq!(freq.len(), 6);
    let p = 1.0 / 6.0;
    let se = (p * (1.0 - p) / draws as f64).sqrt();
    for (k, v) in freq {
        let f = v as f64 / draws as f64;
        assert!((f - p).abs() < 5.0 * se, "{k}: {f}");
    }
}

#[test]
fn results_do_not_depend_on_worker_count() {
    let config = MCConfig::new(spec(30, 20), 2000, 5, 6).unwrap();
    let serial = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let wide = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap();
    let a = serial.install(|| run_sets(&config).unwrap());
    let b = wide.install(|| run_sets(&config).unwrap());
    assert_eq!(a, b);
}

#[test]
fn pinned_seed_regression() {
    // Frozen from the first run with seed 1; any change in sampling or
    // sub-seed derivation shows up here.
    let rows = convergence_study(spec(50, 50), &[1000, 5000, 20000], 5, 1).unwrap();
    let frozen = [
        (7.666_264_861_228_225e-2, 1.2266898508726106e-2),
        (3.813_159_267_412_18e-2, 4.964_785_065_761_369e-3),
        (1.6013736580582454e-2, 1.5757258754362019e-3),
    ];
    for (row, (mean, std)) in rows.iter().zip(frozen) {
        assert!((row.mean_distance - mean).abs() < 1e-12, "{}: {}", row.runs, row.mean_distance);
        assert!((row.std_distance - std).abs() < 1e-12, "{}: {}", row.runs, row.std_distance);
    }
    assert!(rows.windows(2).all(|w| w[1].mean_distance < w[0].mean_distance));
}

#[test]
fn single_set_at_twenty_thousand_runs_is_close() {
    let config = MCConfig::new(spec(50, 50), 20_000, 1, 1).unwrap();
    let theory = theoretical_pdf(config.spec).unwrap();
    let d = total_abs_diff(&empirical_pdf(&config), &theory);
    assert!(d < 0.1, "d = {d}");
}
