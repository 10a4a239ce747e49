use std::collections::BTreeMap;

use num_traits::Zero;
use polya_necklace::counting::{alternation_distribution, bracelet_count_direct, total_count};
use polya_necklace::oracle::enumerate_all;
use polya_necklace::{AlternationCount, BigCount, NecklaceSpec};

#[test]
fn polya_counts_match_exhaustive_enumeration() {
    for n in 1..=14u64 {
        let oracle = enumerate_all(n).unwrap();
        let mut polya: BTreeMap<(u64, AlternationCount), BigCount> = BTreeMap::new();
        for n_at in 0..=n {
            let spec = NecklaceSpec::new(n_at, n - n_at).unwrap();
            for (alpha, count) in alternation_distribution(spec).unwrap() {
                assert_eq!(
                    oracle.get(&(n_at, alpha)).cloned().unwrap_or_default(),
                    count,
                    "N={n} n_at={n_at} alpha={alpha}"
                );
                polya.insert((n_at, alpha), count);
            }
        }
        // Nothing the oracle found is missing from the Polya side.
        for (key, count) in &oracle {
            assert_eq!(polya.get(key), Some(count), "N={n} bucket {key:?}");
        }
    }
}

#[test]
fn enumerated_totals_match_burnside() {
    for n in 1..=16u64 {
        let enumerated: BigCount = enumerate_all(n).unwrap().into_values().sum();
        let burnside: BigCount = (0..=n)
            .map(|k| bracelet_count_direct(NecklaceSpec::new(k, n - k).unwrap()))
            .sum();
        assert_eq!(enumerated, burnside, "N={n}");
    }
}

#[test]
fn small_distributions_from_enumeration() {
    let d = |a, b| -> Vec<(u64, u64)> {
        alternation_distribution(NecklaceSpec::new(a, b).unwrap())
            .unwrap()
            .into_iter()
            .map(|(k, v)| (k.get(), u64::try_from(v).unwrap()))
            .collect()
    };
    let oracle8 = enumerate_all(8).unwrap();
    let m2 = oracle8[&(4, AlternationCount::new(4).unwrap())].clone();
    assert_eq!(BigCount::from(d(4, 4)[2].1), m2);
    // Independent brute force over the 70 strings with four of each color.
    assert_eq!(d(4, 4), vec![(0, 0), (2, 1), (4, 4), (6, 2), (8, 1)]);
}

#[test]
fn totals_match_direct_burnside_up_to_200() {
    let mut points = 0;
    for n in (1..=200u64).step_by(7) {
        for n_at in [0, 1, n / 3, n / 2, n - n / 4, n] {
            let spec = NecklaceSpec::new(n_at, n - n_at).unwrap();
            let direct = bracelet_count_direct(spec);
            assert!(!direct.is_zero());
            assert_eq!(total_count(spec).unwrap(), direct, "{spec}");
            points += 1;
        }
    }
    assert!(points >= 50);
}
