mod support;

use eigclust::delaunay_cluster::DelaunayOptions;
use eigclust::spectrum::{deduplicate, reduce_conjugate_pairs};
use eigclust::validate::{is_admissible, oracle_components};
use eigclust::{
    cluster_delaunay, cluster_naive, cluster_real, ArithmeticMode, DsuKind, PlanePoint, Spectrum64,
};
use proptest::prelude::*;
use rand::Rng;

const DELTAS: [f64; 5] = [0.0625, 0.1, 0.125, 0.2, 0.3125];

#[test]
fn delaunay_naive_and_oracles_agree() {
    let mut rng = support::rng(11);
    for trial in 0..300 {
        let n = rng.random_range(2..=200);
        let s = support::random_instance(&mut rng, n, trial);
        let delta = DELTAS[trial % DELTAS.len()];
        let opts = DelaunayOptions {
            seed: trial as u64,
            ..Default::default()
        };
        let reference = oracle_components(s.points(), delta).unwrap();
        assert!(support::same_partition(
            reference.labels(),
            &support::components(s.points(), delta)
        ));
        let d = cluster_delaunay(&s, delta, &opts).unwrap();
        assert_eq!(d, reference, "trial {trial}, n {n}, delta {delta}");
        for kind in [DsuKind::LabelVector, DsuKind::Forest] {
            assert_eq!(cluster_naive(&s, delta, kind).unwrap(), reference);
        }
        assert!(is_admissible(s.points(), delta, &d)
            .unwrap()
            .is_admissible());
    }
}

#[test]
fn every_arithmetic_mode_agrees_on_generic_input() {
    let mut rng = support::rng(12);
    for trial in 0..40 {
        let s = support::random_instance(&mut rng, 150, 0);
        let reference = oracle_components(s.points(), 0.1).unwrap();
        for mode in [
            ArithmeticMode::Float,
            ArithmeticMode::Filtered,
            ArithmeticMode::Exact,
        ] {
            let opts = DelaunayOptions {
                seed: trial,
                mode,
                ..Default::default()
            };
            assert_eq!(cluster_delaunay(&s, 0.1, &opts).unwrap(), reference);
        }
    }
}

#[test]
fn sort_and_split_matches_oracle() {
    let mut rng = support::rng(13);
    for trial in 0..300 {
        let n = rng.random_range(1..=256);
        let v: Vec<f64> = if trial % 2 == 0 {
            (0..n).map(|_| rng.random_range(-1.0..1.0)).collect()
        } else {
            (0..n)
                .map(|_| rng.random_range(-16..16) as f64 / 16.0)
                .collect()
        };
        let s = Spectrum64::from_reals(&v).unwrap();
        let delta = DELTAS[trial % DELTAS.len()];
        let reference = oracle_components(s.points(), delta).unwrap();
        assert_eq!(cluster_real(&s, delta).unwrap(), reference, "trial {trial}");
        let d = cluster_delaunay(&s, delta, &DelaunayOptions::default()).unwrap();
        assert_eq!(d, reference);
    }
}

#[test]
fn duplicates_and_conjugates_broadcast() {
    let mut rng = support::rng(14);
    for _ in 0..50 {
        let mut raw = Vec::new();
        for _ in 0..60 {
            let p = PlanePoint::new(
                rng.random_range(0..8) as f64 / 8.0,
                rng.random_range(0..4) as f64 / 8.0,
            );
            raw.push(p);
            if p.im != 0.0 && rng.random_bool(0.7) {
                raw.push(p.conj());
            }
        }
        let s = reduce_conjugate_pairs(raw.clone()).unwrap();
        let c = cluster_delaunay(&s, 0.125, &DelaunayOptions::default()).unwrap();
        assert_eq!(c.len(), raw.len());
        for r in 0..raw.len() {
            if let Some(partner) = s.conjugate_of(r) {
                assert_eq!(c.labels()[r], c.labels()[partner]);
            }
        }
        // the reduced problem clusters exactly like the representatives do
        let reps = oracle_components(s.points(), 0.125).unwrap();
        for r in 0..raw.len() {
            for t in 0..raw.len() {
                let same =
                    reps.labels()[s.representative_of(r)] == reps.labels()[s.representative_of(t)];
                assert_eq!(same, c.labels()[r] == c.labels()[t]);
            }
        }
        // without conjugate reduction, deduplicated clustering equals the raw oracle
        let plain = Spectrum64::from_points(raw.clone()).unwrap();
        assert!(deduplicate(&plain).len() < raw.len());
        assert_eq!(
            cluster_delaunay(&plain, 0.125, &DelaunayOptions::default()).unwrap(),
            oracle_components(&raw, 0.125).unwrap()
        );
    }
}

#[test]
fn coarsening_in_delta() {
    let mut rng = support::rng(15);
    for trial in 0..20 {
        let s = support::random_instance(&mut rng, 120, trial);
        let mut prev = None;
        for delta in DELTAS {
            let c = cluster_delaunay(&s, delta, &DelaunayOptions::default()).unwrap();
            if let Some(p) = &prev {
                assert!(eigclust::Clustering::refines(p, &c));
            }
            prev = Some(c);
        }
    }
}

fn degenerate_points() -> impl Strategy<Value = Vec<(i32, i32)>> {
    prop::collection::vec((0i32..6, 0i32..6), 1..40)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn degenerate_grids_match_oracle(
        pts in degenerate_points(),
        seed in any::<u64>(),
        delta_steps in 1u32..6,
    ) {
        let raw: Vec<PlanePoint> = pts
            .iter()
            .map(|&(x, y)| PlanePoint::new(x as f64 / 8.0, y as f64 / 8.0))
            .collect();
        let s = Spectrum64::from_points(raw.clone()).unwrap();
        let delta = delta_steps as f64 / 16.0;
        let reference = oracle_components(&raw, delta).unwrap();
        for mode in [ArithmeticMode::Filtered, ArithmeticMode::Exact] {
            let opts = DelaunayOptions { seed, mode, ..Default::default() };
            prop_assert_eq!(cluster_delaunay(&s, delta, &opts).unwrap(), reference.clone());
        }
        prop_assert_eq!(cluster_naive(&s, delta, DsuKind::LabelVector).unwrap(), reference);
    }
}
