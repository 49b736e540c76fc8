mod common;

use acf_contact::model::LayerSpec;
use acf_contact::network::{discretize_layer, reduce_series_parallel, solve_network, Reduction};
use acf_contact::Error;
use common::*;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn oracle_sanity() {
    // Triangle of 1 Ω edges: 2/3 Ω between any pair.
    let tri = [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)];
    assert!((spanning_tree_resistance(3, &tri, 0, 1) - 2.0 / 3.0).abs() < 1e-12);
    let chain = [(0, 1, 1.0), (1, 2, 0.5)];
    assert!((spanning_tree_resistance(3, &chain, 0, 2) - 3.0).abs() < 1e-12);
}

#[test]
fn random_six_node_networks_match_tree_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..50 {
        let (n, edges, s, t) = random_connected(&mut rng, 6, 10);
        let solved = solve_network(&to_network(n, &edges, s, t)).unwrap();
        let oracle = spanning_tree_resistance(n, &edges, s, t);
        assert!(rel(solved, oracle) < 1e-9, "{solved} vs {oracle}");
    }
}

#[test]
fn parallel_bundle_is_exact() {
    for n in [1usize, 10, 100, 1000, 11107] {
        let layer = LayerSpec::with_cube_count("bundle", 0.5, n as f64).unwrap();
        let r = solve_network(&discretize_layer(&layer, n, false).unwrap()).unwrap();
        assert!(rel(r, 0.5 / n as f64) < 1e-9, "n = {n}: {r}");
    }
}

#[test]
fn lateral_coupling_carries_no_current() {
    for cubes in [1usize, 2, 5, 9, 16, 30] {
        let layer = LayerSpec::with_cube_count("s", 0.7, cubes as f64).unwrap();
        let plain = solve_network(&discretize_layer(&layer, cubes, false).unwrap()).unwrap();
        let coupled = solve_network(&discretize_layer(&layer, cubes, true).unwrap()).unwrap();
        assert!(rel(coupled, plain) < 1e-9, "{cubes}: {coupled} vs {plain}");
    }
}

#[test]
fn bridge_is_not_reducible_but_solvable() {
    let edges = [(0, 1, 1.0), (0, 2, 0.5), (1, 3, 1.0 / 3.0), (2, 3, 0.25), (1, 2, 0.2)];
    let net = to_network(4, &edges, 0, 3);
    assert_eq!(reduce_series_parallel(&net).unwrap(), Reduction::NotReducible);
    let oracle = spanning_tree_resistance(4, &edges, 0, 3);
    assert!(rel(solve_network(&net).unwrap(), oracle) < 1e-12);
}

#[test]
fn open_circuit_reported_by_both_routes() {
    let net = to_network(4, &[(0, 1, 1.0), (2, 3, 1.0)], 0, 3);
    assert!(matches!(solve_network(&net), Err(Error::OpenCircuit)));
    assert!(matches!(reduce_series_parallel(&net), Err(Error::OpenCircuit)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn solve_matches_tree_oracle(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (n, edges, s, t) = random_connected(&mut rng, 8, 12);
        let solved = solve_network(&to_network(n, &edges, s, t)).unwrap();
        let oracle = spanning_tree_resistance(n, &edges, s, t);
        prop_assert!(rel(solved, oracle) < 1e-9, "{} vs {}", solved, oracle);
    }

    #[test]
    fn reducible_networks_agree(seed in any::<u64>(), depth in 1u32..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (n, edges, s, t, composed) = random_series_parallel(&mut rng, depth);
        let net = to_network(n, &edges, s, t);
        let reduced = reduce_series_parallel(&net).unwrap().ohms().expect("series-parallel by construction");
        let solved = solve_network(&net).unwrap();
        prop_assert!(rel(reduced, solved) < 1e-9, "{} vs {}", reduced, solved);
        prop_assert!(rel(reduced, composed) < 1e-9);
    }

    #[test]
    fn relabelling_and_edge_order_invariance(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (n, edges, s, t) = random_connected(&mut rng, 8, 14);
        let base = solve_network(&to_network(n, &edges, s, t)).unwrap();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let mut moved: Vec<RawEdge> = edges.iter().map(|&(a, b, g)| (perm[b], perm[a], g)).collect();
        moved.shuffle(&mut rng);
        let other = solve_network(&to_network(n, &moved, perm[s], perm[t])).unwrap();
        prop_assert!(rel(other, base) < 1e-12);
    }

    #[test]
    fn rayleigh_monotonicity(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (n, mut edges, s, t) = random_connected(&mut rng, 8, 12);
        let base = solve_network(&to_network(n, &edges, s, t)).unwrap();

        let a = rng.random_range(0..n);
        let b = (a + rng.random_range(1..n)) % n;
        let mut added = edges.clone();
        added.push((a, b, rng.random_range(0.1..10.0)));
        let with_edge = solve_network(&to_network(n, &added, s, t)).unwrap();
        prop_assert!(with_edge <= base * (1.0 + 1e-12));

        let drop = rng.random_range(0..edges.len());
        edges.remove(drop);
        match solve_network(&to_network(n, &edges, s, t)) {
            Ok(without) => prop_assert!(without >= base * (1.0 - 1e-12)),
            // Removing a bridge edge opens the circuit: resistance is unbounded.
            Err(Error::OpenCircuit) => {}
            Err(e) => prop_assert!(false, "unexpected {}", e),
        }
    }
}
