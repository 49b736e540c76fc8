//! Test-only oracles, independent of the library's solver paths.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

/// (a, b, conductance)
pub type RawEdge = (usize, usize, f64);

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

/// Sum over spanning trees of the product of edge weights, by brute-force
/// enumeration of (nodes − 1)-edge subsets.
fn weighted_tree_sum(nodes: usize, edges: &[RawEdge]) -> f64 {
    let need = nodes - 1;
    if need == 0 {
        return 1.0;
    }
    let m = edges.len();
    let mut total = 0.0;
    let mut pick: Vec<usize> = (0..need).collect();
    if need > m {
        return 0.0;
    }
    loop {
        let mut parent: Vec<usize> = (0..nodes).collect();
        let mut weight = 1.0;
        let mut tree = true;
        for &i in &pick {
            let (a, b, g) = edges[i];
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                tree = false;
                break;
            }
            parent[ra] = rb;
            weight *= g;
        }
        if tree {
            total += weight;
        }
        // Next combination.
        let mut k = need;
        loop {
            if k == 0 {
                return total;
            }
            k -= 1;
            if pick[k] != k + m - need {
                break;
            }
            if k == 0 {
                return total;
            }
        }
        pick[k] += 1;
        for j in k + 1..need {
            pick[j] = pick[j - 1] + 1;
        }
    }
}

/// Effective resistance between `s` and `t` of a connected multigraph via
/// the matrix-tree identity `R = T(G / st) / T(G)`.
pub fn spanning_tree_resistance(nodes: usize, edges: &[RawEdge], s: usize, t: usize) -> f64 {
    let full = weighted_tree_sum(nodes, edges);
    // Merge t into s, then compact labels.
    let relabel = |v: usize| {
        let v = if v == t { s } else { v };
        if v > t {
            v - 1
        } else {
            v
        }
    };
    let merged: Vec<RawEdge> = edges
        .iter()
        .map(|&(a, b, g)| (relabel(a), relabel(b), g))
        .filter(|&(a, b, _)| a != b)
        .collect();
    weighted_tree_sum(nodes - 1, &merged) / full
}

/// A connected random multigraph: a random spanning tree plus extra edges.
/// Returns (nodes, edges, source, sink).
pub fn random_connected(rng: &mut impl Rng, max_nodes: usize, max_edges: usize) -> (usize, Vec<RawEdge>, usize, usize) {
    let n = rng.random_range(2..=max_nodes);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let j = rng.random_range(0..i);
        edges.push((order[i], order[j], rng.random_range(0.1..10.0)));
    }
    let extra = rng.random_range(0..=max_edges.saturating_sub(n - 1));
    for _ in 0..extra {
        let a = rng.random_range(0..n);
        let mut b = rng.random_range(0..n);
        while b == a {
            b = rng.random_range(0..n);
        }
        edges.push((a, b, rng.random_range(0.1..10.0)));
    }
    let s = rng.random_range(0..n);
    let mut t = rng.random_range(0..n);
    while t == s {
        t = rng.random_range(0..n);
    }
    (n, edges, s, t)
}

/// A random series-parallel network built by composition, with its
/// resistance computed alongside by the series/parallel formulas.
/// Returns (nodes, edges as conductances, source, sink, resistance).
pub fn random_series_parallel(rng: &mut impl Rng, depth: u32) -> (usize, Vec<RawEdge>, usize, usize, f64) {
    fn build(rng: &mut impl Rng, depth: u32, a: usize, b: usize, next: &mut usize, edges: &mut Vec<RawEdge>) -> f64 {
        let choice = if depth == 0 { 0 } else { rng.random_range(0..3) };
        match choice {
            0 => {
                let r: f64 = rng.random_range(0.1..10.0);
                edges.push((a, b, 1.0 / r));
                r
            }
            1 => {
                let mid = *next;
                *next += 1;
                build(rng, depth - 1, a, mid, next, edges) + build(rng, depth - 1, mid, b, next, edges)
            }
            _ => {
                let r1 = build(rng, depth - 1, a, b, next, edges);
                let r2 = build(rng, depth - 1, a, b, next, edges);
                r1 * r2 / (r1 + r2)
            }
        }
    }
    let mut edges = Vec::new();
    let mut next = 2;
    let r = build(rng, depth, 0, 1, &mut next, &mut edges);
    // Random relabelling and edge order.
    let mut perm: Vec<usize> = (0..next).collect();
    perm.shuffle(rng);
    let mut edges: Vec<RawEdge> = edges.into_iter().map(|(a, b, g)| (perm[a], perm[b], g)).collect();
    edges.shuffle(rng);
    (next, edges, perm[0], perm[1], r)
}

pub fn to_network(nodes: usize, edges: &[RawEdge], s: usize, t: usize) -> acf_contact::network::ResistorNetwork {
    let mut net = acf_contact::network::ResistorNetwork::new(nodes, s, t).unwrap();
    for &(a, b, g) in edges {
        net.add_conductance(a, b, g).unwrap();
    }
    net
}

pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}
