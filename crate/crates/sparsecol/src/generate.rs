//! Seeded graph generators for tests and benchmarks.
//!
//! Everything is deterministic under (parameters, seed): the forest family
//! decodes uniformly random Prüfer sequences, and the bounded-degeneracy
//! family wires each vertex of a random order to distinct earlier vertices.

use crate::graph::Graph;
use crate::weak;
use crate::Result;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn star(leaves: usize) -> Graph {
    let pairs: Vec<(usize, usize)> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::build(leaves + 1, &pairs).expect("star is simple")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    let pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::build(n, &pairs).expect("cycle is simple")
}

/// The weak-free extremal construction, re-exported beside the other
/// generators.
pub fn strong(d: usize) -> Result<Graph> {
    weak::strong_graph(d)
}

/// Decodes a uniformly random Prüfer sequence into a uniformly random
/// labeled tree on `n` vertices.
fn random_tree_edges(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    if n <= 1 {
        return Vec::new();
    }
    if n == 2 {
        return vec![(0, 1)];
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // Min-heap over current leaves keeps the decode deterministic.
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    for &v in &seq {
        let std::cmp::Reverse(leaf) = leaves.pop().expect("tree decode keeps a leaf");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(std::cmp::Reverse(v));
        }
    }
    let std::cmp::Reverse(a) = leaves.pop().expect("two leaves remain");
    let std::cmp::Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a, b));
    edges
}

/// Union of `k` independent uniform spanning trees on `n` vertices, with
/// duplicate edges dropped. Arboricity is at most `k`, so mad < 2k.
pub fn kforest(k: usize, n: usize, seed: u64) -> Graph {
    assert!(k >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = std::collections::HashSet::new();
    let mut pairs = Vec::new();
    for _ in 0..k {
        for (u, v) in random_tree_edges(n, &mut rng) {
            if seen.insert((u.min(v), u.max(v))) {
                pairs.push((u, v));
            }
        }
    }
    Graph::build(n, &pairs).expect("deduplicated union is simple")
}

/// Random graph of degeneracy at most `k`: vertices are taken in a random
/// order and each connects back to min(i, k) distinct uniformly chosen
/// predecessors. Edge count is exactly k·n − k(k+1)/2 for n > k.
pub fn kdegenerate(k: usize, n: usize, seed: u64) -> Graph {
    assert!(k >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(&mut rng);
    let mut pairs = Vec::new();
    for i in 1..n {
        let back = i.min(k);
        // Sample `back` distinct indices among the i predecessors.
        let mut picked = Vec::with_capacity(back);
        while picked.len() < back {
            let j = rng.random_range(0..i);
            if !picked.contains(&j) {
                picked.push(j);
            }
        }
        for j in picked {
            pairs.push((labels[i], labels[j]));
        }
    }
    Graph::build(n, &pairs).expect("distinct back-edges keep the graph simple")
}

/// Vertex count that makes `kdegenerate(k, n, _)` have at least `m` edges.
pub fn kdegenerate_size_for_edges(k: usize, m: usize) -> usize {
    (m + k * (k + 1) / 2).div_ceil(k).max(k + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sparsity;

    #[test]
    fn deterministic_under_seed() {
        let a = kdegenerate(2, 100, 7);
        let b = kdegenerate(2, 100, 7);
        assert_eq!(a.edges(), b.edges());
        let c = kforest(2, 50, 3);
        let d = kforest(2, 50, 3);
        assert_eq!(c.edges(), d.edges());
        let e = kdegenerate(2, 100, 8);
        assert_ne!(a.edges(), e.edges());
    }

    #[test]
    fn kforest_respects_mad_bound() {
        for k in 1..=3 {
            let g = kforest(k, 60, k as u64);
            let mad = sparsity::mad(&g).unwrap();
            assert!(mad < crate::rational::Ratio::int(2 * k as i128));
        }
    }

    #[test]
    fn kdegenerate_respects_degeneracy_bound() {
        for k in 1..=4 {
            let g = kdegenerate(k, 80, k as u64);
            assert!(sparsity::degeneracy_ordering(&g).degeneracy <= k);
            assert_eq!(g.edge_count(), k * 80 - k * (k + 1) / 2);
        }
    }

    #[test]
    fn tree_is_spanning() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let edges = random_tree_edges(30, &mut rng);
        assert_eq!(edges.len(), 29);
        let g = Graph::build(30, &edges).unwrap();
        assert!((0..30).all(|v| g.degree(v) >= 1));
    }

    #[test]
    fn size_helper_hits_target() {
        for k in [1, 2, 4] {
            for m in [100, 1000, 16384] {
                let n = kdegenerate_size_for_edges(k, m);
                let got = k * n - k * (k + 1) / 2;
                assert!(got >= m && got < m + k + 1);
            }
        }
    }
}
