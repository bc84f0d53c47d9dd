//! Degree-splitting edge partition.
//!
//! A (Δ,c)-partition splits E into parts whose induced maximum degrees are
//! exactly c for all but the last part, which lands in [c, 2c), and sum to
//! Δ(G). Coloring each part separately with its own maximum degree and a
//! disjoint palette then recombines into a Δ(G)-coloring. The construction
//! is a single sweep over the degeneracy ordering, assigning each vertex's
//! forward edges greedily up to residual capacity c per part.

use crate::graph::{EdgeSubset, Graph};
use crate::sparsity::degeneracy_ordering;
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct EdgePartition {
    pub parts: Vec<EdgeSubset>,
    pub width: usize,
    /// Set when Δ(G) < c forced the trivial single-part fallback, where the
    /// lower half of the last-part degree window cannot hold.
    pub clamped: bool,
}

/// Computes a (Δ,c)-partition in linear time. Requires `c` at least the
/// degeneracy, which bounds every vertex's backward degree during the sweep
/// and makes the residual capacities well defined.
pub fn delta_c_partition(g: &Graph, c: usize) -> Result<EdgePartition> {
    let ordering = degeneracy_ordering(g);
    if c < ordering.degeneracy {
        return Err(Error::WidthTooSmall {
            c,
            degeneracy: ordering.degeneracy,
        });
    }
    let n = g.vertex_count();
    let delta = g.max_degree();
    let s = delta / c.max(1);
    if s <= 1 {
        // Everything in one part; clamped when even c ≤ Δ fails.
        return Ok(EdgePartition {
            parts: vec![EdgeSubset::from_ids((0..g.edge_count()).collect())],
            width: c,
            clamped: delta < c,
        });
    }

    let mut pos = vec![0usize; n];
    for (i, &v) in ordering.order.iter().enumerate() {
        pos[v] = i;
    }
    // part_degree[v * s + l] = degree of v inside part l so far
    let mut part_degree = vec![0u32; n * s];
    let mut parts: Vec<Vec<usize>> = vec![Vec::new(); s];
    let mut pending: Vec<usize> = Vec::new();

    for &v in &ordering.order {
        // Forward edges go to vertices later in the ordering; backward ones
        // were assigned when the other endpoint was processed.
        pending.clear();
        pending.extend(
            g.adjacency(v)
                .iter()
                .filter(|&&(w, _)| pos[w] > pos[v])
                .map(|&(_, e)| e),
        );
        let mut next = 0usize;
        for l in 0..s - 1 {
            let capacity = c - part_degree[v * s + l] as usize;
            let take = capacity.min(pending.len() - next);
            for _ in 0..take {
                let e = pending[next];
                next += 1;
                parts[l].push(e);
                let (a, b) = g.ends(e);
                part_degree[a * s + l] += 1;
                part_degree[b * s + l] += 1;
            }
        }
        // Overflow lands in the last part.
        for &e in &pending[next..] {
            parts[s - 1].push(e);
            let (a, b) = g.ends(e);
            part_degree[a * s + s - 1] += 1;
            part_degree[b * s + s - 1] += 1;
        }
    }

    Ok(EdgePartition {
        parts: parts.into_iter().map(EdgeSubset::from_ids).collect(),
        width: c,
        clamped: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn star(leaves: usize) -> Graph {
        let pairs: Vec<(usize, usize)> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::build(leaves + 1, &pairs).unwrap()
    }

    fn induced_max_degree(g: &Graph, part: &EdgeSubset) -> usize {
        let mut deg = vec![0usize; g.vertex_count()];
        for &e in part.ids() {
            let (u, v) = g.ends(e);
            deg[u] += 1;
            deg[v] += 1;
        }
        deg.into_iter().max().unwrap_or(0)
    }

    fn check_partition(g: &Graph, p: &EdgePartition) {
        // Disjoint cover.
        let mut all: Vec<usize> = p.parts.iter().flat_map(|s| s.ids().to_vec()).collect();
        all.sort_unstable();
        assert_eq!(all, (0..g.edge_count()).collect::<Vec<_>>());
        if p.clamped {
            return;
        }
        let degrees: Vec<usize> = p.parts.iter().map(|s| induced_max_degree(g, s)).collect();
        // P1 and P2.
        assert_eq!(degrees.iter().sum::<usize>(), g.max_degree());
        let k = degrees.len();
        for &d in &degrees[..k - 1] {
            assert_eq!(d, p.width);
        }
        assert!(p.width <= degrees[k - 1] && degrees[k - 1] < 2 * p.width);
    }

    #[test]
    fn wide_width_gives_single_part() {
        let g = star(3);
        let p = delta_c_partition(&g, 5).unwrap();
        assert_eq!(p.parts.len(), 1);
        assert!(p.clamped);
        assert_eq!(p.parts[0].len(), 3);
    }

    #[test]
    fn star5_with_width_2() {
        let g = star(5);
        let p = delta_c_partition(&g, 2).unwrap();
        check_partition(&g, &p);
        let degrees: Vec<usize> = p.parts.iter().map(|s| induced_max_degree(&g, s)).collect();
        assert_eq!(degrees, vec![2, 3]);
    }

    #[test]
    fn width_below_degeneracy_rejected() {
        let g = Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]).unwrap();
        assert!(matches!(
            delta_c_partition(&g, 2),
            Err(Error::WidthTooSmall { c: 2, degeneracy: 3 })
        ));
    }

    #[test]
    fn max_degree_vertices_saturate_early_parts() {
        let g = star(9);
        let p = delta_c_partition(&g, 3).unwrap();
        check_partition(&g, &p);
        for part in &p.parts[..p.parts.len() - 1] {
            let deg_center = part.ids().iter().filter(|&&e| {
                let (u, v) = g.ends(e);
                u == 0 || v == 0
            });
            assert_eq!(deg_center.count(), 3);
        }
    }

    #[test]
    fn exact_multiple_splits_evenly() {
        let g = star(6);
        let p = delta_c_partition(&g, 2).unwrap();
        check_partition(&g, &p);
        assert_eq!(p.parts.len(), 3);
    }
}
