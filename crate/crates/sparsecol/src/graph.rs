//! Immutable simple graphs with stable edge identifiers.
//!
//! Edge ids are assigned 0..m−1 in input order and adjacency lists keep input
//! order. All downstream determinism (fan building, batch type selection)
//! keys off this order, so both are part of the contract, not an accident of
//! implementation.

use crate::{Error, Result};

/// Simple undirected graph. Vertices are dense integers `0..n`.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>, // (neighbor, edge id), input order
}

/// A subset of edge ids of some parent graph, kept sorted and deduplicated.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeSubset {
    ids: Vec<usize>,
}

impl EdgeSubset {
    pub fn from_ids(mut ids: Vec<usize>) -> EdgeSubset {
        ids.sort_unstable();
        ids.dedup();
        EdgeSubset { ids }
    }

    pub fn ids(&self) -> &[usize] {
        &self.ids
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn contains(&self, id: usize) -> bool {
        self.ids.binary_search(&id).is_ok()
    }

    /// Ids of the parent graph not in this subset.
    pub fn complement(&self, parent_edge_count: usize) -> EdgeSubset {
        let mut out = Vec::with_capacity(parent_edge_count - self.ids.len());
        let mut it = self.ids.iter().peekable();
        for id in 0..parent_edge_count {
            if it.peek() == Some(&&id) {
                it.next();
            } else {
                out.push(id);
            }
        }
        EdgeSubset { ids: out }
    }
}

impl Graph {
    /// Builds a graph from an explicit edge list. Rejects self-loops and
    /// duplicate unordered pairs, naming the offending pair.
    pub fn build(n: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        let mut edges = Vec::with_capacity(pairs.len());
        let mut seen = std::collections::HashSet::with_capacity(pairs.len());
        for &(u, v) in pairs {
            if u >= n {
                return Err(Error::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { u, v });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge { u, v });
            }
            let id = edges.len();
            edges.push((u, v));
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of an edge, in input orientation.
    pub fn ends(&self, edge: usize) -> (usize, usize) {
        self.edges[edge]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `(neighbor, edge id)` pairs in input order.
    pub fn adjacency(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Given an edge and one endpoint, returns the other endpoint.
    pub fn other_end(&self, edge: usize, v: usize) -> usize {
        let (a, b) = self.edges[edge];
        debug_assert!(v == a || v == b);
        if v == a {
            b
        } else {
            a
        }
    }

    /// Edge-induced subgraph on the same vertex set, plus the map from new
    /// edge ids to original ones. Isolated vertices are retained; callers
    /// strip them explicitly.
    pub fn subgraph_of_edges(&self, keep: &EdgeSubset) -> Result<(Graph, Vec<usize>)> {
        if let Some(&id) = keep.ids().iter().find(|&&id| id >= self.edges.len()) {
            return Err(Error::UnknownEdgeId { id });
        }
        let pairs: Vec<(usize, usize)> = keep.ids().iter().map(|&id| self.edges[id]).collect();
        let g = Graph::build(self.n, &pairs)?;
        Ok((g, keep.ids().to_vec()))
    }

    /// Removes all degree-0 vertices. Returns the new graph (edge ids are
    /// unchanged) and the map from new vertex ids to original ones.
    pub fn strip_isolated(&self) -> (Graph, Vec<usize>) {
        let mut new_id = vec![usize::MAX; self.n];
        let mut vmap = Vec::new();
        for v in 0..self.n {
            if !self.adj[v].is_empty() {
                new_id[v] = vmap.len();
                vmap.push(v);
            }
        }
        let pairs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| (new_id[u], new_id[v]))
            .collect();
        let g = Graph::build(vmap.len(), &pairs).expect("re-indexing preserves simplicity");
        (g, vmap)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_triangle() {
        let g = Graph::build(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.max_degree(), 2);
        assert_eq!(g.adjacency(0), &[(1, 0), (2, 2)]);
    }

    #[test]
    fn builds_star() {
        let g = Graph::build(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(g.max_degree(), 3);
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(1), 1);
    }

    #[test]
    fn rejects_duplicate_in_either_orientation() {
        let err = Graph::build(2, &[(0, 1), (1, 0)]).unwrap_err();
        assert!(matches!(err, Error::DuplicateEdge { u: 1, v: 0 }));
    }

    #[test]
    fn rejects_self_loop_and_bad_vertex() {
        assert!(matches!(
            Graph::build(3, &[(1, 1)]),
            Err(Error::SelfLoop { .. })
        ));
        assert!(matches!(
            Graph::build(2, &[(0, 5)]),
            Err(Error::VertexOutOfRange { v: 5, n: 2 })
        ));
    }

    #[test]
    fn degree_sum_is_twice_edge_count() {
        let g = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        let sum: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
        assert_eq!(sum, 2 * g.edge_count());
    }

    #[test]
    fn subgraph_keeps_two_of_three() {
        let g = Graph::build(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let (h, map) = g
            .subgraph_of_edges(&EdgeSubset::from_ids(vec![0, 1]))
            .unwrap();
        assert_eq!(h.edge_count(), 2);
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(map, vec![0, 1]);
        assert_eq!(h.ends(0), g.ends(0));
        assert_eq!(h.ends(1), g.ends(1));
    }

    #[test]
    fn subgraph_identity_and_empty() {
        let g = Graph::build(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let all = EdgeSubset::from_ids((0..3).collect());
        let (h, map) = g.subgraph_of_edges(&all).unwrap();
        assert_eq!(h.edges(), g.edges());
        assert_eq!(map, vec![0, 1, 2]);

        let (e, map) = g.subgraph_of_edges(&EdgeSubset::default()).unwrap();
        assert_eq!(e.vertex_count(), 4);
        assert_eq!(e.edge_count(), 0);
        assert!(map.is_empty());
    }

    #[test]
    fn subgraph_rejects_unknown_id() {
        let g = Graph::build(3, &[(0, 1)]).unwrap();
        assert!(matches!(
            g.subgraph_of_edges(&EdgeSubset::from_ids(vec![7])),
            Err(Error::UnknownEdgeId { id: 7 })
        ));
    }

    #[test]
    fn strip_isolated_variants() {
        let g = Graph::build(5, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let (h, vmap) = g.strip_isolated();
        assert_eq!(h.vertex_count(), 4);
        assert_eq!(h.edge_count(), 3);
        assert_eq!(vmap, vec![0, 1, 2, 3]);

        let (e, vmap) = Graph::build(5, &[]).unwrap().strip_isolated();
        assert_eq!(e.vertex_count(), 0);
        assert!(vmap.is_empty());

        let tri = Graph::build(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let (t, vmap) = tri.strip_isolated();
        assert_eq!(t.edges(), tri.edges());
        assert_eq!(vmap, vec![0, 1, 2]);
    }

    #[test]
    fn complement_partitions_ids() {
        let s = EdgeSubset::from_ids(vec![0, 2, 4]);
        assert_eq!(s.complement(6).ids(), &[1, 3, 5]);
        assert_eq!(EdgeSubset::default().complement(3).ids(), &[0, 1, 2]);
    }
}
