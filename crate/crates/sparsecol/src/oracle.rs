//! Brute-force reference implementations.
//!
//! These are the ground truth the fast paths are tested against: a full
//! coloring validator, the exact chromatic index by backtracking, and the
//! exact maximum average degree by subset enumeration. Deliberately
//! independent of the production code paths they check.

use crate::coloring::{Color, PartialColoring};
use crate::graph::Graph;
use crate::rational::Ratio;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Two edges at `vertex` carry the same color.
    Conflict {
        vertex: usize,
        color: Color,
        edges: Vec<usize>,
    },
    Uncolored { edge: usize },
    OutOfPalette { edge: usize, color: Color },
}

#[derive(Clone, Debug)]
pub struct ValidationOutcome {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

/// Checks a total coloring (slice indexed by edge id, 0 meaning uncolored)
/// against palette 1..=d. Reports every violation, not just the first.
pub fn validate_coloring(g: &Graph, colors: &[Color], d: usize) -> ValidationOutcome {
    let mut violations = Vec::new();
    for (e, &c) in colors.iter().enumerate() {
        if c == 0 {
            violations.push(Violation::Uncolored { edge: e });
        } else if c as usize > d {
            violations.push(Violation::OutOfPalette { edge: e, color: c });
        }
    }
    // Group by (vertex, color) over valid colors.
    let mut at_vertex: Vec<Vec<(Color, usize)>> = vec![Vec::new(); g.vertex_count()];
    for (e, &c) in colors.iter().enumerate() {
        if c != 0 && (c as usize) <= d {
            let (u, v) = g.ends(e);
            at_vertex[u].push((c, e));
            at_vertex[v].push((c, e));
        }
    }
    for (vertex, list) in at_vertex.iter_mut().enumerate() {
        list.sort_unstable();
        let mut i = 0;
        while i < list.len() {
            let mut j = i + 1;
            while j < list.len() && list[j].0 == list[i].0 {
                j += 1;
            }
            if j - i > 1 {
                violations.push(Violation::Conflict {
                    vertex,
                    color: list[i].0,
                    edges: list[i..j].iter().map(|&(_, e)| e).collect(),
                });
            }
            i = j;
        }
    }
    ValidationOutcome {
        ok: violations.is_empty(),
        violations,
    }
}

/// Validates a state as a total coloring of its graph.
pub fn validate_state(g: &Graph, s: &PartialColoring) -> ValidationOutcome {
    let colors: Vec<Color> = (0..s.edge_count())
        .map(|e| s.color_of(e).unwrap_or(0))
        .collect();
    validate_coloring(g, &colors, s.palette())
}

const CHI_EDGE_LIMIT: usize = 40;
const CHI_DEGREE_LIMIT: usize = 8;

/// Exact chromatic index by backtracking, for desk-scale graphs
/// (m ≤ 40, Δ ≤ 8).
///
/// Edges are tried in degree-descending order; the first edge is pinned to
/// color 1 and each new color may only be introduced in increasing order.
/// A branch dies as soon as some endpoint has fewer free colors than
/// uncolored incident edges.
pub fn brute_chromatic_index(g: &Graph) -> Result<usize> {
    let m = g.edge_count();
    if m == 0 {
        return Ok(0);
    }
    if m > CHI_EDGE_LIMIT {
        return Err(Error::OracleLimit {
            what: "edge count for the chromatic-index oracle",
            limit: CHI_EDGE_LIMIT,
        });
    }
    let delta = g.max_degree();
    if delta > CHI_DEGREE_LIMIT {
        return Err(Error::OracleLimit {
            what: "maximum degree for the chromatic-index oracle",
            limit: CHI_DEGREE_LIMIT,
        });
    }

    let mut order: Vec<usize> = (0..m).collect();
    let weight = |e: usize| {
        let (u, v) = g.ends(e);
        let (a, b) = (g.degree(u).max(g.degree(v)), g.degree(u).min(g.degree(v)));
        (std::cmp::Reverse(a), std::cmp::Reverse(b), e)
    };
    order.sort_by_key(|&e| weight(e));

    for k in delta..=delta + 1 {
        let mut used = vec![0u16; g.vertex_count()];
        let mut remaining: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
        if colorable(g, &order, 0, k, 0, &mut used, &mut remaining) {
            return Ok(k);
        }
    }
    unreachable!("Δ+1 colors always suffice");
}

fn colorable(
    g: &Graph,
    order: &[usize],
    at: usize,
    k: usize,
    max_used: usize,
    used: &mut [u16],
    remaining: &mut [usize],
) -> bool {
    if at == order.len() {
        return true;
    }
    let e = order[at];
    let (u, v) = g.ends(e);
    let cap = k.min(max_used + 1);
    for c in 1..=cap {
        let bit = 1u16 << c;
        if used[u] & bit != 0 || used[v] & bit != 0 {
            continue;
        }
        used[u] |= bit;
        used[v] |= bit;
        remaining[u] -= 1;
        remaining[v] -= 1;
        let feasible = [u, v].iter().all(|&w| {
            let free = k - (used[w].count_ones() as usize);
            free >= remaining[w]
        });
        if feasible && colorable(g, order, at + 1, k, max_used.max(c), used, remaining) {
            return true;
        }
        used[u] &= !bit;
        used[v] &= !bit;
        remaining[u] += 1;
        remaining[v] += 1;
    }
    false
}

const MAD_VERTEX_LIMIT: usize = 15;

/// Exact mad by enumerating all nonempty vertex subsets (n ≤ 15), counting
/// inside-edges incrementally along a Gray code so each step toggles one
/// vertex.
pub fn brute_mad(g: &Graph) -> Result<Ratio> {
    let n = g.vertex_count();
    if n > MAD_VERTEX_LIMIT {
        return Err(Error::OracleLimit {
            what: "vertex count for the mad oracle",
            limit: MAD_VERTEX_LIMIT,
        });
    }
    if g.edge_count() == 0 {
        return Err(Error::EdgelessGraph);
    }
    let adj_mask: Vec<u16> = (0..n)
        .map(|v| {
            g.adjacency(v)
                .iter()
                .fold(0u16, |mask, &(w, _)| mask | (1 << w))
        })
        .collect();

    let mut members = 0u16;
    let mut inside = 0i128;
    let mut size = 0i128;
    let mut best = (0i128, 1i128); // numerator, denominator of |E(S)|/|S|
    let mut prev_gray = 0u16;
    for i in 1u32..(1 << n) {
        let gray = (i ^ (i >> 1)) as u16;
        let flipped = (gray ^ prev_gray).trailing_zeros() as usize;
        prev_gray = gray;
        let inc = gray >> flipped & 1 == 1;
        if inc {
            inside += (adj_mask[flipped] & members).count_ones() as i128;
            members |= 1 << flipped;
            size += 1;
        } else {
            members &= !(1 << flipped);
            inside -= (adj_mask[flipped] & members).count_ones() as i128;
            size -= 1;
        }
        if size > 0 && inside * best.1 > best.0 * size {
            best = (inside, size);
        }
    }
    Ok(Ratio::int(2) * Ratio::new(best.0, best.1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::sparsity;

    fn cycle(n: usize) -> Graph {
        let pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::build(n, &pairs).unwrap()
    }

    fn petersen() -> Graph {
        let mut pairs = Vec::new();
        for i in 0..5 {
            pairs.push((i, (i + 1) % 5));
            pairs.push((i, i + 5));
            pairs.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::build(10, &pairs).unwrap()
    }

    #[test]
    fn validator_accepts_proper_star() {
        let g = Graph::build(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let outcome = validate_coloring(&g, &[1, 2, 3], 3);
        assert!(outcome.ok);
    }

    #[test]
    fn validator_reports_each_kind() {
        let g = Graph::build(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let outcome = validate_coloring(&g, &[1, 1, 9], 3);
        assert!(!outcome.ok);
        assert!(outcome.violations.contains(&Violation::OutOfPalette {
            edge: 2,
            color: 9
        }));
        assert!(outcome
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Conflict { vertex: 0, color: 1, edges } if edges == &[0, 1])));

        let partial = validate_coloring(&g, &[1, 0, 2], 3);
        assert_eq!(partial.violations, vec![Violation::Uncolored { edge: 1 }]);
    }

    #[test]
    fn validator_is_color_name_invariant() {
        let g = cycle(6);
        let colors = [1, 2, 1, 2, 1, 2];
        let relabeled = [2, 1, 2, 1, 2, 1];
        assert!(validate_coloring(&g, &colors, 2).ok);
        assert!(validate_coloring(&g, &relabeled, 2).ok);
    }

    #[test]
    fn chromatic_index_of_cycles() {
        assert_eq!(brute_chromatic_index(&cycle(4)).unwrap(), 2);
        assert_eq!(brute_chromatic_index(&cycle(5)).unwrap(), 3);
    }

    #[test]
    fn chromatic_index_of_petersen_is_four() {
        assert_eq!(brute_chromatic_index(&petersen()).unwrap(), 4);
    }

    #[test]
    fn chromatic_oracle_rejects_oversize() {
        let big = crate::weak::strong_graph(3).unwrap();
        assert!(matches!(
            brute_chromatic_index(&big),
            Err(Error::OracleLimit { .. })
        ));
    }

    #[test]
    fn brute_mad_matches_flow_mad() {
        let graphs = [cycle(5), cycle(8), petersen()];
        for g in &graphs {
            assert_eq!(brute_mad(g).unwrap(), sparsity::mad(g).unwrap());
        }
        let path4 = Graph::build(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(brute_mad(&path4).unwrap(), Ratio::new(3, 2));
    }

    #[test]
    fn brute_mad_limits() {
        let big = crate::weak::strong_graph(3).unwrap();
        assert!(matches!(brute_mad(&big), Err(Error::OracleLimit { .. })));
    }
}
