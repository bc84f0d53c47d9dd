//! Sparsity parameters: degeneracy ordering, exact maximum density, and
//! mad(G) = 2 × maximum density.
//!
//! Densities are exact rationals. The optimum is max over nonempty vertex
//! sets S of |E(S)|/|S|; distinct candidate values are fractions with
//! denominator at most n and so differ by at least 1/n², which lets a binary
//! search over guesses terminate with an exact answer.

use crate::flow::{FlowNetwork, INF};
use crate::graph::Graph;
use crate::rational::{simplest_between, Ratio};
use crate::{Error, Result};

/// Smallest-last vertex ordering together with the degeneracy it witnesses.
#[derive(Clone, Debug)]
pub struct DegeneracyOrdering {
    pub order: Vec<usize>,
    pub degeneracy: usize,
}

/// Maximum density `max_S |E(S)|/|S|` as an exact rational.
pub type Density = Ratio;

/// Computes the degeneracy ordering by repeatedly removing a vertex of
/// minimum degree and reversing the removal sequence. Linear time via bucket
/// queues. After reversal, every vertex has at most `degeneracy` neighbors
/// among its predecessors.
pub fn degeneracy_ordering(g: &Graph) -> DegeneracyOrdering {
    let n = g.vertex_count();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let max_deg = deg.iter().copied().max().unwrap_or(0);

    // bucket[d] holds vertices of current degree d; entries go stale when a
    // degree drops (the vertex is re-pushed lower), so tops are validated
    // before use.
    let mut bucket: Vec<Vec<usize>> = vec![Vec::new(); max_deg + 1];
    for v in 0..n {
        bucket[deg[v]].push(v);
    }
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut degeneracy = 0;
    let mut cursor = 0usize;
    for _ in 0..n {
        // A removal lowers neighbor degrees by one, so the minimum can drop
        // by at most one below the previous cursor.
        cursor = cursor.saturating_sub(1);
        let v = loop {
            while bucket[cursor].is_empty() {
                cursor += 1;
            }
            let v = bucket[cursor].pop().expect("nonempty bucket");
            if !removed[v] && deg[v] == cursor {
                break v;
            }
        };
        removed[v] = true;
        degeneracy = degeneracy.max(cursor);
        order.push(v);
        for &(w, _) in g.adjacency(v) {
            if !removed[w] {
                deg[w] -= 1;
                bucket[deg[w]].push(w);
            }
        }
    }
    order.reverse();
    DegeneracyOrdering { order, degeneracy }
}

/// Greedy peel lower bound: the best |E|/|V| seen over the suffixes of the
/// removal sequence. This is a density of an actual subgraph (so a valid
/// lower bound) and is within a factor 2 of the optimum.
fn peel_density(g: &Graph) -> Ratio {
    let n = g.vertex_count();
    let order = degeneracy_ordering(g).order;
    // order[i] has at most `degeneracy` predecessors; walking the order
    // forward, the suffix starting at i induces the graph after i removals.
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut best = Ratio::new(1, 2);
    let mut edges_remaining = g.edge_count() as i128;
    // Removal order is the reverse of `order`.
    for i in (1..n).rev() {
        let v = order[i];
        let current = Ratio::new(edges_remaining, (i + 1) as i128);
        if current > best {
            best = current;
        }
        let back = g
            .adjacency(v)
            .iter()
            .filter(|&&(w, _)| pos[w] < i)
            .count();
        edges_remaining -= back as i128;
    }
    best
}

/// The t-core: iteratively peels vertices of degree below `t` and returns
/// the surviving subgraph with its vertex map, or nothing if no edge
/// survives.
fn core_restrict(g: &Graph, t: usize) -> Option<(Graph, Vec<usize>)> {
    let n = g.vertex_count();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut queue: Vec<usize> = (0..n).filter(|&v| deg[v] < t).collect();
    while let Some(v) = queue.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &(w, _) in g.adjacency(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] + 1 == t {
                    queue.push(w);
                }
            }
        }
    }
    let mut new_id = vec![usize::MAX; n];
    let mut vmap = Vec::new();
    for v in 0..n {
        if alive[v] {
            new_id[v] = vmap.len();
            vmap.push(v);
        }
    }
    let pairs: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|&&(u, v)| alive[u] && alive[v])
        .map(|&(u, v)| (new_id[u], new_id[v]))
        .collect();
    if pairs.is_empty() {
        return None;
    }
    let core = Graph::build(vmap.len(), &pairs).expect("core keeps the graph simple");
    Some((core, vmap))
}

/// Feasibility test: is there a nonempty S with |E(S)|/|S| > guess?
///
/// A maximum-density subgraph has minimum internal degree above its own
/// density, so any witness lives inside the (⌊guess⌋+1)-core; the flow only
/// ever sees that core. On it, Goldberg's network: source → edge node
/// (capacity q), edge node → both endpoints (∞), vertex → sink (capacity p)
/// for guess p/q. The max flow is q·m − max_S(q·|E(S)| − p·|S|), so a
/// shortfall certifies a denser set, and the source side of the min cut
/// contains a witness.
fn denser_than(g: &Graph, guess: Ratio) -> Option<Vec<usize>> {
    let trace = std::env::var("SPARSECOL_TRACE_FLOW").is_ok();
    let clock = std::time::Instant::now();
    let threshold = (guess.floor() + 1).max(1) as usize;
    let (core, vmap) = core_restrict(g, threshold)?;
    if trace {
        eprintln!("core: {:.1} ms", clock.elapsed().as_secs_f64() * 1e3);
    }
    let n = core.vertex_count();
    let m = core.edge_count();
    let p = guess.numer();
    let q = guess.denom();
    let s = 0;
    let t = 1 + m + n;
    let mut net = FlowNetwork::new(m + n + 2);
    for (j, &(u, v)) in core.edges().iter().enumerate() {
        net.add_arc(s, 1 + j, q);
        net.add_arc(1 + j, 1 + m + u, INF);
        net.add_arc(1 + j, 1 + m + v, INF);
    }
    for v in 0..n {
        net.add_arc(1 + m + v, t, p);
    }
    // Greedy warm start: route each edge node's supply toward the endpoint
    // later in the degeneracy order first. Every vertex is preferred by at
    // most `degeneracy` edges, so when the guess is near the answer this
    // routes almost everything and the solver only patches the remainder.
    // Arc ids follow construction order: arcs 6j, 6j+2, 6j+4 for edge j,
    // then 6m + 2v for vertex v.
    let order = degeneracy_ordering(&core).order;
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut warm = 0i128;
    for (j, &(u, v)) in core.edges().iter().enumerate() {
        let mut remaining = q;
        let later_first = if pos[u] > pos[v] { [u, v] } else { [v, u] };
        for end in later_first {
            if remaining == 0 {
                break;
            }
            let vertex_arc = 6 * m + 2 * end;
            let take = remaining.min(net.residual(vertex_arc));
            if take > 0 {
                let inner_arc = if end == u { 6 * j + 2 } else { 6 * j + 4 };
                net.push_along(&[6 * j, inner_arc, vertex_arc], take);
                warm += take;
                remaining -= take;
            }
        }
    }
    if trace {
        eprintln!("built+warm: {:.1} ms", clock.elapsed().as_secs_f64() * 1e3);
    }
    let flow = warm + net.max_flow(s, t);
    if trace {
        eprintln!(
            "solved: {:.1} ms (warm {warm}, residual demand {})",
            clock.elapsed().as_secs_f64() * 1e3,
            q * m as i128 - warm
        );
    }
    debug_assert!(flow <= q * m as i128);
    if flow == q * m as i128 {
        return None;
    }
    let reach = net.residual_reachable(s);
    let witness: Vec<usize> = (0..n).filter(|&v| reach[1 + m + v]).map(|v| vmap[v]).collect();
    debug_assert!(!witness.is_empty());
    Some(witness)
}

fn density_of_set(g: &Graph, set: &[usize]) -> Ratio {
    let mut member = vec![false; g.vertex_count()];
    for &v in set {
        member[v] = true;
    }
    let inside = g
        .edges()
        .iter()
        .filter(|&&(u, v)| member[u] && member[v])
        .count();
    Ratio::new(inside as i128, set.len() as i128)
}

/// Exact maximum density of a graph with at least one edge.
///
/// Binary search over guesses with the flow feasibility test. The lower
/// bound is always a density achieved by a concrete vertex set (the peel
/// bound initially, then min-cut witnesses), so once the test at `lo` fails
/// the answer is `lo` itself, verified by that one test. If the interval
/// ever shrinks below 1/n² the unique representable fraction inside it is
/// taken instead.
pub fn max_density(g: &Graph) -> Result<Density> {
    if g.edge_count() == 0 {
        return Err(Error::EdgelessGraph);
    }
    let n = g.vertex_count() as i128;
    let peel = peel_density(g);
    let degen = degeneracy_ordering(g).degeneracy;
    let mut lo = peel; // achieved by a subgraph
    let mut hi = (Ratio::int(2) * peel).min(Ratio::int(degen as i128)).max(lo);
    let resolution = Ratio::new(1, n * n);
    loop {
        match denser_than(g, lo) {
            None => return Ok(lo),
            Some(witness) => {
                let witnessed = density_of_set(g, &witness);
                debug_assert!(witnessed > lo);
                lo = witnessed;
            }
        }
        if hi - lo < resolution {
            // The optimum lies in [lo, hi] and has denominator ≤ n, and the
            // interval admits only one such fraction: the simplest one.
            let candidate = simplest_between(lo, hi);
            debug_assert!(denser_than(g, candidate).is_none());
            return Ok(candidate);
        }
        // Probe the simplest fraction in the middle third so guess
        // denominators stay proportional to 1/(hi − lo).
        let third = (hi - lo) * Ratio::new(1, 3);
        let mid = simplest_between(lo + third, hi - third);
        match denser_than(g, mid) {
            Some(witness) => {
                let witnessed = density_of_set(g, &witness);
                debug_assert!(witnessed > mid);
                lo = witnessed;
            }
            None => hi = mid,
        }
    }
}

/// Maximum average degree: exactly twice the maximum density.
pub fn mad(g: &Graph) -> Result<Density> {
    Ok(Ratio::int(2) * max_density(g)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn cycle(n: usize) -> Graph {
        let pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::build(n, &pairs).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                pairs.push((u, v));
            }
        }
        Graph::build(n, &pairs).unwrap()
    }

    fn path(n: usize) -> Graph {
        let pairs: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::build(n, &pairs).unwrap()
    }

    fn petersen() -> Graph {
        let mut pairs = Vec::new();
        for i in 0..5 {
            pairs.push((i, (i + 1) % 5)); // outer cycle
            pairs.push((i, i + 5)); // spokes
            pairs.push((i + 5, (i + 2) % 5 + 5)); // pentagram
        }
        Graph::build(10, &pairs).unwrap()
    }

    #[test]
    fn ordering_is_valid_and_tight() {
        for (g, expect) in [
            (path(7), 1),
            (cycle(6), 2),
            (complete(5), 4),
            (petersen(), 3),
        ] {
            let d = degeneracy_ordering(&g);
            assert_eq!(d.degeneracy, expect);
            // Single scan: each vertex has at most k predecessors among its
            // neighbors.
            let mut pos = vec![0usize; g.vertex_count()];
            for (i, &v) in d.order.iter().enumerate() {
                pos[v] = i;
            }
            for v in 0..g.vertex_count() {
                let back = g
                    .adjacency(v)
                    .iter()
                    .filter(|&&(w, _)| pos[w] < pos[v])
                    .count();
                assert!(back <= d.degeneracy);
            }
        }
    }

    #[test]
    fn density_of_cliques_and_cycles() {
        assert_eq!(max_density(&complete(4)).unwrap(), Ratio::new(3, 2));
        assert_eq!(max_density(&cycle(5)).unwrap(), Ratio::int(1));
    }

    #[test]
    fn density_of_path4_matches_enumeration() {
        // Brute force over all 2^4 − 1 subsets gives 3/4 for the whole path.
        let g = path(4);
        let mut best = Ratio::new(0, 1);
        for mask in 1u32..16 {
            let set: Vec<usize> = (0..4).filter(|&v| mask >> v & 1 == 1).collect();
            let d = density_of_set(&g, &set);
            if d > best {
                best = d;
            }
        }
        assert_eq!(best, Ratio::new(3, 4));
        assert_eq!(max_density(&g).unwrap(), Ratio::new(3, 4));
    }

    #[test]
    fn mad_values() {
        assert_eq!(mad(&petersen()).unwrap(), Ratio::int(3));
        assert_eq!(mad(&complete(4)).unwrap(), Ratio::int(3));
        assert_eq!(mad(&path(4)).unwrap(), Ratio::new(3, 2));
    }

    #[test]
    fn edgeless_is_rejected() {
        let g = Graph::build(5, &[]).unwrap();
        assert!(matches!(max_density(&g), Err(Error::EdgelessGraph)));
    }

    #[test]
    fn regular_graphs_have_mad_equal_degree() {
        for g in [cycle(8), petersen(), complete(6)] {
            let d = g.degree(0);
            assert_eq!(mad(&g).unwrap(), Ratio::int(d as i128));
        }
    }

    #[test]
    fn degeneracy_at_most_mad() {
        for g in [path(9), cycle(7), complete(5), petersen()] {
            let k = degeneracy_ordering(&g).degeneracy;
            assert!(Ratio::int(k as i128) <= mad(&g).unwrap());
        }
    }

    #[test]
    fn dense_plus_pendant() {
        // K5 with a pendant path: densest subgraph is the K5 itself.
        let mut pairs = Vec::new();
        for u in 0..5 {
            for v in (u + 1)..5 {
                pairs.push((u, v));
            }
        }
        pairs.push((4, 5));
        pairs.push((5, 6));
        let g = Graph::build(7, &pairs).unwrap();
        assert_eq!(max_density(&g).unwrap(), Ratio::int(2));
    }
}
