//! Top-level coloring drivers.
//!
//! The recursion peels off the weak edges of the current level, colors the
//! rest recursively, then colors the peeled edges one at a time. Weak edges
//! are a constant fraction of every level whenever Δ ≥ 2·ad, so levels
//! shrink geometrically. Two regimes finish a level: the randomized one
//! colors a uniformly random pending edge with a uniformly random free path
//! color, which keeps expected alternating-path lengths short; the
//! deterministic one repeatedly extracts a batch of pairwise non-interacting
//! edges of one path type and colors the whole batch.
//!
//! The outer driver trades the Δ dependence for a mad dependence: it splits
//! the edges into a (Δ,c)-partition with c = ⌈2·mad⌉, colors every part with
//! its own maximum degree as palette on a disjoint color range, and merges.

use crate::coloring::{Color, PartialColoring};
use crate::fan::{self, PathType};
use crate::graph::Graph;
use crate::partition::delta_c_partition;
use crate::rational::Ratio;
use crate::sparsity;
use crate::weak::weak_edges;
use crate::{Error, Result};
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::time::Instant;

/// Scheduling regime. The seed exists only in randomized mode; deterministic
/// runs are bit-identical across processes by construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Randomized { seed: u64 },
    Deterministic,
}

impl Mode {
    pub fn seed(&self) -> Option<u64> {
        match *self {
            Mode::Randomized { seed } => Some(seed),
            Mode::Deterministic => None,
        }
    }
}

/// How many colors the driver may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PalettePolicy {
    /// Exactly Δ colors; rejected unless Δ ≥ 2·mad.
    ExactDelta,
    /// Δ + 1 colors, single component, no precondition.
    DeltaPlusOne,
    /// Δ when the precondition holds, Δ + 1 otherwise.
    Auto,
}

#[derive(Clone, Copy, Debug)]
pub struct RunConfig {
    pub mode: Mode,
    pub policy: PalettePolicy,
    /// Record per-batch and per-level detail in the report.
    pub instrument: bool,
}

impl RunConfig {
    pub fn deterministic() -> RunConfig {
        RunConfig {
            mode: Mode::Deterministic,
            policy: PalettePolicy::Auto,
            instrument: true,
        }
    }

    pub fn randomized(seed: u64) -> RunConfig {
        RunConfig {
            mode: Mode::Randomized { seed },
            policy: PalettePolicy::Auto,
            instrument: true,
        }
    }
}

/// Which palette the run resolved to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    ExactDelta { c: usize },
    DeltaPlusOne,
}

/// One deterministic batch: counts for the pending pool, the same-type
/// slice, the non-interacting set, the second conflict graph, and the edges
/// actually colored.
#[derive(Clone, Copy, Debug)]
pub struct CnBatchStats {
    pub pending: usize,
    pub taken: usize,
    pub independent: usize,
    pub q_prime_edges: usize,
    pub colored: usize,
    pub path_edges: usize,
}

/// Per-component run record.
#[derive(Clone, Debug)]
pub struct ComponentReport {
    pub part: usize,
    pub palette: usize,
    pub offset: usize,
    pub depth: usize,
    /// Weak-edge count per recursion level, outermost first.
    pub level_uncolored: Vec<usize>,
    pub total_path_length: u64,
    pub cn_iterations: u64,
    pub cn_batches: Vec<CnBatchStats>,
}

/// Whole-run record.
#[derive(Clone, Debug)]
pub struct ColoringReport {
    pub mode: Mode,
    pub route: Route,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub mad: Ratio,
    pub components: Vec<ComponentReport>,
    pub recursion_depth: usize,
    pub total_path_length: u64,
    pub cn_iterations: u64,
    pub palette_total: usize,
    pub colors_used: usize,
    pub wall_ms: f64,
}

enum Driver {
    Randomized(ChaCha8Rng),
    Deterministic,
}

#[derive(Default)]
struct RecStats {
    depth: usize,
    level_uncolored: Vec<usize>,
    path_length: u64,
    cn_iterations: u64,
    cn_batches: Vec<CnBatchStats>,
}

/// Colors every edge of `g` with palette `d ≥ Δ(g)`, recursing on the
/// non-weak edges first. Isolated vertices are stripped per level; edge ids
/// of the result refer to `g`.
pub fn color_component_recursive(
    g: &Graph,
    d: usize,
    cfg: &RunConfig,
) -> Result<(PartialColoring, ComponentReport)> {
    let mut driver = match cfg.mode {
        Mode::Randomized { seed } => Driver::Randomized(ChaCha8Rng::seed_from_u64(seed)),
        Mode::Deterministic => Driver::Deterministic,
    };
    let (colors, stats) = color_rec(g, d, &mut driver, cfg.instrument)?;
    let mut state = PartialColoring::new(g, d.max(1))?;
    for (e, c) in colors.iter().enumerate() {
        state.assign(e, *c)?;
    }
    Ok((
        state,
        ComponentReport {
            part: 0,
            palette: d,
            offset: 0,
            depth: stats.depth,
            level_uncolored: stats.level_uncolored,
            total_path_length: stats.path_length,
            cn_iterations: stats.cn_iterations,
            cn_batches: stats.cn_batches,
        },
    ))
}

fn color_rec(
    g: &Graph,
    d: usize,
    driver: &mut Driver,
    instrument: bool,
) -> Result<(Vec<Color>, RecStats)> {
    if g.edge_count() == 0 {
        return Ok((Vec::new(), RecStats::default()));
    }
    let (gs, _) = g.strip_isolated();
    let (ew, verdicts) = weak_edges(&gs, d);
    if ew.is_empty() {
        return Err(Error::NoWeakEdges);
    }

    let mut stats = RecStats::default();
    let mut state = PartialColoring::new(&gs, d)?;

    let keep = ew.complement(gs.edge_count());
    if !keep.is_empty() {
        let (h, emap) = gs.subgraph_of_edges(&keep)?;
        let (child_colors, child_stats) = color_rec(&h, d, driver, instrument)?;
        for (e, &c) in child_colors.iter().enumerate() {
            state.assign(emap[e], c)?;
        }
        stats = child_stats;
    }

    // Pending weak edges with their designated fan centers, edge-id order.
    let mut pending: Vec<(usize, usize)> = verdicts
        .iter()
        .map(|v| (v.edge, v.designated.expect("weak edges carry an endpoint")))
        .collect();
    let level_weak = pending.len();
    let mut path_length = 0u64;
    let mut cn_iterations = 0u64;
    let mut batches = Vec::new();

    match driver {
        Driver::Randomized(rng) => {
            while !pending.is_empty() {
                let pick = rng.random_range(0..pending.len());
                let (edge, x) = pending.swap_remove(pick);
                let free: Vec<Color> = state.free_colors(x).collect();
                let forced = free[rng.random_range(0..free.len())];
                let report = fan::color_weak_edge(&gs, &mut state, edge, x, Some(forced))?;
                path_length += report.path_len() as u64;
            }
        }
        Driver::Deterministic => {
            while !pending.is_empty() {
                let batch = cn_batch(&gs, &mut state, &mut pending)?;
                cn_iterations += 1;
                path_length += batch.path_edges as u64;
                if instrument {
                    batches.push(batch);
                }
            }
        }
    }

    debug_assert_eq!(state.colored_count(), gs.edge_count());
    let colors: Vec<Color> = (0..gs.edge_count())
        .map(|e| state.color_of(e).expect("recursion colors every edge"))
        .collect();

    stats.depth += 1;
    stats.level_uncolored.insert(0, level_weak);
    stats.path_length += path_length;
    stats.cn_iterations += cn_iterations;
    let mut all_batches = batches;
    all_batches.append(&mut stats.cn_batches);
    stats.cn_batches = all_batches;
    Ok((colors, stats))
}

/// One deterministic batch: determines every pending edge's path type,
/// takes ⌈ℓ/D²⌉ edges of the most common type, drops pairs whose fan
/// centers have intersecting closed neighborhoods (greedy maximal
/// independent set in edge-id order), then for a nonempty type walks the
/// pairwise disjoint alternating paths and keeps an independent set of the
/// path-endpoint conflict graph by repeatedly taking a vertex of degree ≤ 2
/// there. Everything kept is colored with the type's center-free color; a
/// type that changed since precomputation aborts the batch loudly.
///
/// Colors at least max(1, ⌈ℓ/(9·D⁵)⌉) edges per invocation.
pub fn cn_batch(
    g: &Graph,
    state: &mut PartialColoring,
    pending: &mut Vec<(usize, usize)>,
) -> Result<CnBatchStats> {
    let d = state.palette();
    let ell = pending.len();
    debug_assert!(ell > 0);

    let mut types = Vec::with_capacity(ell);
    for &(edge, x) in pending.iter() {
        types.push(fan::determine_path_type(g, state, edge, x)?);
    }

    // Majority type; ties resolve to the smallest key with ∅ first.
    let mut counts: BTreeMap<Option<(Color, Color)>, usize> = BTreeMap::new();
    for t in &types {
        *counts.entry(t.key()).or_default() += 1;
    }
    let (&majority, &majority_count) = counts
        .iter()
        .max_by_key(|&(_, &count)| count)
        .expect("nonempty pool");
    let quota = ell.div_ceil(d * d);
    debug_assert!(majority_count >= quota, "type classes cover the pool");
    let take = quota.min(majority_count);

    let members: Vec<usize> = (0..ell)
        .filter(|&i| types[i].key() == majority)
        .take(take)
        .collect();

    // Greedy maximal independent set under "closed neighborhoods of the
    // centers intersect". `owner` remembers which chosen members cover a
    // vertex, for the path-endpoint pass below.
    let mut marked = vec![false; g.vertex_count()];
    let mut owner: HashMap<usize, Vec<usize>> = HashMap::new();
    let mut chosen: Vec<usize> = Vec::new();
    for &mi in &members {
        let x = pending[mi].1;
        let closed = std::iter::once(x).chain(g.adjacency(x).iter().map(|&(w, _)| w));
        if closed.clone().any(|v| marked[v]) {
            continue;
        }
        let ci = chosen.len();
        chosen.push(mi);
        for v in closed {
            marked[v] = true;
            owner.entry(v).or_default().push(ci);
        }
    }

    let mut q_prime_edges = 0usize;
    let mut path_edges = 0usize;
    let selected: Vec<usize> = if majority.is_none() {
        chosen.clone()
    } else {
        // Walk the (a, b)-paths of the chosen edges; same-type maximal paths
        // are pairwise edge-disjoint, which the batch verifies outright.
        let (a, b) = majority.expect("nonempty type");
        let mut seen_edges: HashMap<usize, ()> = HashMap::new();
        let mut far_ends = Vec::with_capacity(chosen.len());
        for &mi in &chosen {
            let x = pending[mi].1;
            let path = state.walk_alternating(x, a, b)?;
            for &e in &path.edges {
                if seen_edges.insert(e, ()).is_some() {
                    return Err(Error::PathOverlap { edge: e });
                }
            }
            path_edges += path.len();
            far_ends.push(path.end);
        }
        // Conflict when a path ends in the closed neighborhood of another
        // chosen center.
        let mut conflicts: BTreeSet<(usize, usize)> = BTreeSet::new();
        for (ci, &w) in far_ends.iter().enumerate() {
            if let Some(owners) = owner.get(&w) {
                for &cj in owners {
                    if cj != ci {
                        conflicts.insert((ci.min(cj), ci.max(cj)));
                    }
                }
            }
        }
        q_prime_edges = conflicts.len();
        let mut degree = vec![0usize; chosen.len()];
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); chosen.len()];
        for &(i, j) in &conflicts {
            degree[i] += 1;
            degree[j] += 1;
            adj[i].push(j);
            adj[j].push(i);
        }
        let mut discarded = vec![false; chosen.len()];
        let mut kept = Vec::new();
        for ci in 0..chosen.len() {
            if degree[ci] <= 2 && !discarded[ci] {
                kept.push(chosen[ci]);
                for &cj in &adj[ci] {
                    discarded[cj] = true;
                }
            }
        }
        kept
    };

    // Color the survivors, re-deriving each type first: interaction-freedom
    // promises stability, so any drift is a broken invariant, not a
    // recoverable condition.
    let mut colored = 0usize;
    for &mi in &selected {
        let (edge, x) = pending[mi];
        let now = fan::determine_path_type(g, state, edge, x)?;
        if now != types[mi] {
            return Err(Error::TypeMismatch { edge });
        }
        let forced = match now {
            PathType::Empty => None,
            PathType::Pair { free_at_center, .. } => Some(free_at_center),
        };
        let report = fan::color_weak_edge(g, state, edge, x, forced)?;
        path_edges += report.path_len();
        colored += 1;
    }
    pending.retain(|&(e, _)| state.color_of(e).is_none());

    let bound = progress_floor(ell, d);
    debug_assert!(
        colored >= bound,
        "batch colored {colored} < guaranteed {bound} of {ell}"
    );
    Ok(CnBatchStats {
        pending: ell,
        taken: members.len(),
        independent: chosen.len(),
        q_prime_edges,
        colored,
        path_edges,
    })
}

/// ⌈ℓ / (9·D⁵)⌉, at least 1: the per-batch progress guarantee.
pub fn progress_floor(ell: usize, d: usize) -> usize {
    let denom = 9u128 * (d as u128).pow(5);
    let bound = (ell as u128).div_ceil(denom) as usize;
    bound.max(1)
}

/// Colors the whole graph, resolving the palette policy, partitioning, and
/// merging per-part colorings over disjoint color ranges.
pub fn color_graph(g: &Graph, cfg: &RunConfig) -> Result<(Vec<Color>, ColoringReport)> {
    let start = Instant::now();
    let n = g.vertex_count();
    let m = g.edge_count();
    let delta = g.max_degree();

    if m == 0 {
        return Ok((
            Vec::new(),
            ColoringReport {
                mode: cfg.mode,
                route: Route::DeltaPlusOne,
                n,
                m,
                delta,
                mad: Ratio::int(0),
                components: Vec::new(),
                recursion_depth: 0,
                total_path_length: 0,
                cn_iterations: 0,
                palette_total: 0,
                colors_used: 0,
                wall_ms: start.elapsed().as_secs_f64() * 1e3,
            },
        ));
    }

    let mad = sparsity::mad(g)?;
    let twice_mad = Ratio::int(2) * mad;
    let precondition = Ratio::int(delta as i128) >= twice_mad;
    let route = match cfg.policy {
        PalettePolicy::ExactDelta => {
            if !precondition {
                return Err(Error::PaletteTooSmall {
                    delta,
                    mad,
                    twice_mad,
                });
            }
            Route::ExactDelta {
                c: twice_mad.ceil() as usize,
            }
        }
        PalettePolicy::Auto if precondition => Route::ExactDelta {
            c: twice_mad.ceil() as usize,
        },
        _ => Route::DeltaPlusOne,
    };

    // Per-component seeds come off a master stream so components could be
    // colored concurrently without changing the result.
    let mut master = match cfg.mode {
        Mode::Randomized { seed } => Some(ChaCha8Rng::seed_from_u64(seed)),
        Mode::Deterministic => None,
    };
    let mut component_cfg = |idx: usize| RunConfig {
        mode: match &mut master {
            Some(rng) => Mode::Randomized {
                seed: rng.next_u64() ^ idx as u64,
            },
            None => Mode::Deterministic,
        },
        ..*cfg
    };

    let mut total: Vec<Color> = vec![0; m];
    let mut components = Vec::new();
    let palette_total;

    match route {
        Route::ExactDelta { c } => {
            let partition = delta_c_partition(g, c)?;
            debug_assert!(!partition.clamped, "Δ ≥ 2·mad implies Δ ≥ c");
            let mut offset = 0usize;
            for (idx, part) in partition.parts.iter().enumerate() {
                let (h, emap) = g.subgraph_of_edges(part)?;
                let width = h.max_degree();
                let sub_cfg = component_cfg(idx);
                let (state, mut report) = color_component_recursive(&h, width, &sub_cfg)?;
                for e in 0..h.edge_count() {
                    let color = state.color_of(e).expect("component fully colored");
                    total[emap[e]] = color + offset as Color;
                }
                report.part = idx;
                report.offset = offset;
                components.push(report);
                offset += width;
            }
            debug_assert_eq!(offset, delta, "part degrees sum to the maximum degree");
            palette_total = offset;
        }
        Route::DeltaPlusOne => {
            let width = delta + 1;
            let sub_cfg = component_cfg(0);
            let (state, mut report) = color_component_recursive(g, width, &sub_cfg)?;
            for (e, slot) in total.iter_mut().enumerate() {
                *slot = state.color_of(e).expect("component fully colored");
            }
            report.part = 0;
            components.push(report);
            palette_total = width;
        }
    }

    let colors_used = {
        let mut seen = vec![false; palette_total + 1];
        let mut count = 0;
        for &c in &total {
            if !seen[c as usize] {
                seen[c as usize] = true;
                count += 1;
            }
        }
        count
    };
    let report = ColoringReport {
        mode: cfg.mode,
        route,
        n,
        m,
        delta,
        mad,
        recursion_depth: components.iter().map(|c| c.depth).max().unwrap_or(0),
        total_path_length: components.iter().map(|c| c.total_path_length).sum(),
        cn_iterations: components.iter().map(|c| c.cn_iterations).sum(),
        palette_total,
        colors_used,
        wall_ms: start.elapsed().as_secs_f64() * 1e3,
        components,
    };
    Ok((total, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::oracle;

    fn star(leaves: usize) -> Graph {
        let pairs: Vec<(usize, usize)> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::build(leaves + 1, &pairs).unwrap()
    }

    #[test]
    fn star5_exact_delta_single_level() {
        let g = star(5);
        let cfg = RunConfig {
            policy: PalettePolicy::ExactDelta,
            ..RunConfig::deterministic()
        };
        let (colors, report) = color_graph(&g, &cfg).unwrap();
        assert!(oracle::validate_coloring(&g, &colors, 5).ok);
        assert_eq!(report.palette_total, 5);
        assert_eq!(report.recursion_depth, 1);
        assert_eq!(report.components[0].level_uncolored, vec![5]);
    }

    #[test]
    fn delta_plus_one_is_single_recursion_level() {
        let g = crate::weak::strong_graph(3).unwrap();
        let cfg = RunConfig {
            policy: PalettePolicy::DeltaPlusOne,
            ..RunConfig::deterministic()
        };
        let (colors, report) = color_graph(&g, &cfg).unwrap();
        assert_eq!(report.recursion_depth, 1);
        assert_eq!(report.palette_total, 7);
        assert!(oracle::validate_coloring(&g, &colors, 7).ok);
    }

    #[test]
    fn exact_delta_rejects_strong_graph() {
        let g = crate::weak::strong_graph(3).unwrap();
        let cfg = RunConfig {
            policy: PalettePolicy::ExactDelta,
            ..RunConfig::deterministic()
        };
        match color_graph(&g, &cfg) {
            Err(Error::PaletteTooSmall {
                delta,
                twice_mad,
                ..
            }) => {
                assert_eq!(delta, 6);
                assert_eq!(twice_mad, Ratio::new(48, 5));
            }
            other => panic!("expected precondition failure, got {other:?}"),
        }
    }

    #[test]
    fn auto_falls_back_to_delta_plus_one() {
        let g = crate::weak::strong_graph(3).unwrap();
        let (colors, report) = color_graph(&g, &RunConfig::deterministic()).unwrap();
        assert_eq!(report.route, Route::DeltaPlusOne);
        assert!(oracle::validate_coloring(&g, &colors, 7).ok);
    }

    #[test]
    fn empty_graph_is_fine() {
        let g = Graph::build(4, &[]).unwrap();
        let (colors, report) = color_graph(&g, &RunConfig::deterministic()).unwrap();
        assert!(colors.is_empty());
        assert_eq!(report.colors_used, 0);
    }

    #[test]
    fn randomized_matches_seed() {
        let g = star(7);
        let cfg = RunConfig::randomized(99);
        let (c1, _) = color_graph(&g, &cfg).unwrap();
        let (c2, _) = color_graph(&g, &cfg).unwrap();
        assert_eq!(c1, c2);
        assert!(oracle::validate_coloring(&g, &c1, 7).ok);
    }

    #[test]
    fn both_modes_color_a_union_of_stars() {
        // Two stars joined by a path: Δ = 6, mad < 2, so exact-Δ applies.
        let mut pairs: Vec<(usize, usize)> = (1..=6).map(|v| (0, v)).collect();
        pairs.extend((1..=5).map(|v| (7, 7 + v)));
        pairs.push((6, 12));
        let g = Graph::build(13, &pairs).unwrap();
        for cfg in [RunConfig::deterministic(), RunConfig::randomized(7)] {
            let cfg = RunConfig {
                policy: PalettePolicy::ExactDelta,
                ..cfg
            };
            let (colors, report) = color_graph(&g, &cfg).unwrap();
            let outcome = oracle::validate_coloring(&g, &colors, report.palette_total);
            assert!(outcome.ok, "violations: {:?}", outcome.violations);
            assert!(report.palette_total <= 6);
        }
    }

    #[test]
    fn progress_floor_examples() {
        assert_eq!(progress_floor(2, 3), 1);
        assert_eq!(progress_floor(289, 2), 2); // 9·2⁵ = 288
        assert_eq!(progress_floor(1, 50), 1);
    }
}
