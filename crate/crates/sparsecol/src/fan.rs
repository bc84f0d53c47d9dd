//! Fan construction and rotation: coloring one weak edge against any partial
//! coloring.
//!
//! A fan at center x is a sequence of distinct neighbors y₁..y_k where x·y₁
//! is uncolored, every later spoke edge carries a color free at some earlier
//! spoke, and every later spoke has degree below the palette size. A fan is
//! active once some spoke shares a free color with the center, or two spokes
//! share a free color; the minimal active fan is found in O(D) and then one
//! rotation — plus at most one Kempe-chain swap — extends the coloring by
//! exactly the uncolored edge. Everything here is deterministic: scans run
//! in increasing color order and activation picks the first witness.

use crate::coloring::{AlternatingPath, Color, PartialColoring};
use crate::graph::Graph;
use crate::weak;
use crate::{Error, Result};
use std::collections::VecDeque;

/// Why a fan is active.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Activation {
    /// `color` is free at both the center and spoke `spoke` (0-based).
    Center { color: Color, spoke: usize },
    /// `color` is free at spokes `low < high` but used at the center.
    Spokes {
        color: Color,
        low: usize,
        high: usize,
    },
}

/// A minimal active fan. `spoke_edges[i]` joins the center to `spokes[i]`;
/// index 0 is the uncolored edge, all later ones are colored.
#[derive(Clone, Debug)]
pub struct Fan {
    pub center: usize,
    pub spokes: Vec<usize>,
    pub spoke_edges: Vec<usize>,
    pub activation: Activation,
}

impl Fan {
    pub fn size(&self) -> usize {
        self.spokes.len()
    }

    pub fn uncolored_edge(&self) -> usize {
        self.spoke_edges[0]
    }
}

/// The type of the alternating path that coloring a weak edge would swap:
/// nothing at all (the rotation alone suffices), or a color pair, remembering
/// which of the two is the one free at the center.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathType {
    Empty,
    Pair {
        low: Color,
        high: Color,
        free_at_center: Color,
    },
}

impl PathType {
    /// The unordered color pair, the grouping key for batch scheduling.
    /// `None` sorts before every pair.
    pub fn key(&self) -> Option<(Color, Color)> {
        match *self {
            PathType::Empty => None,
            PathType::Pair { low, high, .. } => Some((low, high)),
        }
    }
}

/// One edge recoloring performed by a rotation; `old` is `None` for the
/// previously uncolored edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RecolorStep {
    pub edge: usize,
    pub old: Option<Color>,
    pub new: Color,
}

/// Outcome of coloring one weak edge.
#[derive(Clone, Debug)]
pub struct ColorEdgeReport {
    /// Spokes of the rotated (prefix) fan.
    pub rotated_fan_size: usize,
    /// The swapped alternating path, when the spoke-pair branch ran.
    pub path: Option<AlternatingPath>,
    /// Every color change, rotation steps and path edges both.
    pub recolored: Vec<RecolorStep>,
}

impl ColorEdgeReport {
    pub fn path_len(&self) -> usize {
        self.path.as_ref().map_or(0, |p| p.len())
    }
}

/// Finds the minimal active fan for the uncolored edge `edge` centered at
/// endpoint `x`, in O(D).
///
/// Two interleaved loops as in the classical procedure: the activity check
/// scans the newest spoke's free colors in increasing order, firing on the
/// first color free at the center (center activation wins over spoke-pair
/// when both would apply to a color) or already seen at an earlier spoke;
/// the extension step pops seen colors in FIFO order and follows the
/// center's matching edge to a spoke of degree below the palette.
///
/// Termination relies on `edge` being weak at `x`; if that fails the queue
/// can run dry, reported loudly as fan exhaustion, never silently.
pub fn build_minimal_active_fan(
    g: &Graph,
    s: &PartialColoring,
    edge: usize,
    x: usize,
) -> Result<Fan> {
    if edge >= g.edge_count() {
        return Err(Error::UnknownEdgeId { id: edge });
    }
    let (eu, ev) = g.ends(edge);
    if x != eu && x != ev {
        return Err(Error::VertexOutOfRange {
            v: x,
            n: g.vertex_count(),
        });
    }
    if s.color_of(edge).is_some() {
        return Err(Error::EdgeAlreadyColored { edge });
    }
    let y1 = if x == eu { ev } else { eu };
    let d = s.palette();

    let mut seen = vec![false; d + 1]; // the color set S
    let mut seen_count = 0i64;
    let mut queue: VecDeque<Color> = VecDeque::new();
    let mut spokes = vec![y1];
    let mut spoke_edges = vec![edge];

    loop {
        // Activity check over the newest spoke's free colors.
        let yi = *spokes.last().expect("fan has at least one spoke");
        for c in s.free_colors(yi) {
            if s.is_free(x, c) {
                return Ok(Fan {
                    center: x,
                    spokes: spokes.clone(),
                    spoke_edges,
                    activation: Activation::Center {
                        color: c,
                        spoke: spokes.len() - 1,
                    },
                });
            }
            if seen[c as usize] {
                let low = spokes[..spokes.len() - 1]
                    .iter()
                    .position(|&yj| s.is_free(yj, c))
                    .expect("seen color must be free at an earlier spoke");
                return Ok(Fan {
                    center: x,
                    spokes: spokes.clone(),
                    spoke_edges,
                    activation: Activation::Spokes {
                        color: c,
                        low,
                        high: spokes.len() - 1,
                    },
                });
            }
            seen[c as usize] = true;
            seen_count += 1;
            queue.push_back(c);
        }
        // Not active: the free sets seen so far are pairwise disjoint, so
        // their union must have gathered at least D − d(y₁) + k colors.
        debug_assert!(
            seen_count >= d as i64 - g.degree(y1) as i64 + spokes.len() as i64,
            "free-color union below the guaranteed size"
        );

        // Extension: pop seen colors until one leads to a usable spoke.
        loop {
            let c = queue.pop_front().ok_or(Error::FanExhausted { vertex: x })?;
            let e = s
                .edge_with_color(x, c)
                .expect("seen colors are used at the center");
            let z = g.other_end(e, x);
            debug_assert!(!spokes.contains(&z), "spokes stay distinct");
            if g.degree(z) < d {
                spokes.push(z);
                spoke_edges.push(e);
                break;
            }
        }
    }
}

/// Rotates the length-`upto` prefix of a fan: scanning spokes from the top,
/// every spoke whose current cascade color is free there takes it and hands
/// its old color down, until the uncolored edge is colored.
fn rotate_prefix(
    s: &mut PartialColoring,
    fan: &Fan,
    upto: usize,
    c: Color,
) -> Result<Vec<RecolorStep>> {
    let x = fan.center;
    if s.color_of(fan.uncolored_edge()).is_some() {
        return Err(Error::EdgeAlreadyColored {
            edge: fan.uncolored_edge(),
        });
    }
    let top = fan.spokes[upto - 1];
    if !s.is_free(x, c) {
        return Err(Error::ColorNotFree {
            vertex: x,
            color: c,
        });
    }
    if !s.is_free(top, c) {
        return Err(Error::ColorNotFree {
            vertex: top,
            color: c,
        });
    }

    let mut steps = Vec::new();
    let mut carry = c;
    for i in (0..upto).rev() {
        if !s.is_free(fan.spokes[i], carry) {
            continue;
        }
        let e = fan.spoke_edges[i];
        let old = if i == 0 {
            None
        } else {
            Some(s.unassign(e).expect("later spoke edges are colored"))
        };
        s.assign(e, carry).expect("cascade color is free at both ends");
        steps.push(RecolorStep {
            edge: e,
            old,
            new: carry,
        });
        match old {
            Some(next) => carry = next,
            None => return Ok(steps),
        }
    }
    unreachable!("rotation invariant: some prefix spoke can always take the cascade color");
}

/// Rotates a whole fan with a color free at both the center and the last
/// spoke; afterwards the previously uncolored edge is colored and the set of
/// colored edges grew by exactly that edge.
pub fn rotate_fan(s: &mut PartialColoring, fan: &Fan, c: Color) -> Result<Vec<RecolorStep>> {
    rotate_prefix(s, fan, fan.size(), c)
}

/// The type of the alternating path that `color_weak_edge` would use, found
/// without mutating anything. Center activation means no path at all;
/// spoke-pair activation pairs the shared spoke color with the smallest
/// color free at the center (or any caller-forced free color at coloring
/// time — batch callers pass the same canonical choice recorded here).
pub fn determine_path_type(
    g: &Graph,
    s: &PartialColoring,
    edge: usize,
    x: usize,
) -> Result<PathType> {
    let fan = build_minimal_active_fan(g, s, edge, x)?;
    Ok(match fan.activation {
        Activation::Center { .. } => PathType::Empty,
        Activation::Spokes { color, .. } => {
            let free = s
                .smallest_free(x)
                .expect("center of an uncolored edge has a free color");
            PathType::Pair {
                low: color.min(free),
                high: color.max(free),
                free_at_center: free,
            }
        }
    })
}

/// Colors one weak edge, recoloring only fan spokes and at most one maximal
/// alternating path. `x` must be an endpoint at which the edge is weak;
/// `forced_free` optionally picks the center-free path color (it must be
/// free at `x`).
///
/// Runs in O(D + |path|): fan building is O(D), the spoke-pair branch walks
/// and swaps one maximal path and rotates the fan prefix that avoids the
/// path's far endpoint.
pub fn color_weak_edge(
    g: &Graph,
    s: &mut PartialColoring,
    edge: usize,
    x: usize,
    forced_free: Option<Color>,
) -> Result<ColorEdgeReport> {
    if edge >= g.edge_count() {
        return Err(Error::UnknownEdgeId { id: edge });
    }
    if s.color_of(edge).is_some() {
        return Err(Error::EdgeAlreadyColored { edge });
    }
    let (eu, ev) = g.ends(edge);
    if x != eu && x != ev {
        return Err(Error::VertexOutOfRange {
            v: x,
            n: g.vertex_count(),
        });
    }
    let y = if x == eu { ev } else { eu };
    let d = s.palette();
    let top = weak::top_degree_count(g, x, d);
    let threshold = d as i64 - g.degree(y) as i64 + i64::from(g.degree(y) == d);
    if top as i64 > threshold {
        return Err(Error::NotWeak { edge, vertex: x });
    }
    if let Some(c) = forced_free {
        if c < 1 || c as usize > d {
            return Err(Error::ColorOutOfRange { color: c, d });
        }
        if !s.is_free(x, c) {
            return Err(Error::ColorNotFree {
                vertex: x,
                color: c,
            });
        }
    }

    let fan = build_minimal_active_fan(g, s, edge, x)?;
    match fan.activation {
        Activation::Center { color, .. } => {
            let steps = rotate_fan(s, &fan, color)?;
            Ok(ColorEdgeReport {
                rotated_fan_size: fan.size(),
                path: None,
                recolored: steps,
            })
        }
        Activation::Spokes { color, low, high } => {
            let free = match forced_free {
                Some(c) => c,
                None => s
                    .smallest_free(x)
                    .expect("center of an uncolored edge has a free color"),
            };
            // `color` is used at the center (otherwise center activation
            // would have fired first), so the walk direction is unique.
            let path = s.walk_alternating(x, color, free)?;
            debug_assert!(!path.is_empty());
            s.swap_path(&path)?;
            // Rotate towards whichever activation spoke the path did not
            // reach; its free colors are untouched by the swap.
            let target = if path.end == fan.spokes[low] { high } else { low };
            let steps = rotate_prefix(s, &fan, target + 1, color)?;
            let mut recolored: Vec<RecolorStep> = path
                .edges
                .iter()
                .map(|&e| {
                    let new = s.color_of(e).expect("path edges stay colored");
                    let old = if new == color { free } else { color };
                    RecolorStep {
                        edge: e,
                        old: Some(old),
                        new,
                    }
                })
                .collect();
            recolored.extend_from_slice(&steps);
            Ok(ColorEdgeReport {
                rotated_fan_size: target + 1,
                path: Some(path),
                recolored,
            })
        }
    }
}
