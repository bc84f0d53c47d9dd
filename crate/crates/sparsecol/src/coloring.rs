//! Mutable partial edge-coloring state.
//!
//! Alongside the per-edge assignment, the state keeps a direct-address map
//! per vertex from color to the incident edge carrying it, plus free-color
//! counts. That gives O(1) assign/unassign and O(|P|) alternating-path walks
//! at O(n·D) space, which is fine because callers keep D close to the
//! maximum average degree.

use crate::graph::Graph;
use crate::{Error, Result};

/// Colors are 1-based; 0 is reserved as the internal "uncolored" marker.
pub type Color = u32;

const NO_EDGE: u32 = u32::MAX;

/// A proper partial coloring of the edges of one graph with palette 1..=D.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialColoring {
    palette: usize,
    ends: Vec<(u32, u32)>,
    assignment: Vec<Color>, // 0 = uncolored
    color_map: Vec<u32>,    // vertex * palette + (color-1) -> edge id or NO_EDGE
    free_count: Vec<u32>,
    colored: usize,
}

/// A maximal alternating path walked from `start`: consecutive edges share a
/// vertex and colors strictly alternate within the unordered pair `{a, b}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingPath {
    pub start: usize,
    pub colors: (Color, Color),
    pub edges: Vec<usize>,
    pub end: usize,
}

impl AlternatingPath {
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }
}

impl PartialColoring {
    /// Fresh all-uncolored state for `g` with `palette` colors.
    pub fn new(g: &Graph, palette: usize) -> Result<PartialColoring> {
        if palette < 1 {
            return Err(Error::InvalidPalette { d: palette });
        }
        let n = g.vertex_count();
        Ok(PartialColoring {
            palette,
            ends: g
                .edges()
                .iter()
                .map(|&(u, v)| (u as u32, v as u32))
                .collect(),
            assignment: vec![0; g.edge_count()],
            color_map: vec![NO_EDGE; n * palette],
            free_count: vec![palette as u32; n],
            colored: 0,
        })
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn vertex_count(&self) -> usize {
        self.free_count.len()
    }

    pub fn edge_count(&self) -> usize {
        self.assignment.len()
    }

    pub fn colored_count(&self) -> usize {
        self.colored
    }

    pub fn color_of(&self, edge: usize) -> Option<Color> {
        match self.assignment[edge] {
            0 => None,
            c => Some(c),
        }
    }

    pub fn ends(&self, edge: usize) -> (usize, usize) {
        let (u, v) = self.ends[edge];
        (u as usize, v as usize)
    }

    fn other_end(&self, edge: usize, v: usize) -> usize {
        let (a, b) = self.ends(edge);
        debug_assert!(v == a || v == b);
        if v == a {
            b
        } else {
            a
        }
    }

    fn slot(&self, v: usize, c: Color) -> usize {
        debug_assert!(c >= 1 && c as usize <= self.palette);
        v * self.palette + (c as usize - 1)
    }

    fn set_slot(&mut self, v: usize, c: Color, value: u32) {
        let idx = self.slot(v, c);
        self.color_map[idx] = value;
    }

    /// The edge at `v` colored `c`, if any. This is the paper's M_v lookup.
    pub fn edge_with_color(&self, v: usize, c: Color) -> Option<usize> {
        match self.color_map[self.slot(v, c)] {
            NO_EDGE => None,
            e => Some(e as usize),
        }
    }

    pub fn is_free(&self, v: usize, c: Color) -> bool {
        self.color_map[self.slot(v, c)] == NO_EDGE
    }

    pub fn free_count(&self, v: usize) -> usize {
        self.free_count[v] as usize
    }

    /// Free colors at `v` in increasing order.
    pub fn free_colors(&self, v: usize) -> impl Iterator<Item = Color> + '_ {
        (1..=self.palette as Color).filter(move |&c| self.is_free(v, c))
    }

    pub fn smallest_free(&self, v: usize) -> Option<Color> {
        self.free_colors(v).next()
    }

    /// Colors edge `e` with `c`. Requires `e` uncolored and `c` free at both
    /// endpoints; rejects naming the conflicting vertex otherwise.
    pub fn assign(&mut self, edge: usize, c: Color) -> Result<()> {
        if c < 1 || c as usize > self.palette {
            return Err(Error::ColorOutOfRange {
                color: c,
                d: self.palette,
            });
        }
        if self.assignment[edge] != 0 {
            return Err(Error::EdgeAlreadyColored { edge });
        }
        let (u, v) = self.ends(edge);
        if !self.is_free(u, c) {
            return Err(Error::ColorConflict {
                vertex: u,
                color: c,
            });
        }
        if !self.is_free(v, c) {
            return Err(Error::ColorConflict {
                vertex: v,
                color: c,
            });
        }
        self.assignment[edge] = c;
        self.set_slot(u, c, edge as u32);
        self.set_slot(v, c, edge as u32);
        self.free_count[u] -= 1;
        self.free_count[v] -= 1;
        self.colored += 1;
        Ok(())
    }

    /// Removes the color of `e`; inverse of `assign`.
    pub fn unassign(&mut self, edge: usize) -> Result<Color> {
        let c = self.assignment[edge];
        if c == 0 {
            return Err(Error::EdgeNotColored { edge });
        }
        let (u, v) = self.ends(edge);
        self.assignment[edge] = 0;
        self.set_slot(u, c, NO_EDGE);
        self.set_slot(v, c, NO_EDGE);
        self.free_count[u] += 1;
        self.free_count[v] += 1;
        self.colored -= 1;
        Ok(c)
    }

    /// Walks the unique maximal (a, b)-alternating path starting at `start`.
    /// At most one of the two colors may be present at `start`; the walk
    /// begins with whichever is. Returns an empty path when neither is.
    pub fn walk_alternating(&self, start: usize, a: Color, b: Color) -> Result<AlternatingPath> {
        if a == b {
            return Err(Error::EqualColors { a, b });
        }
        for c in [a, b] {
            if c < 1 || c as usize > self.palette {
                return Err(Error::ColorOutOfRange {
                    color: c,
                    d: self.palette,
                });
            }
        }
        let at_a = self.edge_with_color(start, a);
        let at_b = self.edge_with_color(start, b);
        if at_a.is_some() && at_b.is_some() {
            return Err(Error::AmbiguousWalk {
                vertex: start,
                a,
                b,
            });
        }
        let mut edges = Vec::new();
        let mut here = start;
        let mut want = match (at_a, at_b) {
            (Some(_), None) => a,
            (None, Some(_)) => b,
            _ => {
                return Ok(AlternatingPath {
                    start,
                    colors: (a, b),
                    edges,
                    end: start,
                })
            }
        };
        while let Some(e) = self.edge_with_color(here, want) {
            edges.push(e);
            here = self.other_end(e, here);
            want = if want == a { b } else { a };
        }
        Ok(AlternatingPath {
            start,
            colors: (a, b),
            edges,
            end: here,
        })
    }

    /// Exchanges the two colors along a previously walked maximal path. The
    /// path is re-validated against the current state (connectivity,
    /// alternation, maximality); any drift is reported as a stale path.
    ///
    /// Free-color membership of `a` and `b` flips at the two endpoints and
    /// nowhere else; free counts are unchanged everywhere.
    pub fn swap_path(&mut self, p: &AlternatingPath) -> Result<()> {
        let (a, b) = p.colors;
        if p.edges.is_empty() {
            return Ok(());
        }
        // Validation pass: recompute the chain from the start vertex.
        let first = self.color_of(p.edges[0]).ok_or(Error::StalePath)?;
        if first != a && first != b {
            return Err(Error::StalePath);
        }
        let mut here = p.start;
        let mut want = first;
        for &e in &p.edges {
            let (x, y) = self.ends(e);
            if x != here && y != here {
                return Err(Error::StalePath);
            }
            if self.color_of(e) != Some(want) {
                return Err(Error::StalePath);
            }
            if self.edge_with_color(here, want) != Some(e) {
                return Err(Error::StalePath);
            }
            here = self.other_end(e, here);
            want = if want == a { b } else { a };
        }
        if here != p.end {
            return Err(Error::StalePath);
        }
        // Maximality: the next color must be absent at the far endpoint, and
        // the non-first color absent at the start.
        if self.edge_with_color(p.end, want).is_some() {
            return Err(Error::StalePath);
        }
        let other_at_start = if first == a { b } else { a };
        if self.edge_with_color(p.start, other_at_start).is_some() {
            return Err(Error::StalePath);
        }

        // Swap. Entries are cleared first and then rewritten so interior
        // vertices, which see both colors, never transiently alias.
        for &e in &p.edges {
            let c = self.assignment[e];
            let (u, v) = self.ends(e);
            self.set_slot(u, c, NO_EDGE);
            self.set_slot(v, c, NO_EDGE);
        }
        for &e in &p.edges {
            let c = self.assignment[e];
            let swapped = if c == a { b } else { a };
            let (u, v) = self.ends(e);
            self.assignment[e] = swapped;
            self.set_slot(u, swapped, e as u32);
            self.set_slot(v, swapped, e as u32);
        }
        Ok(())
    }

    /// Full properness audit: no vertex carries a color twice. The
    /// incremental operations keep this true; tests and the validator
    /// re-check from scratch.
    pub fn properness_violations(&self) -> Vec<(usize, Color)> {
        let n = self.vertex_count();
        let mut count: Vec<u8> = vec![0; n * self.palette];
        for e in 0..self.assignment.len() {
            if let Some(c) = self.color_of(e) {
                let (u, v) = self.ends(e);
                count[self.slot(u, c)] = count[self.slot(u, c)].saturating_add(1);
                count[self.slot(v, c)] = count[self.slot(v, c)].saturating_add(1);
            }
        }
        let mut out = Vec::new();
        for v in 0..n {
            for c in 1..=self.palette as Color {
                if count[self.slot(v, c)] > 1 {
                    out.push((v, c));
                }
            }
        }
        out
    }
}
