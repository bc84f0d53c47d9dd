//! Text formats for graphs, colorings, and run statistics.
//!
//! Graph files: a header line `n m`, then m lines `u v` with 0-based vertex
//! ids. Coloring files: a header `m D`, then m lines `edge_id u v color`.
//! Lines starting with `#` are comments; fields are whitespace-separated.
//! Writing then parsing reproduces the graph exactly, ids and order
//! included.

use crate::coloring::Color;
use crate::graph::Graph;
use crate::scheduler::{ColoringReport, Mode, Route};
use crate::{Error, Result};
use std::fmt::Write as _;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_fields<const K: usize>(line_no: usize, line: &str) -> Result<[usize; K]> {
    let mut out = [0usize; K];
    let mut fields = line.split_whitespace();
    for slot in out.iter_mut() {
        let field = fields.next().ok_or_else(|| Error::Parse {
            line: line_no,
            msg: format!("expected {K} fields"),
        })?;
        *slot = field.parse().map_err(|_| Error::Parse {
            line: line_no,
            msg: format!("bad integer `{field}`"),
        })?;
    }
    if fields.next().is_some() {
        return Err(Error::Parse {
            line: line_no,
            msg: format!("expected exactly {K} fields"),
        });
    }
    Ok(out)
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        msg: "missing header".into(),
    })?;
    let [n, m] = parse_fields(line_no, header)?;
    let mut pairs = Vec::with_capacity(m);
    for (line_no, line) in lines {
        let [u, v] = parse_fields(line_no, line)?;
        pairs.push((u, v));
    }
    if pairs.len() != m {
        return Err(Error::Parse {
            line: 0,
            msg: format!("header says {m} edges, found {}", pairs.len()),
        });
    }
    Graph::build(n, &pairs).map_err(|e| Error::Parse {
        line: 0,
        msg: e.to_string(),
    })
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parses a coloring file against its source graph, re-validating edge ids
/// and endpoints.
pub fn parse_coloring(text: &str, g: &Graph) -> Result<Vec<Color>> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        msg: "missing header".into(),
    })?;
    let [m, d] = parse_fields(line_no, header)?;
    if m != g.edge_count() {
        return Err(Error::Parse {
            line: line_no,
            msg: format!("coloring is for {m} edges, graph has {}", g.edge_count()),
        });
    }
    let mut colors = vec![None; m];
    for (line_no, line) in lines {
        let [edge, u, v, color] = parse_fields(line_no, line)?;
        if edge >= m {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("edge id {edge} out of range"),
            });
        }
        if g.ends(edge) != (u, v) {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("edge {edge} endpoints disagree with the graph"),
            });
        }
        if color < 1 || color > d {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("color {color} outside 1..={d}"),
            });
        }
        if colors[edge].replace(color as Color).is_some() {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("edge {edge} colored twice"),
            });
        }
    }
    colors
        .into_iter()
        .enumerate()
        .map(|(e, c)| {
            c.ok_or(Error::Parse {
                line: 0,
                msg: format!("edge {e} missing from coloring"),
            })
        })
        .collect()
}

pub fn write_coloring(g: &Graph, colors: &[Color], d: usize) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", colors.len(), d);
    for (e, &c) in colors.iter().enumerate() {
        let (u, v) = g.ends(e);
        let _ = writeln!(out, "{e} {u} {v} {c}");
    }
    out
}

/// Flat JSON rendering of a run report, one key per line, with rationals as
/// "p/q" strings so they survive round-trips losslessly.
pub fn render_stats(report: &ColoringReport) -> String {
    let mode = match report.mode {
        Mode::Randomized { .. } => "rand",
        Mode::Deterministic => "det",
    };
    let seed = match report.mode.seed() {
        Some(s) => s.to_string(),
        None => "null".into(),
    };
    let (route, c) = match report.route {
        Route::ExactDelta { c } => ("delta", c.to_string()),
        Route::DeltaPlusOne => ("delta1", "null".into()),
    };
    let depths: Vec<String> = report
        .components
        .iter()
        .map(|c| c.depth.to_string())
        .collect();
    let mut out = String::from("{\n");
    let mut field = |key: &str, value: String, quoted: bool| {
        let rendered = if quoted { format!("\"{value}\"") } else { value };
        let _ = writeln!(out, "  \"{key}\": {rendered},");
    };
    field("mode", mode.into(), true);
    field("seed", seed, false);
    field("n", report.n.to_string(), false);
    field("m", report.m.to_string(), false);
    field("delta", report.delta.to_string(), false);
    field("mad", report.mad.to_string(), true);
    field("route", route.into(), true);
    field("c", c, false);
    field("components", report.components.len().to_string(), false);
    field("recursion_depths", format!("[{}]", depths.join(", ")), false);
    field("cn_iterations", report.cn_iterations.to_string(), false);
    field(
        "total_path_length",
        report.total_path_length.to_string(),
        false,
    );
    field("palette", report.palette_total.to_string(), false);
    field("colors_used", report.colors_used.to_string(), false);
    let _ = writeln!(out, "  \"wall_ms\": {:.3}", report.wall_ms);
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn graph_round_trip_is_exact() {
        let g = generate::kdegenerate(2, 40, 5);
        let text = write_graph(&g);
        let back = parse_graph(&text).unwrap();
        assert_eq!(back.vertex_count(), g.vertex_count());
        assert_eq!(back.edges(), g.edges());
        assert_eq!(write_graph(&back), text);
    }

    #[test]
    fn comments_and_blanks_are_ignored() {
        let text = "# a triangle\n3 3\n\n0 1\n# middle\n1 2\n0 2\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert!(matches!(parse_graph(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph("2 1\n0 x\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph("2 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_graph("2 1\n0 1 9\n"),
            Err(Error::Parse { .. })
        ));
        // Self-loops surface as parse errors too.
        assert!(matches!(parse_graph("2 1\n1 1\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn coloring_round_trip_and_checks() {
        let g = generate::star(3);
        let colors = vec![1, 2, 3];
        let text = write_coloring(&g, &colors, 3);
        assert_eq!(parse_coloring(&text, &g).unwrap(), colors);

        let wrong_ends = "3 3\n0 1 0 1\n1 0 2 2\n2 0 3 3\n";
        assert!(matches!(
            parse_coloring(wrong_ends, &g),
            Err(Error::Parse { .. })
        ));
        let missing = "3 3\n0 0 1 1\n1 0 2 2\n";
        assert!(matches!(
            parse_coloring(missing, &g),
            Err(Error::Parse { .. })
        ));
        let out_of_palette = "3 3\n0 0 1 1\n1 0 2 2\n2 0 3 4\n";
        assert!(matches!(
            parse_coloring(out_of_palette, &g),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn stats_carry_exact_mad() {
        let g = generate::star(5);
        let (_, report) =
            crate::scheduler::color_graph(&g, &crate::scheduler::RunConfig::deterministic())
                .unwrap();
        let text = render_stats(&report);
        assert!(text.contains("\"mad\": \"5/3\""));
        assert!(text.contains("\"mode\": \"det\""));
        assert!(text.contains("\"seed\": null"));
    }
}
