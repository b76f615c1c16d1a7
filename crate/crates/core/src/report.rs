//! Plain-text and Graphviz renderings of a boundary report.

use std::fmt::Write as _;

use crate::boundary::BoundaryReport;
use crate::generators::GridGraph;
use crate::graph::Graph;

pub const BOUNDARY_COLOR: &str = "red";
pub const INTERIOR_COLOR: &str = "blue";

fn ids(xs: &[usize]) -> String {
    xs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn to_text(report: &BoundaryReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n: {}", report.n);
    let _ = writeln!(out, "m: {}", report.m);
    let _ = writeln!(out, "max_degree: {}", report.max_degree);
    let _ = writeln!(out, "diameter: {}", report.diameter);
    let _ = writeln!(out, "boundary: {}", ids(&report.boundary));
    let _ = writeln!(out, "cejz_boundary: {}", ids(&report.cejz_boundary));
    let witnesses: Vec<String> = report
        .witness
        .iter()
        .map(|(u, v)| format!("{u}<-{v}"))
        .collect();
    let _ = writeln!(out, "witness: {}", witnesses.join(" "));
    out
}

/// Undirected DOT graph with `∂G` filled red and the interior blue. With
/// `overlay_cejz`, vertices of `(∂G)*` are drawn as double circles. Lattice
/// coordinates, when given, are emitted as pinned `pos` attributes.
pub fn to_dot(
    g: &Graph,
    report: &BoundaryReport,
    overlay_cejz: bool,
    grid: Option<&GridGraph>,
) -> String {
    let mut out =
        String::from("graph G {\n  node [shape=circle, style=filled, fontcolor=white];\n");
    for u in 0..g.n() {
        let color = if report.in_boundary(u) {
            BOUNDARY_COLOR
        } else {
            INTERIOR_COLOR
        };
        let _ = write!(out, "  {u} [fillcolor={color}");
        if overlay_cejz && report.in_cejz(u) {
            out.push_str(", shape=doublecircle, penwidth=2");
        }
        if let Some(gg) = grid {
            let p = gg.position(u);
            if p.len() == 2 {
                let _ = write!(out, ", pos=\"{},{}!\"", p[1], -p[0]);
            }
        }
        out.push_str("];\n");
    }
    for (u, w) in g.edges() {
        let _ = writeln!(out, "  {u} -- {w};");
    }
    out.push_str("}\n");
    out
}
