//! Distance layers around a fixed source and the per-layer edge dichotomy.
//!
//! For a source `v0` the layers `A_i = {w : d(w, v0) = i}` partition the
//! vertex set. Every vertex of `A_i` (i ≥ 1) has a neighbor in `A_{i-1}`, so
//! `|E(A_{i-1}, A_i)| ≥ |A_i|`. Counting neighbor directions at each vertex
//! gives, for every `1 ≤ i ≤ ℓ`,
//!
//! ```text
//! |E(A_{i-1}, A_i)| ≤ |E(A_i, A_{i+1})| + Δ · |B_{v0} ∩ A_i|
//! ```
//!
//! where `B_{v0}` is the boundary slice of `v0` and `E(A_ℓ, A_{ℓ+1})` is
//! empty. The last layer lies entirely inside `B_{v0}`.

use serde::Serialize;

use crate::boundary::{boundary_slice, BoundarySlice};
use crate::distance::{bfs_distances, DistanceField};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LayerDecomposition {
    pub source: usize,
    /// Eccentricity of the source.
    pub ell: usize,
    /// `layers[i]` is `A_i`, ascending.
    pub layers: Vec<Vec<usize>>,
    /// `cross_edges[i - 1] = |E(A_{i-1}, A_i)|` for `1 ≤ i ≤ ℓ`.
    pub cross_edges: Vec<usize>,
    /// Edges with both ends in `A_i`.
    pub intra_edges: Vec<usize>,
    /// `|B_{v0} ∩ A_i|`.
    pub slice_per_layer: Vec<usize>,
    /// Vertices with no neighbor in the next layer.
    pub stranded: Vec<usize>,
    /// Stranded vertices that are not in `B_{v0}`; always empty.
    pub stranded_outside_slice: Vec<usize>,
    /// Non-source vertices without a neighbor in the previous layer; always empty.
    pub orphans: Vec<usize>,
    /// Edges joining layers two or more apart; always zero.
    pub long_edges: usize,
}

impl LayerDecomposition {
    pub fn layer_sizes(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }

    /// Checks the partition and edge-count invariants against `n` vertices.
    pub fn validate(&self, n: usize) -> Result<()> {
        let fail = |msg: String| Err(Error::InvariantViolation(msg));
        if self.layers.first().map(Vec::as_slice) != Some(&[self.source][..]) {
            return fail(format!("A_0 is not {{{}}}", self.source));
        }
        let mut seen = vec![false; n];
        for layer in &self.layers {
            for &w in layer {
                if std::mem::replace(&mut seen[w], true) {
                    return fail(format!("vertex {w} appears in two layers"));
                }
            }
        }
        if let Some(w) = seen.iter().position(|&s| !s) {
            return fail(format!("vertex {w} is in no layer"));
        }
        if let Some(&w) = self.orphans.first() {
            return fail(format!("vertex {w} has no neighbor in the previous layer"));
        }
        if self.long_edges != 0 {
            return fail(format!("{} edges skip a layer", self.long_edges));
        }
        for i in 1..=self.ell {
            if self.cross_edges[i - 1] < self.layers[i].len() {
                return fail(format!(
                    "|E(A_{}, A_{i})| = {} < |A_{i}| = {}",
                    i - 1,
                    self.cross_edges[i - 1],
                    self.layers[i].len()
                ));
            }
        }
        if let Some(&w) = self.stranded_outside_slice.first() {
            return fail(format!(
                "vertex {w} has no neighbor farther from {} but is not in its slice",
                self.source
            ));
        }
        Ok(())
    }
}

/// Layers of `g` around `v0`.
pub fn layer_decompose(g: &Graph, v0: usize) -> Result<LayerDecomposition> {
    let field = bfs_distances(g, v0)?;
    let slice = boundary_slice(g, &field);
    Ok(decompose_with(g, &field, &slice))
}

/// Layer decomposition from an existing distance field and its slice.
pub fn decompose_with(
    g: &Graph,
    field: &DistanceField,
    slice: &BoundarySlice,
) -> LayerDecomposition {
    let ell = field.eccentricity() as usize;
    let mut layers = vec![Vec::new(); ell + 1];
    for (w, &d) in field.dist.iter().enumerate() {
        layers[d as usize].push(w);
    }

    let mut cross_edges = vec![0; ell];
    let mut intra_edges = vec![0; ell + 1];
    let mut long_edges = 0;
    for (u, w) in g.edges() {
        let (du, dw) = (field.get(u) as usize, field.get(w) as usize);
        match du.abs_diff(dw) {
            0 => intra_edges[du] += 1,
            1 => cross_edges[du.min(dw)] += 1,
            _ => long_edges += 1,
        }
    }

    let mut slice_per_layer = vec![0; ell + 1];
    for &u in &slice.members {
        slice_per_layer[field.get(u) as usize] += 1;
    }

    let mut stranded = Vec::new();
    let mut stranded_outside_slice = Vec::new();
    let mut orphans = Vec::new();
    for u in 0..g.n() {
        let du = field.get(u);
        let nbrs = g.neighbors(u);
        if u != field.source && !nbrs.iter().any(|&w| field.get(w) + 1 == du) {
            orphans.push(u);
        }
        if !nbrs.iter().any(|&w| field.get(w) == du + 1) {
            stranded.push(u);
            if u != field.source && !slice.contains(u) {
                stranded_outside_slice.push(u);
            }
        }
    }

    LayerDecomposition {
        source: field.source,
        ell,
        layers,
        cross_edges,
        intra_edges,
        slice_per_layer,
        stranded,
        stranded_outside_slice,
        orphans,
        long_edges,
    }
}

/// The dichotomy inequality at one layer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LayerCheck {
    pub layer: usize,
    /// `|E(A_{i-1}, A_i)|`
    pub incoming: usize,
    /// `|E(A_i, A_{i+1})|`, zero at the last layer.
    pub outgoing: usize,
    /// `|B_{v0} ∩ A_i|`
    pub slice_count: usize,
    /// `outgoing + Δ · slice_count − incoming`; nonnegative when it holds.
    pub slack: i64,
}

/// Checks the dichotomy at every layer `1..=ℓ` (the last layer reduces to
/// `|E(A_{ℓ-1}, A_ℓ)| ≤ Δ · |A_ℓ|`) and that `A_ℓ ⊆ B_{v0}`.
///
/// A violation is reported with its layer index; on valid input it means a
/// bug in the distance or slice computation.
pub fn check_dichotomy(ld: &LayerDecomposition, delta: usize) -> Result<Vec<LayerCheck>> {
    let mut checks = Vec::with_capacity(ld.ell);
    for i in 1..=ld.ell {
        let incoming = ld.cross_edges[i - 1];
        let outgoing = ld.cross_edges.get(i).copied().unwrap_or(0);
        let slice_count = ld.slice_per_layer[i];
        let slack = (outgoing + delta * slice_count) as i64 - incoming as i64;
        if slack < 0 {
            return Err(Error::DichotomyViolation {
                layer: i,
                detail: format!(
                    "{incoming} incoming edges > {outgoing} outgoing + {delta}·{slice_count}"
                ),
            });
        }
        checks.push(LayerCheck {
            layer: i,
            incoming,
            outgoing,
            slice_count,
            slack,
        });
    }
    let last = ld.ell;
    if ld.slice_per_layer[last] != ld.layers[last].len() && last > 0 {
        return Err(Error::DichotomyViolation {
            layer: last,
            detail: format!(
                "only {} of {} vertices in the last layer are in the slice",
                ld.slice_per_layer[last],
                ld.layers[last].len()
            ),
        });
    }
    if let Some(&u) = ld.stranded_outside_slice.first() {
        return Err(Error::DichotomyViolation {
            layer: ld.layers.iter().position(|l| l.contains(&u)).unwrap_or(0),
            detail: format!("stranded vertex {u} is not in the slice"),
        });
    }
    Ok(checks)
}
