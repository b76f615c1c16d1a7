//! The distance-average boundary `∂G`, the Chartrand–Erwin–Johns–Zhang
//! boundary `(∂G)*`, and per-source slices.
//!
//! A vertex `u` is in the slice `B_v` when the mean distance of its neighbors
//! to `v` is strictly below `d(u, v)`. The comparison is done in integers as
//! `Σ_{w ~ u} d(w, v) < deg(u) · d(u, v)`. `∂G` is the union of all slices.
//! `u ∈ (∂G)*` when for some `v` no neighbor of `u` is farther from `v` than
//! `u` itself.
//!
//! The quantifier over `v` includes `v = u`; that choice never certifies
//! membership (both criteria fail when `d(u, v) = 0`). For `K_1` both
//! boundaries are empty.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::distance::{DistanceField, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::laplacian::Laplacian;
use crate::par;

/// Integer certificate for `u ∈ B_v`: `neighbor_sum < scaled_distance`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SliceWitness {
    pub vertex: usize,
    /// `Σ_{w ~ u} d(w, v)`
    pub neighbor_sum: u64,
    /// `deg(u) · d(u, v)`
    pub scaled_distance: u64,
}

/// The vertices identified as boundary from a single source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundarySlice {
    pub source: usize,
    /// Ascending.
    pub members: Vec<usize>,
    /// Parallel to `members`.
    pub witnesses: Vec<SliceWitness>,
}

impl BoundarySlice {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, u: usize) -> bool {
        self.members.binary_search(&u).is_ok()
    }
}

#[inline]
fn neighbor_sum(g: &Graph, dist: &[u32], u: usize) -> u64 {
    g.neighbors(u).iter().map(|&w| u64::from(dist[w])).sum()
}

/// Slice `B_v` for the distance field of `v`.
pub fn boundary_slice(g: &Graph, df: &DistanceField) -> BoundarySlice {
    let mut members = Vec::new();
    let mut witnesses = Vec::new();
    for u in 0..g.n() {
        let sum = neighbor_sum(g, &df.dist, u);
        let scaled = g.degree(u) as u64 * u64::from(df.dist[u]);
        if sum < scaled {
            members.push(u);
            witnesses.push(SliceWitness {
                vertex: u,
                neighbor_sum: sum,
                scaled_distance: scaled,
            });
        }
    }
    BoundarySlice {
        source: df.source,
        members,
        witnesses,
    }
}

/// True when no neighbor of `u` is farther from the source than `u`.
#[inline]
pub fn cejz_certifies(g: &Graph, dist: &[u32], u: usize) -> bool {
    let du = dist[u];
    du > 0 && g.neighbors(u).iter().all(|&w| dist[w] <= du)
}

/// `(∂G)*` from a precomputed distance matrix, ascending.
pub fn cejz_boundary_from(g: &Graph, dm: &DistanceMatrix) -> Vec<usize> {
    let certified = par::map_vertices(g.n(), |u| {
        (0..g.n()).any(|v| cejz_certifies(g, dm.row(v), u))
    });
    certified
        .into_iter()
        .enumerate()
        .filter_map(|(u, yes)| yes.then_some(u))
        .collect()
}

/// `(∂G)*` of a connected graph.
pub fn cejz_boundary(g: &Graph) -> Result<Vec<usize>> {
    Ok(cejz_boundary_from(g, &DistanceMatrix::compute(g)?))
}

/// Everything computed about the two boundaries of one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryReport {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub diameter: u32,
    /// `∂G`, ascending.
    pub boundary: Vec<usize>,
    /// `(∂G)*`, ascending.
    pub cejz_boundary: Vec<usize>,
    /// Smallest source `v` with `u ∈ B_v`, for every `u ∈ ∂G`.
    pub witness: BTreeMap<usize, usize>,
    /// `slices[v]` is `B_v`.
    pub slices: Vec<BoundarySlice>,
}

impl BoundaryReport {
    pub fn in_boundary(&self, u: usize) -> bool {
        self.witness.contains_key(&u)
    }

    pub fn in_cejz(&self, u: usize) -> bool {
        self.cejz_boundary.binary_search(&u).is_ok()
    }

    /// JSON document with the fixed report field names. `labels`, when
    /// given, records the external label of every vertex id.
    pub fn to_json(&self, include_slices: bool, labels: Option<&[String]>) -> serde_json::Value {
        #[derive(Serialize)]
        struct Doc<'a> {
            n: usize,
            m: usize,
            max_degree: usize,
            diameter: u32,
            boundary: &'a [usize],
            cejz_boundary: &'a [usize],
            witness: &'a BTreeMap<usize, usize>,
            #[serde(skip_serializing_if = "Option::is_none")]
            slices: Option<BTreeMap<usize, &'a [usize]>>,
            #[serde(skip_serializing_if = "Option::is_none")]
            labels: Option<&'a [String]>,
        }
        let doc = Doc {
            n: self.n,
            m: self.m,
            max_degree: self.max_degree,
            diameter: self.diameter,
            boundary: &self.boundary,
            cejz_boundary: &self.cejz_boundary,
            witness: &self.witness,
            slices: include_slices.then(|| {
                self.slices
                    .iter()
                    .map(|s| (s.source, s.members.as_slice()))
                    .collect()
            }),
            labels,
        };
        serde_json::to_value(doc).expect("report serializes")
    }
}

/// Computes `∂G`, `(∂G)*` and all slices of a connected graph.
pub fn boundary(g: &Graph) -> Result<BoundaryReport> {
    boundary_from(g, &DistanceMatrix::compute(g)?)
}

/// As [`boundary`], reusing a distance matrix of `g`.
pub fn boundary_from(g: &Graph, dm: &DistanceMatrix) -> Result<BoundaryReport> {
    let report = assemble(g, dm);
    if let Some(&u) = report
        .cejz_boundary
        .iter()
        .find(|&&u| !report.in_boundary(u))
    {
        return Err(Error::InvariantViolation(format!(
            "vertex {u} is in (∂G)* but not in ∂G"
        )));
    }
    Ok(report)
}

/// Builds the report without checking `(∂G)* ⊆ ∂G`.
pub(crate) fn assemble(g: &Graph, dm: &DistanceMatrix) -> BoundaryReport {
    let n = g.n();
    let slices = par::map_vertices(n, |v| boundary_slice(g, &dm.field(v)));

    let mut witness = BTreeMap::new();
    for slice in &slices {
        for &u in &slice.members {
            witness.entry(u).or_insert(slice.source);
        }
    }
    let boundary: Vec<usize> = witness.keys().copied().collect();
    let cejz_boundary = cejz_boundary_from(g, dm);

    BoundaryReport {
        n,
        m: g.m(),
        max_degree: g.max_degree(),
        diameter: dm.diameter(),
        boundary,
        cejz_boundary,
        witness,
        slices,
    }
}

/// Compares the neighbor-sum slice with the Laplacian route for every
/// source. Returns the first source where they disagree.
pub fn laplacian_disagreement(g: &Graph, dm: &DistanceMatrix) -> Option<usize> {
    let lap = Laplacian::new(g);
    let agree = par::map_vertices(g.n(), |v| {
        let field = dm.field(v);
        lap.positive_support(&field) == boundary_slice(g, &field).members
    });
    agree.iter().position(|&ok| !ok)
}
