//! Lattice and continuum checks: geodesic non-uniqueness at full-degree
//! boundary vertices of lattice graphs, the narrow disk-sector example, and
//! the Laplacian of the Euclidean norm.
//!
//! Floating point is used only by the sector and finite-difference checks.

use std::f64::consts::PI;

use num_rational::Ratio;
use serde::Serialize;

use crate::boundary::BoundaryReport;
use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::generators::GridGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum WitnessCase {
    /// A neighbor `w` of `u` with `d(w, v) = d(u, v)`.
    EqualDistanceNeighbor { neighbor: usize },
    /// `d(u − e_axis, v) = d(u + e_axis, v) = d(u, v) − 1`.
    AntipodalDescent {
        axis: usize,
        minus: usize,
        plus: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NonUniquenessWitness {
    pub vertex: usize,
    pub source: usize,
    /// `d(vertex, source)`
    pub distance: u32,
    #[serde(flatten)]
    pub case: WitnessCase,
}

impl NonUniquenessWitness {
    /// Re-checks the defining equalities against `dm`.
    pub fn verify(&self, dm: &DistanceMatrix) -> bool {
        let d = |x: usize| dm.get(x, self.source);
        if d(self.vertex) != self.distance {
            return false;
        }
        match self.case {
            WitnessCase::EqualDistanceNeighbor { neighbor } => d(neighbor) == self.distance,
            WitnessCase::AntipodalDescent { minus, plus, .. } => {
                self.distance >= 1 && d(minus) + 1 == self.distance && d(plus) + 1 == self.distance
            }
        }
    }
}

/// A full-degree boundary vertex and its non-uniqueness witnesses.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Prop4Entry {
    pub vertex: usize,
    pub coords: Vec<i64>,
    pub witnesses: Vec<NonUniquenessWitness>,
}

/// For every `u ∈ ∂G` with all `2d` lattice neighbors, finds geodesic
/// non-uniqueness witnesses among the sources `v` with `u ∈ B_v`.
///
/// Antipodal descent is searched first, over all certifying sources in
/// ascending order, then equal-distance neighbors. With `all` set every
/// witness of both kinds is returned, otherwise only the first one found.
pub fn classify_prop4(
    gg: &GridGraph,
    dm: &DistanceMatrix,
    report: &BoundaryReport,
    all: bool,
) -> Result<Vec<Prop4Entry>> {
    let g = &gg.graph;
    let mut entries = Vec::new();
    for &u in &report.boundary {
        if g.degree(u) != gg.full_degree() {
            continue;
        }
        let pairs: Vec<(usize, usize, usize)> = (0..gg.dim)
            .filter_map(|axis| match gg.axis_neighbors(u, axis) {
                (Some(minus), Some(plus)) => Some((axis, minus, plus)),
                _ => None,
            })
            .collect();
        if pairs.len() != gg.dim {
            return Err(Error::InvariantViolation(format!(
                "vertex {u} has degree {} but not all antipodal neighbor pairs",
                g.degree(u)
            )));
        }
        let sources: Vec<usize> = report
            .slices
            .iter()
            .filter(|slice| slice.contains(u))
            .map(|slice| slice.source)
            .collect();

        let mut witnesses = Vec::new();
        'descent: for &v in &sources {
            let du = dm.get(u, v);
            for &(axis, minus, plus) in &pairs {
                if dm.get(minus, v) + 1 == du && dm.get(plus, v) + 1 == du {
                    witnesses.push(NonUniquenessWitness {
                        vertex: u,
                        source: v,
                        distance: du,
                        case: WitnessCase::AntipodalDescent { axis, minus, plus },
                    });
                    if !all {
                        break 'descent;
                    }
                }
            }
        }
        if all || witnesses.is_empty() {
            'equal: for &v in &sources {
                let du = dm.get(u, v);
                for &w in g.neighbors(u) {
                    if dm.get(w, v) == du {
                        witnesses.push(NonUniquenessWitness {
                            vertex: u,
                            source: v,
                            distance: du,
                            case: WitnessCase::EqualDistanceNeighbor { neighbor: w },
                        });
                        if !all {
                            break 'equal;
                        }
                    }
                }
            }
        }
        if witnesses.is_empty() {
            return Err(Error::WitnessNotFound(u));
        }
        entries.push(Prop4Entry {
            vertex: u,
            coords: gg.coords[u].clone(),
            witnesses,
        });
    }
    Ok(entries)
}

/// Default upper limit on the sector opening fraction.
pub const DEFAULT_MAX_ALPHA: f64 = 0.1;
/// Beyond this fraction the sector's chord exceeds its radius.
pub const DIAMETER_LIMIT_ALPHA: f64 = 1.0 / 6.0;

/// Narrow planar disk sector of radius `r` and opening fraction `alpha`
/// (opening angle `2π·alpha`) seen from its apex.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SectorCheck {
    pub dimension: u32,
    pub radius: f64,
    pub alpha: f64,
    /// Curved part of the boundary: `2π·r·alpha`.
    pub arc_length: f64,
    /// `π·r²·alpha`
    pub area: f64,
    /// `r`
    pub diameter: f64,
    /// `(d − 1)·area / diameter`
    pub bound: f64,
    /// `arc_length / bound` as an exact ratio of the closed-form
    /// coefficients of `π·r·alpha`.
    #[serde(serialize_with = "crate::inequality::serialize_rational")]
    pub ratio: Ratio<i64>,
    /// The same ratio evaluated in floating point.
    pub ratio_numeric: f64,
    pub holds: bool,
}

/// Closed-form quantities for the disk sector and the comparison of its
/// curved boundary with `(d − 1)|Ω| / diam(Ω)`.
pub fn sector_check(r: f64, alpha: f64, max_alpha: f64) -> Result<SectorCheck> {
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::InvalidParams(format!(
            "radius must be positive, got {r}"
        )));
    }
    if !(alpha.is_finite() && alpha > 0.0) {
        return Err(Error::InvalidParams(format!(
            "alpha must be positive, got {alpha}"
        )));
    }
    let max = max_alpha.min(DIAMETER_LIMIT_ALPHA);
    if alpha > max {
        return Err(Error::AlphaTooLarge { alpha, max });
    }
    let dimension = 2u32;
    let unit = PI * r * alpha;
    // arc = 2·unit; area / diam = (r·unit) / r = unit; bound = (d − 1)·unit
    let arc_coeff = 2i64;
    let bound_coeff = i64::from(dimension - 1);
    let arc_length = 2.0 * PI * r * alpha;
    let area = PI * r * r * alpha;
    let diameter = r;
    let bound = f64::from(dimension - 1) * area / diameter;
    let ratio = Ratio::new(arc_coeff, bound_coeff);
    Ok(SectorCheck {
        dimension,
        radius: r,
        alpha,
        arc_length,
        area,
        diameter,
        bound,
        ratio,
        ratio_numeric: arc_length / bound,
        holds: ratio >= Ratio::from_integer(1) && arc_length >= bound && unit > 0.0,
    })
}

/// Relative deviation between the central-difference Laplacian of `|x|` at
/// `point` (step `h` along every axis) and the exact value `(d − 1)/|x|`.
pub fn radial_laplacian_deviation(point: &[f64], h: f64) -> f64 {
    let norm = |p: &[f64]| p.iter().map(|x| x * x).sum::<f64>().sqrt();
    let centre = norm(point);
    let mut probe = point.to_vec();
    let mut laplacian = 0.0;
    for axis in 0..point.len() {
        probe[axis] = point[axis] + h;
        let forward = norm(&probe);
        probe[axis] = point[axis] - h;
        let backward = norm(&probe);
        probe[axis] = point[axis];
        laplacian += (forward - 2.0 * centre + backward) / (h * h);
    }
    let exact = (point.len() as f64 - 1.0) / centre;
    ((laplacian - exact) / exact).abs()
}

/// Largest relative deviation over `points` in dimension `d`.
pub fn radial_laplacian_identity_check(d: usize, points: &[Vec<f64>], h: f64) -> Result<f64> {
    if d < 2 {
        return Err(Error::InvalidParams("dimension must be at least 2".into()));
    }
    if !(h.is_finite() && h > 0.0) {
        return Err(Error::InvalidParams(format!(
            "step must be positive, got {h}"
        )));
    }
    let mut worst = 0.0f64;
    for p in points {
        if p.len() != d {
            return Err(Error::InvalidParams(format!(
                "point {p:?} does not have {d} coordinates"
            )));
        }
        let r = p.iter().map(|x| x * x).sum::<f64>().sqrt();
        if r <= 2.0 * h {
            return Err(Error::InvalidParams(format!(
                "point {p:?} is within two steps of the origin"
            )));
        }
        worst = worst.max(radial_laplacian_deviation(p, h));
    }
    Ok(worst)
}
