//! Isoperimetric lower bounds for `|∂G|` and for single slices, checked in
//! exact rational arithmetic.
//!
//! * whole boundary: `|∂G| ≥ |V| / (2Δ · diam)`
//! * single slice, refined: `|B_v| ≥ (|V| − 1) / (2Δ(diam − 1) + 1)` for every `v`
//! * corner boundary: `|(∂G)*| ≥ log2(Δ + 2)`, compared as `2^|(∂G)*| ≥ Δ + 2`

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::boundary::{boundary, BoundaryReport};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub type Rational = Ratio<i64>;

/// `num/den (decimal)`; the decimal is for reading only.
pub fn fmt_rational(r: &Rational) -> String {
    format!("{}/{} ({:.6})", r.numer(), r.denom(), to_f64(r))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

pub(crate) fn serialize_rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Repr {
        num: i64,
        den: i64,
        decimal: f64,
    }
    Repr {
        num: *r.numer(),
        den: *r.denom(),
        decimal: to_f64(r),
    }
    .serialize(s)
}

fn int(x: usize) -> i64 {
    i64::try_from(x).expect("graph size fits in i64")
}

/// An observed integer compared against a rational lower bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub observed: usize,
    #[serde(serialize_with = "serialize_rational")]
    pub bound: Rational,
    /// `observed − bound`
    #[serde(serialize_with = "serialize_rational")]
    pub margin: Rational,
    pub pass: bool,
}

impl BoundCheck {
    fn new(observed: usize, bound: Rational) -> Self {
        let margin = Rational::from_integer(int(observed)) - bound;
        Self {
            observed,
            bound,
            margin,
            pass: margin >= Rational::zero(),
        }
    }
}

/// `|V| / (2Δ · diam)`.
pub fn theorem1_bound(n: usize, delta: usize, diam: u32) -> Rational {
    Rational::new(int(n), 2 * int(delta) * i64::from(diam))
}

/// `(|V| − 1) / (2Δ(diam − 1) + 1)`.
pub fn refined_slice_bound(n: usize, delta: usize, diam: u32) -> Rational {
    Rational::new(int(n) - 1, 2 * int(delta) * (i64::from(diam) - 1) + 1)
}

/// Smallest `k` with `2^k ≥ Δ + 2`, i.e. `⌈log2(Δ + 2)⌉`.
pub fn mps_threshold(delta: usize) -> u32 {
    (delta as u64 + 2).next_power_of_two().trailing_zeros()
}

/// Refined slice bound at one source.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SourceBound {
    pub source: usize,
    #[serde(flatten)]
    pub check: BoundCheck,
    /// Whether `|B_v|` also meets the whole-boundary bound `|V| / (2Δ · diam)`.
    pub meets_basic: bool,
}

impl SourceBound {
    /// Both the refined bound and `|V| / (2Δ · diam)` hold at this source.
    pub fn holds(&self) -> bool {
        self.check.pass && self.meets_basic
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MpsCheck {
    pub cejz_size: usize,
    pub max_degree: usize,
    /// `log2(Δ + 2)`, for display.
    pub bound_log2: f64,
    /// `⌈log2(Δ + 2)⌉`; the comparison is made against this integer.
    pub threshold: u32,
    pub margin: i64,
    pub pass: bool,
}

/// How the slices of different sources overlap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SliceOverlap {
    /// `Σ_v |B_v|`
    pub total_slice_size: usize,
    /// `|∂G|`
    pub union_size: usize,
    /// Largest number of slices containing one vertex.
    pub max_multiplicity: usize,
    #[serde(serialize_with = "serialize_rational")]
    pub mean_multiplicity: Rational,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InequalityReport {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub diameter: u32,
    pub boundary_size: usize,
    pub cejz_size: usize,
    pub theorem1: BoundCheck,
    #[serde(serialize_with = "serialize_rational")]
    pub theorem2_refined_bound: Rational,
    /// One entry per source, ascending.
    pub theorem2: Vec<SourceBound>,
    pub min_slice_size: usize,
    pub mps: MpsCheck,
    pub overlap: SliceOverlap,
}

impl InequalityReport {
    pub fn pass(&self) -> bool {
        self.theorem1.pass && self.theorem2.iter().all(SourceBound::holds) && self.mps.pass
    }

    /// Source with the smallest refined-bound margin (ties: smallest id).
    pub fn tightest_source(&self) -> &SourceBound {
        self.theorem2
            .iter()
            .min_by(|a, b| a.check.margin.cmp(&b.check.margin))
            .expect("at least two sources")
    }
}

fn require_two(report: &BoundaryReport) -> Result<()> {
    if report.n < 2 {
        Err(Error::SingleVertex)
    } else {
        Ok(())
    }
}

fn theorem1_from(report: &BoundaryReport) -> BoundCheck {
    BoundCheck::new(
        report.boundary.len(),
        theorem1_bound(report.n, report.max_degree, report.diameter),
    )
}

fn theorem2_from(report: &BoundaryReport, v: usize) -> SourceBound {
    let slice_size = report.slices[v].len();
    let basic = theorem1_bound(report.n, report.max_degree, report.diameter);
    SourceBound {
        source: v,
        check: BoundCheck::new(
            slice_size,
            refined_slice_bound(report.n, report.max_degree, report.diameter),
        ),
        meets_basic: Rational::from_integer(int(slice_size)) >= basic,
    }
}

fn mps_from(report: &BoundaryReport) -> MpsCheck {
    let threshold = mps_threshold(report.max_degree);
    let cejz_size = report.cejz_boundary.len();
    MpsCheck {
        cejz_size,
        max_degree: report.max_degree,
        bound_log2: ((report.max_degree + 2) as f64).log2(),
        threshold,
        margin: int(cejz_size) - i64::from(threshold),
        pass: cejz_size >= threshold as usize,
    }
}

fn overlap_from(report: &BoundaryReport) -> SliceOverlap {
    let mut multiplicity = vec![0usize; report.n];
    for slice in &report.slices {
        for &u in &slice.members {
            multiplicity[u] += 1;
        }
    }
    let total: usize = multiplicity.iter().sum();
    let union_size = report.boundary.len();
    SliceOverlap {
        total_slice_size: total,
        union_size,
        max_multiplicity: multiplicity.into_iter().max().unwrap_or(0),
        mean_multiplicity: if union_size == 0 {
            Rational::zero()
        } else {
            Rational::new(int(total), int(union_size))
        },
    }
}

/// All bounds from an existing boundary report.
pub fn inequality_report_from(report: &BoundaryReport) -> Result<InequalityReport> {
    require_two(report)?;
    let theorem2: Vec<SourceBound> = (0..report.n).map(|v| theorem2_from(report, v)).collect();
    let min_slice_size = theorem2.iter().map(|s| s.check.observed).min().unwrap_or(0);
    Ok(InequalityReport {
        n: report.n,
        m: report.m,
        max_degree: report.max_degree,
        diameter: report.diameter,
        boundary_size: report.boundary.len(),
        cejz_size: report.cejz_boundary.len(),
        theorem1: theorem1_from(report),
        theorem2_refined_bound: refined_slice_bound(report.n, report.max_degree, report.diameter),
        theorem2,
        min_slice_size,
        mps: mps_from(report),
        overlap: overlap_from(report),
    })
}

pub fn inequality_report(g: &Graph) -> Result<InequalityReport> {
    inequality_report_from(&boundary(g)?)
}

/// `|∂G| ≥ |V| / (2Δ · diam)`.
pub fn check_theorem1(g: &Graph) -> Result<BoundCheck> {
    let report = boundary(g)?;
    require_two(&report)?;
    Ok(theorem1_from(&report))
}

/// Refined slice bound for the single source `v`.
pub fn check_theorem2(g: &Graph, v: usize) -> Result<SourceBound> {
    g.check_vertex(v)?;
    let report = boundary(g)?;
    require_two(&report)?;
    Ok(theorem2_from(&report, v))
}

/// `2^|(∂G)*| ≥ Δ + 2`.
pub fn check_mps(g: &Graph) -> Result<MpsCheck> {
    let report = boundary(g)?;
    require_two(&report)?;
    Ok(mps_from(&report))
}
