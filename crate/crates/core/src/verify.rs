//! Runs the boundary and inequality checks on one graph and records an
//! outcome per check. A failed check on valid input indicates a bug.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::boundary::{assemble, laplacian_disagreement, BoundaryReport};
use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::euclid::classify_prop4;
use crate::generators::GridGraph;
use crate::graph::{is_path_graph, Graph};
use crate::inequality::{fmt_rational, inequality_report_from, InequalityReport};
use crate::layers::{check_dichotomy, decompose_with};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Check {
    /// `|∂G| ≥ |V| / (2Δ·diam)`
    Thm1,
    /// Refined slice bound at every source.
    Thm2,
    /// `(∂G)* ⊆ ∂G`
    Prop1,
    /// Degree-one vertices are boundary; for trees they are all of it.
    Prop2,
    /// `|∂G| ≥ 2`, and `|∂G| = 2` only for paths.
    Prop3,
    /// Both ends of every diametral pair lie in `∂G` and `(∂G)*`.
    DiameterPair,
    /// `2^|(∂G)*| ≥ Δ + 2`
    Mps,
    /// Neighbor-sum slices equal the positive support of `L f_v`.
    LaplacianOracle,
    /// Layer partition invariants and the per-layer edge dichotomy at every source.
    Dichotomy,
    /// Geodesic non-uniqueness at full-degree boundary vertices (lattice graphs only).
    Prop4,
}

impl Check {
    pub const ALL: [Check; 10] = [
        Check::Thm1,
        Check::Thm2,
        Check::Prop1,
        Check::Prop2,
        Check::Prop3,
        Check::DiameterPair,
        Check::Mps,
        Check::LaplacianOracle,
        Check::Dichotomy,
        Check::Prop4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Thm1 => "thm1",
            Check::Thm2 => "thm2",
            Check::Prop1 => "prop1",
            Check::Prop2 => "prop2",
            Check::Prop3 => "prop3",
            Check::DiameterPair => "diameter-pair",
            Check::Mps => "mps",
            Check::LaplacianOracle => "laplacian-oracle",
            Check::Dichotomy => "dichotomy",
            Check::Prop4 => "prop4",
        }
    }

    /// `all`, or a comma-separated list of check names.
    pub fn parse_list(spec: &str) -> Result<Vec<Check>> {
        if spec.trim() == "all" {
            return Ok(Self::ALL.to_vec());
        }
        let mut checks = spec
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Check>>>()?;
        if checks.is_empty() {
            return Err(Error::InvalidParams("no checks selected".into()));
        }
        checks.sort();
        checks.dedup();
        Ok(checks)
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let canonical = if s == "laplacian" {
            "laplacian-oracle"
        } else {
            s
        };
        Self::ALL
            .into_iter()
            .find(|c| c.name() == canonical)
            .ok_or_else(|| Error::InvalidParams(format!("unknown check {s:?}")))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub check: Check,
    pub status: Status,
    pub detail: String,
    /// Smallest margin, rendered as `num/den (decimal)`, for bound checks.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub margin: Option<String>,
}

impl CheckOutcome {
    fn new(check: Check, pass: bool, detail: String) -> Self {
        Self {
            check,
            status: if pass { Status::Pass } else { Status::Fail },
            detail,
            margin: None,
        }
    }

    fn skipped(check: Check, why: &str) -> Self {
        Self {
            check,
            status: Status::Skipped,
            detail: why.to_string(),
            margin: None,
        }
    }

    fn with_margin(mut self, margin: String) -> Self {
        self.margin = Some(margin);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GraphVerdict {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub diameter: u32,
    pub boundary_size: usize,
    pub cejz_size: usize,
    pub outcomes: Vec<CheckOutcome>,
}

impl GraphVerdict {
    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.outcomes.iter().filter(|o| o.status == Status::Fail)
    }

    pub fn pass(&self) -> bool {
        self.failures().next().is_none()
    }
}

struct Context<'a> {
    g: &'a Graph,
    dm: DistanceMatrix,
    report: BoundaryReport,
    bounds: Option<InequalityReport>,
    grid: Option<&'a GridGraph>,
}

fn list(xs: &[usize]) -> String {
    xs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Runs `checks` on the connected graph `g`. `grid` supplies lattice
/// coordinates for the `prop4` check, which is skipped without them.
pub fn verify_graph(g: &Graph, checks: &[Check], grid: Option<&GridGraph>) -> Result<GraphVerdict> {
    if let Some(gg) = grid {
        if gg.graph != *g {
            return Err(Error::InvalidParams(
                "lattice coordinates belong to a different graph".into(),
            ));
        }
    }
    let dm = DistanceMatrix::compute(g)?;
    let report = assemble(g, &dm);
    let bounds = inequality_report_from(&report).ok();
    let ctx = Context {
        g,
        dm,
        report,
        bounds,
        grid,
    };
    let outcomes = checks.iter().map(|&c| run(&ctx, c)).collect();
    Ok(GraphVerdict {
        n: g.n(),
        m: g.m(),
        max_degree: ctx.report.max_degree,
        diameter: ctx.report.diameter,
        boundary_size: ctx.report.boundary.len(),
        cejz_size: ctx.report.cejz_boundary.len(),
        outcomes,
    })
}

fn run(ctx: &Context<'_>, check: Check) -> CheckOutcome {
    let g = ctx.g;
    let report = &ctx.report;
    let small = g.n() < 2;
    match check {
        Check::Thm1 => match &ctx.bounds {
            None => CheckOutcome::skipped(check, "needs at least two vertices"),
            Some(b) => CheckOutcome::new(
                check,
                b.theorem1.pass,
                format!(
                    "|∂G| = {} vs bound {}",
                    b.theorem1.observed,
                    fmt_rational(&b.theorem1.bound)
                ),
            )
            .with_margin(fmt_rational(&b.theorem1.margin)),
        },
        Check::Thm2 => match &ctx.bounds {
            None => CheckOutcome::skipped(check, "needs at least two vertices"),
            Some(b) => {
                let failing: Vec<usize> = b
                    .theorem2
                    .iter()
                    .filter(|s| !s.holds())
                    .map(|s| s.source)
                    .collect();
                let tight = b.tightest_source();
                CheckOutcome::new(
                    check,
                    failing.is_empty(),
                    if failing.is_empty() {
                        format!(
                            "min |B_v| = {} vs bound {}; tightest source {}",
                            b.min_slice_size,
                            fmt_rational(&b.theorem2_refined_bound),
                            tight.source
                        )
                    } else {
                        format!("bound violated at sources {}", list(&failing))
                    },
                )
                .with_margin(fmt_rational(&tight.check.margin))
            }
        },
        Check::Prop1 => {
            let outside: Vec<usize> = report
                .cejz_boundary
                .iter()
                .copied()
                .filter(|&u| !report.in_boundary(u))
                .collect();
            CheckOutcome::new(
                check,
                outside.is_empty(),
                if outside.is_empty() {
                    format!(
                        "|(∂G)*| = {} ⊆ |∂G| = {}",
                        report.cejz_boundary.len(),
                        report.boundary.len()
                    )
                } else {
                    format!("in (∂G)* but not ∂G: {}", list(&outside))
                },
            )
        }
        Check::Prop2 => {
            if small {
                return CheckOutcome::skipped(check, "needs at least two vertices");
            }
            let leaves = g.leaves();
            let missing: Vec<usize> = leaves
                .iter()
                .copied()
                .filter(|&u| !report.in_boundary(u))
                .collect();
            let is_tree = g.m() + 1 == g.n();
            let tree_ok = !is_tree || report.boundary == leaves;
            CheckOutcome::new(
                check,
                missing.is_empty() && tree_ok,
                if !missing.is_empty() {
                    format!("leaves outside ∂G: {}", list(&missing))
                } else if !tree_ok {
                    format!(
                        "tree boundary {} differs from leaves {}",
                        list(&report.boundary),
                        list(&leaves)
                    )
                } else if is_tree {
                    format!("tree: ∂G = the {} leaves", leaves.len())
                } else {
                    format!("all {} leaves in ∂G", leaves.len())
                },
            )
        }
        Check::Prop3 => {
            if small {
                return CheckOutcome::skipped(check, "needs at least two vertices");
            }
            let size = report.boundary.len();
            let path = is_path_graph(g);
            let pass = size >= 2 && (size != 2 || path);
            CheckOutcome::new(check, pass, format!("|∂G| = {size}, path = {path}"))
        }
        Check::DiameterPair => {
            if small {
                return CheckOutcome::skipped(check, "needs at least two vertices");
            }
            let pairs = ctx.dm.diametral_pairs();
            let bad: Vec<String> = pairs
                .iter()
                .filter(|&&(u, v)| {
                    !(report.in_boundary(u)
                        && report.in_boundary(v)
                        && report.in_cejz(u)
                        && report.in_cejz(v))
                })
                .map(|(u, v)| format!("({u},{v})"))
                .collect();
            CheckOutcome::new(
                check,
                bad.is_empty(),
                if bad.is_empty() {
                    format!("{} diametral pairs", pairs.len())
                } else {
                    format!("pairs outside the boundaries: {}", bad.join(" "))
                },
            )
        }
        Check::Mps => match &ctx.bounds {
            None => CheckOutcome::skipped(check, "needs at least two vertices"),
            Some(b) => CheckOutcome::new(
                check,
                b.mps.pass,
                format!(
                    "|(∂G)*| = {} vs log2(Δ+2) = {:.6} (Δ = {})",
                    b.mps.cejz_size, b.mps.bound_log2, b.mps.max_degree
                ),
            )
            .with_margin(b.mps.margin.to_string()),
        },
        Check::LaplacianOracle => match laplacian_disagreement(g, &ctx.dm) {
            None => CheckOutcome::new(check, true, format!("{} sources agree", g.n())),
            Some(v) => CheckOutcome::new(check, false, format!("routes disagree at source {v}")),
        },
        Check::Dichotomy => {
            let delta = g.max_degree();
            let mut min_slack: Option<i64> = None;
            for v in 0..g.n() {
                let field = ctx.dm.field(v);
                let ld = decompose_with(g, &field, &report.slices[v]);
                let outcome = ld
                    .validate(g.n())
                    .and_then(|()| check_dichotomy(&ld, delta));
                match outcome {
                    Ok(layers) => {
                        for l in layers {
                            min_slack = Some(min_slack.map_or(l.slack, |s| s.min(l.slack)));
                        }
                    }
                    Err(e) => {
                        return CheckOutcome::new(check, false, format!("source {v}: {e}"));
                    }
                }
            }
            let out = CheckOutcome::new(check, true, format!("{} sources", g.n()));
            match min_slack {
                Some(s) => out.with_margin(s.to_string()),
                None => out,
            }
        }
        Check::Prop4 => match ctx.grid {
            None => CheckOutcome::skipped(check, "no lattice coordinates"),
            Some(gg) => match classify_prop4(gg, &ctx.dm, report, false) {
                Ok(entries) => {
                    let bad = entries
                        .iter()
                        .flat_map(|e| &e.witnesses)
                        .filter(|w| !w.verify(&ctx.dm))
                        .count();
                    CheckOutcome::new(
                        check,
                        bad == 0,
                        format!(
                            "{} full-degree boundary vertices, {} unverifiable witnesses",
                            entries.len(),
                            bad
                        ),
                    )
                }
                Err(e) => CheckOutcome::new(check, false, e.to_string()),
            },
        },
    }
}
