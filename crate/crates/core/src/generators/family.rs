//! Named graph families with textual parameters, as used on the command
//! line (`--family grid --params 5,5`).

use super::{
    complete, cycle, erdos_renyi, grid_d, hypercube, lattice_discretize, path, random_tree, star,
    DomainSpec, GridGraph, Shape,
};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    Hypercube(u32),
    Grid(Vec<usize>),
    /// Cycle carrying periodic 1-d lattice coordinates.
    Ring(usize),
    Tree(usize),
    ErdosRenyi {
        n: usize,
        p: f64,
    },
    Domain(DomainSpec),
}

/// A generated graph, with lattice coordinates when the family has them.
#[derive(Clone, Debug, PartialEq)]
pub struct Built {
    pub graph: Graph,
    pub grid: Option<GridGraph>,
}

impl From<Graph> for Built {
    fn from(graph: Graph) -> Self {
        Self { graph, grid: None }
    }
}

impl From<GridGraph> for Built {
    fn from(grid: GridGraph) -> Self {
        Self {
            graph: grid.graph.clone(),
            grid: Some(grid),
        }
    }
}

fn numbers<T: std::str::FromStr>(params: &str) -> Result<Vec<T>> {
    params
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| Error::InvalidParams(format!("cannot parse parameter {t:?}")))
        })
        .collect()
}

fn exactly<T: Copy, const K: usize>(family: &str, values: &[T]) -> Result<[T; K]> {
    values.try_into().map_err(|_| {
        Error::InvalidParams(format!(
            "family {family} takes {K} parameter(s), got {}",
            values.len()
        ))
    })
}

impl Family {
    pub const NAMES: &'static [&'static str] = &[
        "path",
        "cycle",
        "complete",
        "star",
        "hypercube",
        "grid",
        "ring",
        "tree",
        "er",
        "disk",
        "annulus",
        "rectangle",
        "lshape",
        "slitdisk",
        "sector",
    ];

    /// Parses a family name and its comma-separated parameters.
    ///
    /// | family    | params                     |
    /// |-----------|----------------------------|
    /// | path, cycle, complete, ring, tree | `n` |
    /// | star      | number of leaves           |
    /// | hypercube | `d`                        |
    /// | grid      | side lengths, e.g. `5,5`   |
    /// | er        | `n,p`                      |
    /// | disk      | `radius,λ`                 |
    /// | annulus   | `inner,outer,λ`            |
    /// | rectangle | `width,height,λ`           |
    /// | lshape    | `size,notch,λ`             |
    /// | slitdisk  | `radius,λ[,slit_width]`    |
    /// | sector    | `radius,alpha,λ`           |
    pub fn parse(name: &str, params: &str) -> Result<Self> {
        let one = |params: &str| -> Result<usize> {
            let [n] = exactly::<usize, 1>(name, &numbers(params)?)?;
            Ok(n)
        };
        Ok(match name {
            "path" => Family::Path(one(params)?),
            "cycle" => Family::Cycle(one(params)?),
            "complete" => Family::Complete(one(params)?),
            "star" => Family::Star(one(params)?),
            "ring" => Family::Ring(one(params)?),
            "tree" => Family::Tree(one(params)?),
            "hypercube" => Family::Hypercube(
                u32::try_from(one(params)?)
                    .map_err(|_| Error::InvalidParams("hypercube dimension too large".into()))?,
            ),
            "grid" => {
                let dims = numbers::<usize>(params)?;
                if dims.is_empty() {
                    return Err(Error::InvalidParams("grid needs at least one side".into()));
                }
                Family::Grid(dims)
            }
            "er" => {
                let [n, p] = exactly::<f64, 2>(name, &numbers(params)?)?;
                if n.fract() != 0.0 || n < 1.0 {
                    return Err(Error::InvalidParams(format!(
                        "er needs integer n ≥ 1, got {n}"
                    )));
                }
                Family::ErdosRenyi { n: n as usize, p }
            }
            "disk" => {
                let [radius, lambda] = exactly::<f64, 2>(name, &numbers(params)?)?;
                Family::Domain(DomainSpec::new(Shape::Disk { radius }, lambda))
            }
            "annulus" => {
                let [inner, outer, lambda] = exactly::<f64, 3>(name, &numbers(params)?)?;
                Family::Domain(DomainSpec::new(Shape::Annulus { inner, outer }, lambda))
            }
            "rectangle" => {
                let [width, height, lambda] = exactly::<f64, 3>(name, &numbers(params)?)?;
                Family::Domain(DomainSpec::new(Shape::Rectangle { width, height }, lambda))
            }
            "lshape" => {
                let [size, notch, lambda] = exactly::<f64, 3>(name, &numbers(params)?)?;
                Family::Domain(DomainSpec::new(Shape::LShape { size, notch }, lambda))
            }
            "slitdisk" => {
                let values = numbers::<f64>(params)?;
                match values[..] {
                    [radius, lambda] => Family::Domain(DomainSpec::slit_disk(radius, lambda)),
                    [radius, lambda, slit_width] => Family::Domain(DomainSpec::new(
                        Shape::SlitDisk { radius, slit_width },
                        lambda,
                    )),
                    _ => {
                        return Err(Error::InvalidParams(
                            "slitdisk takes radius,λ[,slit_width]".into(),
                        ))
                    }
                }
            }
            "sector" => {
                let [radius, alpha, lambda] = exactly::<f64, 3>(name, &numbers(params)?)?;
                Family::Domain(DomainSpec::new(Shape::Sector { radius, alpha }, lambda))
            }
            other => {
                return Err(Error::InvalidParams(format!(
                    "unknown family {other:?}; expected one of {}",
                    Self::NAMES.join(", ")
                )))
            }
        })
    }

    /// Family instance of a given size for sweeps: `grid` → `size × size`,
    /// `hypercube` → dimension `size`, `er` → `G(size, p)`, others → `n = size`.
    pub fn sized(name: &str, size: usize, p: f64) -> Result<Self> {
        match name {
            "grid" => Ok(Family::Grid(vec![size, size])),
            "er" => Ok(Family::ErdosRenyi { n: size, p }),
            "path" | "cycle" | "complete" | "star" | "ring" | "tree" | "hypercube" => {
                Self::parse(name, &size.to_string())
            }
            other => Err(Error::InvalidParams(format!(
                "family {other:?} cannot be swept by size"
            ))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Complete(_) => "complete",
            Family::Star(_) => "star",
            Family::Hypercube(_) => "hypercube",
            Family::Grid(_) => "grid",
            Family::Ring(_) => "ring",
            Family::Tree(_) => "tree",
            Family::ErdosRenyi { .. } => "er",
            Family::Domain(spec) => match spec.shape {
                Shape::Disk { .. } => "disk",
                Shape::Annulus { .. } => "annulus",
                Shape::Rectangle { .. } => "rectangle",
                Shape::LShape { .. } => "lshape",
                Shape::SlitDisk { .. } => "slitdisk",
                Shape::Sector { .. } => "sector",
            },
        }
    }

    /// Canonical parameter string; `Family::parse(f.name(), &f.params())`
    /// reproduces `f` (slit disks always spell out the slit width).
    pub fn params(&self) -> String {
        let join = |xs: &[f64]| xs.iter().map(f64::to_string).collect::<Vec<_>>().join(",");
        match self {
            Family::Path(n)
            | Family::Cycle(n)
            | Family::Complete(n)
            | Family::Star(n)
            | Family::Ring(n)
            | Family::Tree(n) => n.to_string(),
            Family::Hypercube(d) => d.to_string(),
            Family::Grid(dims) => dims
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(","),
            Family::ErdosRenyi { n, p } => format!("{n},{p}"),
            Family::Domain(spec) => {
                let l = spec.lambda;
                match spec.shape {
                    Shape::Disk { radius } => join(&[radius, l]),
                    Shape::Annulus { inner, outer } => join(&[inner, outer, l]),
                    Shape::Rectangle { width, height } => join(&[width, height, l]),
                    Shape::LShape { size, notch } => join(&[size, notch, l]),
                    Shape::SlitDisk { radius, slit_width } => join(&[radius, l, slit_width]),
                    Shape::Sector { radius, alpha } => join(&[radius, alpha, l]),
                }
            }
        }
    }

    pub fn is_seeded(&self) -> bool {
        matches!(self, Family::Tree(_) | Family::ErdosRenyi { .. })
    }

    pub fn build(&self, seed: u64) -> Result<Built> {
        Ok(match self {
            Family::Path(n) => path(*n)?.into(),
            Family::Cycle(n) => cycle(*n)?.into(),
            Family::Complete(n) => complete(*n)?.into(),
            Family::Star(n) => star(*n)?.into(),
            Family::Hypercube(d) => hypercube(*d)?.into(),
            Family::Grid(dims) => grid_d(dims)?.into(),
            Family::Ring(n) => GridGraph::ring(*n)?.into(),
            Family::Tree(n) => random_tree(*n, seed)?.into(),
            Family::ErdosRenyi { n, p } => erdos_renyi(*n, *p, seed)?.into(),
            Family::Domain(spec) => lattice_discretize(spec)?.into(),
        })
    }
}
