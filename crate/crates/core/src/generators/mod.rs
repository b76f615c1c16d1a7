//! Deterministic graph families, lattice discretizations and the exhaustive
//! small-graph enumerator.

mod enumerate;
mod family;
mod grid;
mod lattice;
mod random;
pub mod rng;

pub use enumerate::{connected_graphs_of_order, enumerate_connected, MAX_ENUMERATION_ORDER};
pub use family::{Built, Family};
pub use grid::{GridGraph, LatticeFrame};
pub use lattice::{lattice_discretize, DomainSpec, Shape};
pub use random::{erdos_renyi, random_tree};

use crate::error::{Error, Result};
use crate::graph::Graph;

fn at_least(what: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        Err(Error::InvalidParams(format!(
            "{what} needs n ≥ {min}, got {value}"
        )))
    } else {
        Ok(())
    }
}

/// `P_n`: `0 – 1 – … – (n−1)`.
pub fn path(n: usize) -> Result<Graph> {
    at_least("path", n, 1)?;
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// `C_n`, `n ≥ 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    at_least("cycle", n, 3)?;
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    at_least("complete graph", n, 1)?;
    Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// `K_{1, leaves}` with center `0`.
pub fn star(leaves: usize) -> Result<Graph> {
    at_least("star", leaves, 1)?;
    Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i)))
}

/// `Q_d` on `0..2^d`, edges between ids differing in one bit.
pub fn hypercube(d: u32) -> Result<Graph> {
    if !(1..=20).contains(&d) {
        return Err(Error::InvalidParams(format!(
            "hypercube dimension must be in 1..=20, got {d}"
        )));
    }
    let n = 1usize << d;
    Graph::from_edges(
        n,
        (0..n).flat_map(|u| {
            (0..d)
                .map(move |b| (u, u ^ (1 << b)))
                .filter(|&(u, w)| u < w)
        }),
    )
}

/// `rows × cols` grid; vertex `r·cols + c` sits at `(r, c)`.
pub fn grid(rows: usize, cols: usize) -> Result<GridGraph> {
    GridGraph::lattice_box(&[rows, cols])
}

/// Box lattice graph in `dims.len()` dimensions.
pub fn grid_d(dims: &[usize]) -> Result<GridGraph> {
    GridGraph::lattice_box(dims)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_families() {
        assert_eq!(
            path(4).unwrap().edges().collect::<Vec<_>>(),
            vec![(0, 1), (1, 2), (2, 3)]
        );
        assert_eq!(cycle(3).unwrap(), complete(3).unwrap());
        let q3 = hypercube(3).unwrap();
        assert_eq!((q3.n(), q3.m()), (8, 12));
        assert!((0..8).all(|u| q3.degree(u) == 3));
        assert_eq!(star(3).unwrap().degree(0), 3);
        assert!(cycle(2).is_err());
        assert!(path(0).is_err());
        assert!(hypercube(0).is_err());
    }

    #[test]
    fn grid_matches_box_lattice() {
        assert_eq!(grid(1, 5).unwrap().graph, path(5).unwrap());
        let g3 = grid_d(&[2, 2, 2]).unwrap();
        assert_eq!((g3.graph.n(), g3.graph.m()), (8, 12));
        g3.validate().unwrap();
    }
}
