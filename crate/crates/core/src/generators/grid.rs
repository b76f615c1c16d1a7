//! Lattice graphs that keep the integer coordinates of their vertices.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Placement of integer lattice coordinates `k` in the plane: `λ·k + offset`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LatticeFrame {
    pub lambda: f64,
    pub offset: Vec<f64>,
}

/// A graph whose vertices are points of `Z^d`, with an edge between two
/// points exactly when they differ by one unit step along one axis.
///
/// Axes may be periodic, in which case steps wrap around modulo the period.
#[derive(Clone, Debug, PartialEq)]
pub struct GridGraph {
    pub graph: Graph,
    pub coords: Vec<Vec<i64>>,
    pub dim: usize,
    /// `Some(p)` for an axis that wraps around with period `p ≥ 3`.
    pub periods: Vec<Option<i64>>,
    pub frame: Option<LatticeFrame>,
}

#[derive(Serialize, Deserialize)]
struct Sidecar {
    dim: usize,
    coords: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    periods: Option<Vec<Option<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    frame: Option<LatticeFrame>,
}

impl GridGraph {
    /// Builds the induced lattice graph on a set of distinct points.
    pub fn from_points(
        coords: Vec<Vec<i64>>,
        dim: usize,
        frame: Option<LatticeFrame>,
    ) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyGraph);
        }
        if dim == 0 || coords.iter().any(|c| c.len() != dim) {
            return Err(Error::InvalidParams(format!(
                "every coordinate must have {dim} > 0 components"
            )));
        }
        let index: HashMap<&[i64], usize> = coords
            .iter()
            .enumerate()
            .map(|(i, c)| (c.as_slice(), i))
            .collect();
        if index.len() != coords.len() {
            return Err(Error::InvalidParams("duplicate lattice point".into()));
        }
        let mut edges = Vec::new();
        let mut probe = vec![0i64; dim];
        for (u, c) in coords.iter().enumerate() {
            for axis in 0..dim {
                probe.copy_from_slice(c);
                probe[axis] += 1;
                if let Some(&w) = index.get(probe.as_slice()) {
                    edges.push((u, w));
                }
            }
        }
        let graph = Graph::from_edges(coords.len(), edges)?;
        Ok(Self {
            graph,
            coords,
            dim,
            periods: vec![None; dim],
            frame,
        })
    }

    /// Box lattice `[0, dims[0]) × … × [0, dims[d-1])`, row-major ids
    /// (last axis fastest).
    pub fn lattice_box(dims: &[usize]) -> Result<Self> {
        if dims.is_empty() || dims.contains(&0) {
            return Err(Error::InvalidParams("grid dimensions must be ≥ 1".into()));
        }
        let total: usize = dims.iter().product();
        let mut coords = Vec::with_capacity(total);
        let mut current = vec![0i64; dims.len()];
        for _ in 0..total {
            coords.push(current.clone());
            for axis in (0..dims.len()).rev() {
                current[axis] += 1;
                if current[axis] < dims[axis] as i64 {
                    break;
                }
                current[axis] = 0;
            }
        }
        Self::from_points(coords, dims.len(), None)
    }

    /// The cycle `C_n` seen as the periodic one-dimensional lattice `Z / nZ`.
    pub fn ring(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParams("ring needs n ≥ 3".into()));
        }
        let graph = Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?;
        Ok(Self {
            graph,
            coords: (0..n as i64).map(|i| vec![i]).collect(),
            dim: 1,
            periods: vec![Some(n as i64)],
            frame: None,
        })
    }

    /// Degree of a vertex with every lattice neighbor present.
    pub fn full_degree(&self) -> usize {
        2 * self.dim
    }

    /// Signed unit step from `u` to `w` along one axis, if they are lattice
    /// neighbors.
    pub fn step(&self, u: usize, w: usize) -> Option<(usize, i64)> {
        let mut found = None;
        for axis in 0..self.dim {
            let mut diff = self.coords[w][axis] - self.coords[u][axis];
            if let Some(p) = self.periods[axis] {
                diff = diff.rem_euclid(p);
                if diff > p / 2 {
                    diff -= p;
                }
            }
            match diff {
                0 => {}
                1 | -1 if found.is_none() => found = Some((axis, diff)),
                _ => return None,
            }
        }
        found
    }

    /// The neighbors `u − e_axis` and `u + e_axis`, when present.
    pub fn axis_neighbors(&self, u: usize, axis: usize) -> (Option<usize>, Option<usize>) {
        let mut minus = None;
        let mut plus = None;
        for &w in self.graph.neighbors(u) {
            match self.step(u, w) {
                Some((a, -1)) if a == axis => minus = Some(w),
                Some((a, 1)) if a == axis => plus = Some(w),
                _ => {}
            }
        }
        (minus, plus)
    }

    /// Real position `λ·k + offset`, or the raw coordinates without a frame.
    pub fn position(&self, u: usize) -> Vec<f64> {
        let k = &self.coords[u];
        match &self.frame {
            Some(frame) => k
                .iter()
                .zip(&frame.offset)
                .map(|(&k, &o)| frame.lambda * k as f64 + o)
                .collect(),
            None => k.iter().map(|&k| k as f64).collect(),
        }
    }

    /// Every edge is a unit lattice step and every vertex has degree ≤ 2d.
    pub fn validate(&self) -> Result<()> {
        for (u, w) in self.graph.edges() {
            if self.step(u, w).is_none() {
                return Err(Error::InvariantViolation(format!(
                    "edge {{{u}, {w}}} is not a unit lattice step"
                )));
            }
        }
        for u in 0..self.graph.n() {
            if self.graph.degree(u) > self.full_degree() {
                return Err(Error::InvariantViolation(format!(
                    "vertex {u} has degree above {}",
                    self.full_degree()
                )));
            }
        }
        Ok(())
    }

    /// Coordinate sidecar document written next to an edge list.
    pub fn sidecar_json(&self) -> serde_json::Value {
        let periodic = self.periods.iter().any(Option::is_some);
        serde_json::to_value(Sidecar {
            dim: self.dim,
            coords: self.coords.clone(),
            periods: periodic.then(|| self.periods.clone()),
            frame: self.frame.clone(),
        })
        .expect("sidecar serializes")
    }

    /// Reattaches a coordinate sidecar to a graph read from an edge list.
    pub fn from_sidecar(graph: Graph, sidecar: &str) -> Result<Self> {
        let doc: Sidecar = serde_json::from_str(sidecar).map_err(|e| Error::Parse {
            line: e.line(),
            msg: e.to_string(),
        })?;
        if doc.coords.len() != graph.n() {
            return Err(Error::InvalidParams(format!(
                "sidecar has {} coordinates for {} vertices",
                doc.coords.len(),
                graph.n()
            )));
        }
        let grid = Self {
            graph,
            coords: doc.coords,
            dim: doc.dim,
            periods: doc.periods.unwrap_or_else(|| vec![None; doc.dim]),
            frame: doc.frame,
        };
        if grid.coords.iter().any(|c| c.len() != grid.dim) || grid.periods.len() != grid.dim {
            return Err(Error::InvalidParams("sidecar dimension mismatch".into()));
        }
        grid.validate()?;
        Ok(grid)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two_is_a_four_cycle() {
        let g = GridGraph::lattice_box(&[2, 2]).unwrap();
        assert_eq!(g.graph.m(), 4);
        assert!((0..4).all(|u| g.graph.degree(u) == 2));
        g.validate().unwrap();
    }

    #[test]
    fn one_by_n_is_a_path() {
        let g = GridGraph::lattice_box(&[1, 6]).unwrap();
        assert_eq!(
            g.graph.edges().collect::<Vec<_>>(),
            (0..5).map(|i| (i, i + 1)).collect::<Vec<_>>()
        );
    }

    #[test]
    fn five_by_five_counts() {
        let g = GridGraph::lattice_box(&[5, 5]).unwrap();
        assert_eq!((g.graph.n(), g.graph.m()), (25, 2 * 5 * 4));
        assert_eq!(g.coords[7], vec![1, 2]);
        assert_eq!(g.axis_neighbors(7, 0), (Some(2), Some(12)));
        assert_eq!(g.axis_neighbors(7, 1), (Some(6), Some(8)));
        assert_eq!(g.axis_neighbors(0, 0), (None, Some(5)));
    }

    #[test]
    fn ring_wraps_around() {
        let g = GridGraph::ring(5).unwrap();
        assert_eq!(g.axis_neighbors(0, 0), (Some(4), Some(1)));
        assert_eq!(g.axis_neighbors(4, 0), (Some(3), Some(0)));
        g.validate().unwrap();
    }

    #[test]
    fn sidecar_round_trip() {
        let g = GridGraph::ring(6).unwrap();
        let text = g.sidecar_json().to_string();
        let back = GridGraph::from_sidecar(g.graph.clone(), &text).unwrap();
        assert_eq!(back, g);
        let wrong = GridGraph::lattice_box(&[2, 3]).unwrap();
        assert!(GridGraph::from_sidecar(wrong.graph.clone(), &text).is_err());
    }
}
