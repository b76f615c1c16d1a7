//! Discretization of planar domains on the scaled lattice `λZ² + offset`.
//!
//! A lattice point becomes a vertex when it lies strictly inside the shape;
//! two vertices are adjacent when they are one lattice step apart.

use serde::Serialize;

use super::grid::{GridGraph, LatticeFrame};
use crate::distance::component_count;
use crate::error::{Error, Result};

/// Planar shapes. Disk-like shapes are centered at the origin; the
/// rectangle and L-shape occupy the positive quadrant from the origin.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum Shape {
    Disk {
        radius: f64,
    },
    Annulus {
        inner: f64,
        outer: f64,
    },
    Rectangle {
        width: f64,
        height: f64,
    },
    /// `(0, size)²` minus the closed square `[size − notch, size]²`.
    LShape {
        size: f64,
        notch: f64,
    },
    /// Disk minus the closed strip `{x ≥ 0, |y| ≤ slit_width / 2}`.
    SlitDisk {
        radius: f64,
        slit_width: f64,
    },
    /// `{0 < |p| < radius, 0 < angle(p) < 2π·alpha}`.
    Sector {
        radius: f64,
        alpha: f64,
    },
}

impl Shape {
    fn validate(&self) -> Result<()> {
        let positive = |name: &str, x: f64| {
            if x.is_finite() && x > 0.0 {
                Ok(())
            } else {
                Err(Error::InvalidParams(format!(
                    "{name} must be positive, got {x}"
                )))
            }
        };
        match *self {
            Shape::Disk { radius } => positive("radius", radius),
            Shape::Annulus { inner, outer } => {
                positive("inner radius", inner)?;
                positive("outer radius", outer)?;
                if inner >= outer {
                    return Err(Error::InvalidParams("annulus needs inner < outer".into()));
                }
                Ok(())
            }
            Shape::Rectangle { width, height } => {
                positive("width", width)?;
                positive("height", height)
            }
            Shape::LShape { size, notch } => {
                positive("size", size)?;
                positive("notch", notch)?;
                if notch >= size {
                    return Err(Error::InvalidParams("L-shape needs notch < size".into()));
                }
                Ok(())
            }
            Shape::SlitDisk { radius, slit_width } => {
                positive("radius", radius)?;
                positive("slit width", slit_width)
            }
            Shape::Sector { radius, alpha } => {
                positive("radius", radius)?;
                positive("alpha", alpha)?;
                if alpha > 1.0 {
                    return Err(Error::InvalidParams(
                        "sector fraction alpha must be ≤ 1".into(),
                    ));
                }
                Ok(())
            }
        }
    }

    /// Strict interior test.
    pub fn contains(&self, [x, y]: [f64; 2]) -> bool {
        let r2 = x * x + y * y;
        match *self {
            Shape::Disk { radius } => r2 < radius * radius,
            Shape::Annulus { inner, outer } => inner * inner < r2 && r2 < outer * outer,
            Shape::Rectangle { width, height } => 0.0 < x && x < width && 0.0 < y && y < height,
            Shape::LShape { size, notch } => {
                let in_square = 0.0 < x && x < size && 0.0 < y && y < size;
                let cut = size - notch;
                in_square && !(x >= cut && y >= cut)
            }
            Shape::SlitDisk { radius, slit_width } => {
                r2 < radius * radius && !(x >= 0.0 && y.abs() <= slit_width / 2.0)
            }
            Shape::Sector { radius, alpha } => {
                if r2 == 0.0 || r2 >= radius * radius {
                    return false;
                }
                let angle = y.atan2(x).rem_euclid(std::f64::consts::TAU);
                0.0 < angle && angle < std::f64::consts::TAU * alpha
            }
        }
    }

    /// Axis-aligned box containing the shape.
    fn bounding_box(&self) -> ([f64; 2], [f64; 2]) {
        match *self {
            Shape::Disk { radius }
            | Shape::SlitDisk { radius, .. }
            | Shape::Sector { radius, .. }
            | Shape::Annulus { outer: radius, .. } => ([-radius, -radius], [radius, radius]),
            Shape::Rectangle { width, height } => ([0.0, 0.0], [width, height]),
            Shape::LShape { size, .. } => ([0.0, 0.0], [size, size]),
        }
    }
}

/// A shape together with the lattice used to discretize it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DomainSpec {
    pub shape: Shape,
    pub lambda: f64,
    pub offset: [f64; 2],
}

impl DomainSpec {
    /// Lattice offset `λ/2` in both axes.
    pub fn new(shape: Shape, lambda: f64) -> Self {
        Self {
            shape,
            lambda,
            offset: [lambda / 2.0, lambda / 2.0],
        }
    }

    pub fn with_offset(mut self, offset: [f64; 2]) -> Self {
        self.offset = offset;
        self
    }

    /// Slit disk with the default slit width `1.5·λ`, wide enough to remove
    /// the two lattice rows nearest the slit axis under the default offset.
    pub fn slit_disk(radius: f64, lambda: f64) -> Self {
        Self::new(
            Shape::SlitDisk {
                radius,
                slit_width: 1.5 * lambda,
            },
            lambda,
        )
    }
}

/// Lattice points strictly inside the domain and the unit-step edges
/// between them.
///
/// A disconnected result is returned inside
/// [`Error::DisconnectedDiscretization`] so it can still be inspected.
pub fn lattice_discretize(spec: &DomainSpec) -> Result<GridGraph> {
    spec.shape.validate()?;
    if !(spec.lambda.is_finite() && spec.lambda > 0.0) {
        return Err(Error::InvalidParams(format!(
            "lattice scale must be positive, got {}",
            spec.lambda
        )));
    }
    let (lo, hi) = spec.shape.bounding_box();
    let range = |axis: usize| {
        let first = ((lo[axis] - spec.offset[axis]) / spec.lambda).floor() as i64 - 1;
        let last = ((hi[axis] - spec.offset[axis]) / spec.lambda).ceil() as i64 + 1;
        first..=last
    };
    let mut coords = Vec::new();
    for ky in range(1) {
        for kx in range(0) {
            let p = [
                spec.lambda * kx as f64 + spec.offset[0],
                spec.lambda * ky as f64 + spec.offset[1],
            ];
            if spec.shape.contains(p) {
                coords.push(vec![kx, ky]);
            }
        }
    }
    if coords.is_empty() {
        return Err(Error::EmptyDomain);
    }
    let frame = LatticeFrame {
        lambda: spec.lambda,
        offset: spec.offset.to_vec(),
    };
    let grid = GridGraph::from_points(coords, 2, Some(frame))?;
    let components = component_count(&grid.graph);
    if components > 1 {
        return Err(Error::DisconnectedDiscretization {
            components,
            grid: Box::new(grid),
        });
    }
    Ok(grid)
}
