//! Distance-based boundaries of finite graphs.
//!
//! For a connected simple graph `G = (V, E)` a vertex `u` belongs to the
//! boundary `∂G` when, for some vertex `v`, the neighbors of `u` are on
//! average strictly closer to `v` than `u` is. Equivalently `(L f_v)(u) > 0`
//! where `L = D − A` and `f_v = d(·, v)`. The stricter
//! Chartrand–Erwin–Johns–Zhang boundary `(∂G)*` asks that no neighbor be
//! farther from `v` than `u`.
//!
//! The crate computes both boundaries, the per-source slices whose union is
//! `∂G`, and checks the isoperimetric bounds they satisfy with exact integer
//! and rational arithmetic:
//!
//! ```
//! use graph_boundary::{boundary::boundary, generators::grid};
//!
//! let g = grid(5, 5).unwrap();
//! let report = boundary(&g.graph).unwrap();
//! assert_eq!(report.boundary.len(), 16);
//! assert_eq!(report.cejz_boundary, vec![0, 4, 20, 24]);
//! ```

pub mod boundary;
pub mod distance;
pub mod error;
pub mod euclid;
pub mod generators;
pub mod graph;
pub mod inequality;
pub mod io;
pub mod laplacian;
pub mod layers;
mod par;
pub mod report;
pub mod sweep;
pub mod verify;

pub use boundary::{boundary, boundary_slice, cejz_boundary, BoundaryReport, BoundarySlice};
pub use distance::{bfs_distances, diameter, is_connected, DistanceField, DistanceMatrix};
pub use error::{Error, Result};
pub use graph::{is_path_graph, Graph};
pub use laplacian::laplacian_slice;
