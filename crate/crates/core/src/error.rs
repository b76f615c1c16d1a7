use thiserror::Error;

use crate::generators::GridGraph;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("graph is disconnected: vertex {unreachable} is unreachable from vertex {from}")]
    Disconnected { from: usize, unreachable: usize },

    #[error("operation requires at least two vertices")]
    SingleVertex,

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("layer dichotomy violated at layer {layer}: {detail}")]
    DichotomyViolation { layer: usize, detail: String },

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("no lattice point lies strictly inside the domain")]
    EmptyDomain,

    #[error("lattice discretization has {components} connected components")]
    DisconnectedDiscretization {
        components: usize,
        grid: Box<GridGraph>,
    },

    #[error("no geodesic non-uniqueness witness found for boundary vertex {0}")]
    WitnessNotFound(usize),

    #[error("opening fraction {alpha} exceeds {max}; the sector diameter is no longer its radius")]
    AlphaTooLarge { alpha: f64, max: f64 },
}
