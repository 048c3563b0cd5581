use thiserror::Error;

use crate::graph::VertexId;
use crate::trace::RuleId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),

    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("graph contains K_{{{i},{j}}} (sides {left:?} and {right:?})")]
    ContainsBiclique {
        i: usize,
        j: usize,
        left: Vec<VertexId>,
        right: Vec<VertexId>,
    },

    #[error(
        "graph is not {d}-degenerate: vertex {vertex} at ordering position {position} \
         has {forward_degree} later neighbours"
    )]
    NotDegenerate {
        d: usize,
        position: usize,
        vertex: VertexId,
        forward_degree: usize,
    },

    #[error("graph is not K_{{1,{j}}}-free: vertex {vertex} has degree {degree}")]
    DegreeTooLarge {
        vertex: VertexId,
        degree: usize,
        j: usize,
    },

    #[error("instance with {vertices} vertices exceeds the oracle cap of {cap}")]
    OracleCapExceeded { vertices: usize, cap: usize },

    #[error("red vertex {red} has black neighbour {black}")]
    RedHasBlackNeighbor { red: VertexId, black: VertexId },

    #[error("rule {rule} still applies after the reduction pass")]
    FixpointViolated { rule: RuleId },

    #[error("trace replay failed: {0}")]
    Replay(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("no K_{{{i},{j}}}-free sample after {retries} attempts")]
    RetriesExhausted { i: usize, j: usize, retries: usize },
}
