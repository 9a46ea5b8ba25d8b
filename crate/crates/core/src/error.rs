use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),

    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: Vertex, vertex_count: usize },

    #[error("graph is disconnected: vertex {unreachable} is unreachable from vertex {from}")]
    Disconnected { from: Vertex, unreachable: Vertex },

    #[error("graph is empty")]
    EmptyGraph,

    #[error("{u} and {v} are not adjacent")]
    NotAnEdge { u: Vertex, v: Vertex },

    #[error("invalid spec: {0}")]
    InvalidSpec(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("parameter {0} is outside the domain of the closed-form classification")]
    OutOfDomain(i64),

    #[error("length mismatch: permutation on {found} points, graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("invalid residue: {0}")]
    InvalidResidue(String),

    #[error("edge list parse error on line {line}: {message}")]
    EdgeListParse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
