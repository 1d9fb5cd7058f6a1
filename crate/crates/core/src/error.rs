use thiserror::Error;

use crate::graph::MAX_VERTICES;

/// Errors raised by the graph readers and writers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty graph6 line")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("graph6 header at offset 0 declares {0} vertices; only n <= 62 is supported")]
    UnsupportedOrder(usize),
    #[error("graph6 body truncated: expected {expected} bytes after the header, found {found} (offset {offset})")]
    Truncated {
        expected: usize,
        found: usize,
        offset: usize,
    },
    #[error("trailing garbage starting at offset {offset}")]
    Trailing { offset: usize },
    #[error("nonzero padding bits in the final byte at offset {offset}")]
    Padding { offset: usize },
    #[error("edge list: {0}")]
    EdgeList(String),
}

/// Errors from graph operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graphs are limited to {MAX_VERTICES} vertices, got {0}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("self-loops are not allowed (vertex {0})")]
    SelfLoop(usize),
    #[error("graph6 output supports at most 62 vertices, got {0}")]
    UnsupportedSize(usize),
    #[error("Hamiltonicity needs at least 3 vertices, got {0}")]
    TooSmallForCycle(usize),
}
