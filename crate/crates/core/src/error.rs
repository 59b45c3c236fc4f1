use thiserror::Error;

use crate::graph::VertexId;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotAPrimePower(u64),
    #[error("field order {0} exceeds the supported maximum of 2^20")]
    FieldTooLarge(u64),
    #[error("index {index} is not an element of GF({q})")]
    NotInField { index: u32, q: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("vertex {0} not found in graph")]
    VertexNotFound(String),
    #[error("invalid vertex {0}")]
    InvalidVertex(String),
    #[error("vertex id {0} out of range")]
    IdOutOfRange(VertexId),
    #[error("operation needs a constructed graph with field context")]
    MissingContext,
    #[error("vertex map is not total: no image for vertex {0}")]
    MapNotTotal(VertexId),
    #[error("vertex map is not injective: vertices {0} and {1} share an image")]
    MapNotInjective(VertexId, VertexId),
    #[error("alpha and beta must be at distance 3, found {0:?}")]
    BadDistance(Option<u32>),
    #[error("invalid xi: {0}")]
    BadXi(String),
    #[error("invalid q for this construction: {0}")]
    BadQ(String),
    #[error("set is not perfect dominating: {0}")]
    PdsViolation(String),
    #[error("{what}: expected {expected}, found {actual}")]
    ExpectationMismatch {
        what: &'static str,
        expected: String,
        actual: String,
    },
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph too large for {format}: {order} vertices")]
    TooLarge { format: &'static str, order: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
