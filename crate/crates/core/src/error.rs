use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid sector configuration: {0}")]
    InvalidConfig(String),
    #[error("label {0} is not a dominant index")]
    NotDominant(usize),
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(VertexId),
    #[error("truncation window must be at least 1")]
    ZeroWindow,
    #[error("walk from vertex {vertex} leaves the truncation window along ray {ray}; rematerialize with a larger window")]
    TruncationUnderflow { vertex: usize, ray: usize },
    #[error("cell graph is not in standard order")]
    NonStandardOrder,
    #[error("cell graph does not describe a standard graph: {0}")]
    NotStandard(String),
    #[error("odd exponent {exponent} on label {label}; standard graphs only admit squared actions")]
    OddExponent { label: usize, exponent: i32 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("parse error at line {line}, field `{field}`: {message}")]
    Parse {
        line: usize,
        field: String,
        message: String,
    },
}

impl Error {
    pub(crate) fn parse(line: usize, field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            field: field.into(),
            message: message.into(),
        }
    }
}
