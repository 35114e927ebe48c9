use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge {edge} is a self-loop")]
    SelfLoop { edge: usize },
    #[error("edge {edge} has an endpoint outside 0..{n}")]
    NodeOutOfRange { edge: usize, n: usize },
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: ParseReason },
    #[error("graph is not connected, so it has no spanning tree")]
    GraphDisconnected,
    #[error("graph has no nodes")]
    EmptyGraph,
    #[error("no spanning tree with exactly {k} red edges exists")]
    InfeasibleK { k: usize },
    #[error("{m} edges exceeds the enumeration limit of {limit}")]
    TooLarge { m: usize, limit: usize },
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseReason {
    MissingHeader,
    BadHeader,
    FieldCount { expected: usize, found: usize },
    BadInteger(String),
    BadColor(String),
    SelfLoop,
    NodeOutOfRange { node: i64, n: usize },
    CountMismatch { expected: usize, found: usize },
    UnknownEdge { u: usize, v: usize },
}

impl fmt::Display for ParseReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseReason::MissingHeader => write!(f, "missing \"n m\" header"),
            ParseReason::BadHeader => write!(f, "header must be two non-negative integers \"n m\""),
            ParseReason::FieldCount { expected, found } => {
                write!(f, "expected {expected} fields, found {found}")
            }
            ParseReason::BadInteger(tok) => write!(f, "not an integer: {tok:?}"),
            ParseReason::BadColor(tok) => write!(f, "color must be 'r' or 'b', got {tok:?}"),
            ParseReason::SelfLoop => write!(f, "self-loop"),
            ParseReason::NodeOutOfRange { node, n } => {
                write!(f, "node {node} outside 0..{n}")
            }
            ParseReason::CountMismatch { expected, found } => {
                write!(f, "expected {expected} edges, found {found}")
            }
            ParseReason::UnknownEdge { u, v } => {
                write!(f, "no unused graph edge {u}-{v} of that color")
            }
        }
    }
}
