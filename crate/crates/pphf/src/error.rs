//! Error types shared across the crate.

use thiserror::Error;

use crate::family::SystemReport;

/// Everything that can go wrong in this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),

    #[error("family JSON is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("invalid hash family: {0}")]
    InvalidFamily(String),

    #[error("edge {index} is empty")]
    EmptyEdge { index: usize },

    #[error("edge {index} duplicates an earlier edge")]
    DuplicateEdge { index: usize },

    #[error("edge {index} repeats vertex {v}")]
    RepeatedVertex { index: usize, v: usize },

    #[error("vertex id {v} out of range [1, {n}]")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("hypergraph has no edges")]
    NoEdges,

    #[error("hash family is empty")]
    EmptyFamily,

    #[error("family is over [1, {family_n}] but hypergraph is over [1, {graph_n}]")]
    DimensionMismatch { family_n: usize, graph_n: usize },

    #[error("order is not a permutation of 1..={n}")]
    InvalidPermutation { n: usize },

    #[error("C({n}, {k}) = {count} exceeds the edge cap {cap}")]
    EdgeCapExceeded { n: usize, k: usize, count: u128, cap: u128 },

    #[error("canonical function enumeration exceeded the cap of {cap}")]
    FunctionCapExceeded { cap: usize },

    #[error("no covering family found in {attempts} attempts")]
    AttemptsExhausted {
        attempts: usize,
        /// Coverage report of the last rejected candidate.
        last_report: Box<SystemReport>,
    },

    #[error("size bound does not apply: requires {requirement} (got t = {t}, p = {p}, b = {b})")]
    BoundNotApplicable {
        t: usize,
        p: usize,
        b: usize,
        requirement: &'static str,
    },

    #[error("time budget exhausted; family sizes up to {completed} were fully searched")]
    TimeBudgetExhausted { completed: usize },

    #[error("exact enumeration is limited to n <= {max}, got n = {n}")]
    TooManyVertices { n: usize, max: usize },

    #[error("bias {prob} is not below 1/(t+1) = {limit} for t = {t}")]
    BiasTooLarge { prob: f64, t: usize, limit: f64 },

    #[error("{0}")]
    InvalidParameter(String),
}

/// A text-format parse failure, pinned to a 1-based physical line.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("expected header \"n m\" with two integers")]
    MalformedHeader,

    #[error("\"{token}\" is not a valid integer")]
    BadInteger { token: String },

    #[error("vertex id {v} out of range [1, {n}]")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("empty edge")]
    EmptyEdge,

    #[error("vertex {v} repeated within the edge")]
    RepeatedVertex { v: usize },

    #[error("duplicate of the edge on line {first_line}")]
    DuplicateEdge { first_line: usize },

    #[error("expected {expected} edges, found only {found}")]
    MissingEdges { expected: usize, found: usize },

    #[error("unexpected content after the declared {expected} edges")]
    TrailingContent { expected: usize },
}
