use thiserror::Error;

use crate::certify::Witness;
use crate::coloring::ColoringKind;

/// Errors raised while building or parsing graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("both arcs {0}->{1} and {1}->{0} present")]
    AntiparallelArcs(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Errors raised by the coloring, partition and search algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("classes do not partition the vertex set: {0}")]
    NotAPartition(String),
    #[error("instance has {n} vertices, above the exact-search cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("unsupported kind: {0}")]
    UnsupportedKind(String),
    #[error("coloring is not {expected}: {witness:?}")]
    InvalidColoring {
        expected: ColoringKind,
        witness: Witness,
    },
    #[error("need at least 2 color classes, got {0}")]
    TooFewClasses(usize),
    #[error("graph has degeneracy {actual}, above the claimed bound {claimed}")]
    DegeneracyTooHigh { actual: usize, claimed: usize },
    #[error("partition oracle returned an invalid partition: {0}")]
    InvalidOracleResponse(String),
    #[error("no route: {0}")]
    NoRoute(String),
    #[error("heuristic split failed: {violations} violating vertices left after {evaluated} evaluated moves")]
    HeuristicFailure { violations: usize, evaluated: usize },
    #[error("composed partition is not equitable: part sizes range over {min}..={max}")]
    EquitabilityDrift { min: usize, max: usize },
    #[error("search budget of {nodes} nodes exhausted")]
    BudgetExceeded { nodes: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
