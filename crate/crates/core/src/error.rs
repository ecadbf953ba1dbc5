use thiserror::Error;

use crate::multigraph::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(VertexId),
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("no edge between {0} and {1}")]
    MissingEdge(VertexId, VertexId),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExpansionError {
    #[error("K is empty")]
    EmptyK,
    #[error("|L| = {l} is smaller than q|K| = {needed}")]
    TooFewLeaves { l: usize, needed: usize },
    #[error("vertex {0} of L has no neighbor in K")]
    IsolatedLeaf(VertexId),
    #[error("edge ({0}, {1}) does not join K to L")]
    StrayEdge(VertexId, VertexId),
    #[error("q must be positive")]
    ZeroQ,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("graph has {n} vertices, above the oracle cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("graph has a multi-edge between {0} and {1}")]
    NotSimple(VertexId, VertexId),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error("graph has a multi-edge between {0} and {1}")]
    NotSimple(VertexId, VertexId),
    #[error("deleting the given set leaves a component that is neither a clique nor a tree")]
    InfeasibleModulator,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("component is neither a clique nor a tree")]
    BadComponent,
    #[error("terminal {0} lies outside the host component")]
    StrayTerminal(VertexId),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing header line 'p ctov <n> <m> <k>'")]
    MissingHeader,
    #[error("duplicate header")]
    DuplicateHeader,
    #[error("malformed line")]
    Malformed,
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("multiplicity must be positive")]
    ZeroMultiplicity,
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(VertexId),
    #[error("pair ({0}, {1}) listed twice")]
    DuplicatePair(VertexId, VertexId),
    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("unknown rule '{0}'")]
    UnknownRule(String),
}

impl ParseError {
    pub(crate) fn new(line: usize, kind: ParseErrorKind) -> Self {
        ParseError { line, kind }
    }
}
