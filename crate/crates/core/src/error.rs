use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} requires order at least {min}, got {got}")]
    OrderTooSmall {
        what: &'static str,
        min: usize,
        got: usize,
    },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("operation needs at least one vertex")]
    EmptyGraph,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{line}duplicate edge {u}-{v}")]
    DuplicateEdge { line: Line, u: usize, v: usize },
    #[error("{line}self-loop on vertex {v}")]
    SelfLoop { line: Line, v: usize },
    #[error("vertices {vertices:?} do not induce a clique")]
    NotAClique { vertices: Vec<usize> },
    #[error("clique sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("a clique specification needs at least one vertex")]
    EmptyClique,
    #[error("vertex {vertex} listed twice in clique specification")]
    RepeatedVertex { vertex: usize },
    #[error("exact search for {invariant} exceeds budget: n = {n} > {limit}")]
    BudgetExceeded {
        invariant: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("eigensolver did not converge")]
    ConvergenceFailure,
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("graph is disconnected: no path between {u} and {v}")]
    Disconnected { u: usize, v: usize },
    #[error("invalid alpha {0:?}: expected a rational p/q in [0, 1]")]
    InvalidAlpha(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::OrderTooSmall { .. } => "order_too_small",
            Error::InvalidVertex { .. } => "invalid_vertex",
            Error::EmptyGraph => "empty_graph",
            Error::Parse { .. } => "parse",
            Error::DuplicateEdge { .. } => "duplicate_edge",
            Error::SelfLoop { .. } => "self_loop",
            Error::NotAClique { .. } => "not_a_clique",
            Error::SizeMismatch { .. } => "size_mismatch",
            Error::EmptyClique => "empty_clique",
            Error::RepeatedVertex { .. } => "repeated_vertex",
            Error::BudgetExceeded { .. } => "budget_exceeded",
            Error::NotSquare { .. } => "not_square",
            Error::ConvergenceFailure => "convergence_failure",
            Error::ParamOutOfRange(_) => "param_out_of_range",
            Error::Disconnected { .. } => "disconnected",
            Error::InvalidAlpha(_) => "invalid_alpha",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Source line of an edge-list document, when the error came from parsing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Line(pub Option<usize>);

impl std::fmt::Display for Line {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.0 {
            Some(line) => write!(f, "line {line}: "),
            None => Ok(()),
        }
    }
}
