//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A text format could not be parsed; `line` is 1-based.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A graph violates a structural invariant (range, self-loop, duplicate edge).
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    /// Paley modulus is not an odd prime congruent to 1 mod 4, or exceeds the cap.
    #[error("invalid Paley modulus {q}: {reason}")]
    InvalidModulus { q: usize, reason: String },

    /// Turan generator requires the part count to divide the vertex count.
    #[error("part count {r} does not divide vertex count {n}")]
    Divisibility { n: usize, r: usize },

    /// A caller-supplied precondition does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Spectral certification requires a regular graph.
    #[error("graph is not regular (degrees differ)")]
    NotRegular,

    /// Dense eigensolver refuses graphs above the configured size cap.
    #[error("graph has {n} vertices, above the eigensolver cap of {cap}")]
    SizeLimit { n: usize, cap: usize },

    /// Exact enumeration exceeded its node budget; reduce the instance or raise the budget.
    #[error("enumeration exceeded the node budget of {budget}")]
    ResourceLimit { budget: u64 },

    /// A sequence that must be pairwise nonadjacent contains an edge.
    #[error("sequence contains adjacent pair ({u}, {v})")]
    AdjacentPair { u: usize, v: usize },

    /// Graphs that must share a vertex set have different sizes.
    #[error("size mismatch: expected {expected} vertices, got {got}")]
    SizeMismatch { expected: usize, got: usize },

    /// An edge coloring violates its invariants.
    #[error("malformed coloring: {0}")]
    MalformedColoring(String),

    /// Rejection sampling gave up; the parameters are likely infeasible.
    #[error("no admissible graph found in {attempts} attempts")]
    ExhaustedAttempts { attempts: u64 },

    /// A certificate replay diverged from the recorded payload.
    #[error("replay mismatch: {0}")]
    Replay(String),

    /// A certificate or recipe could not be interpreted.
    #[error("bad recipe: {0}")]
    Recipe(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
