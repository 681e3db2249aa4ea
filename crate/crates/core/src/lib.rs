//! Clique-free pseudorandom graphs, their spectral certificates, and
//! verified multicolor Ramsey lower-bound witnesses.
//!
//! The pipeline: construct a K_s-free regular graph (cycle, quadratic
//! residue, complete multipartite, or rejection sampled), certify its
//! (n, d, λ) parameters exactly, rescale it by blowup, overlay several such
//! graphs into an edge coloring of a complete host graph, and verify by
//! exhaustive search that no color contains its forbidden clique. Around
//! that sit the quantitative checks: expander mixing, independent-tuple
//! counting against an exact profile-based oracle, probability bounds for
//! random blowups, and a union bound predicting when witnesses exist.
//! Every emitted result is a document that replays byte-exactly from its
//! recorded recipes and seeds.

pub mod bounds;
pub mod certify;
pub mod cli;
pub mod clique;
pub mod color;
pub mod count;
pub mod error;
pub mod families;
pub mod graph;
pub mod persist;
pub mod recipe;
pub mod rng;
pub mod spectral;
pub mod util;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
