//! Burling graphs, their derived constructions and invariants, and a
//! region-based partition-or-minor algorithm.

pub mod burling;
pub mod covers;
pub mod embed;
pub mod error;
pub mod format;
pub mod graph;
pub mod invariants;
pub mod region;

pub use embed::{find_embedding, verify_embedding, EmbeddingMap, SearchOutcome};
pub use error::{Error, Result};
pub use graph::{Graph, MarkedGraph, Vertex, VertexSetFamily};
