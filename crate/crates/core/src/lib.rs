//! Temporal network toolkit.
//!
//! Generates scale-free networks with temporal preferential attachment (and
//! classic baseline models) and analyzes how timestamped networks evolve:
//! snapshot features, join-rate curves, vibrancy, join-time-difference
//! statistics and the emergence of network stars.

pub mod cli;
pub mod edgelist;
pub mod error;
pub mod evolution;
pub mod fitting;
pub mod generators;
pub mod graph;
pub mod ingest;
pub mod metrics;
mod sampling;

pub use error::{Error, Result};
pub use graph::{Edge, GraphBuilder, Snapshot, TemporalGraph, TimeStamp, VertexId};
