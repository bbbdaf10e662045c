//! Independence gap and hereditary independence gap of graphs.
//!
//! The crate computes α(G), i(G) and their difference exactly at desk scale,
//! certifies gap bounds through k-tight clique partitions, recognizes small
//! hereditary gap by forbidden induced subgraphs, and builds the hardness
//! gadgets whose iff-properties the test suites verify.

pub mod bits;
pub mod coloring;
pub mod error;
pub mod families;
pub mod graph;
pub mod hereditary;
pub mod io;
pub mod mis;
pub mod oracles;
pub mod partitions;
pub mod reductions;
pub mod selftest;
mod vertex_set;

pub use error::{Error, Result};
pub use families::{build_named, GraphFamily};
pub use graph::{Graph, MAX_VERTICES};
pub use oracles::GapReport;
pub use partitions::{CliquePartition, TightnessCertificate};
pub use vertex_set::VertexSet;
