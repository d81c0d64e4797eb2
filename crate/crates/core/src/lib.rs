//! Partial orientations, Ramsey verification and coloring pipelines for
//! chromatic Ramsey goodness of paths.

pub mod canon;
pub mod cli;
pub mod corpus;
pub mod decompose;
pub mod detect;
pub mod format;
pub mod generate;
pub mod goodness;
pub mod graph;
pub mod hypergraph;
pub mod orientation;

#[cfg(test)]
mod testing;

pub use detect::Target;
pub use graph::{ColoredGraph, Graph, GraphError, Mark, Multigraph, PartialOrientation};
