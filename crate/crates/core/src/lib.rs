//! Proper orientations of graphs.
//!
//! An orientation is proper when adjacent vertices receive distinct
//! indegrees. The crate provides an exact branch-and-bound solver, constructive
//! upper bounds for several graph classes, class recognizers, hardness gadgets,
//! kernels and a command line front end.

pub mod cli;
pub mod construct;
pub mod exact;
pub mod graph;
pub mod instances;
pub mod io;
pub mod orientation;
pub mod recognize;

pub use graph::{disjoint_union, generic_bounds, join, Graph, GraphError};
pub use orientation::{
    is_compensated_proper, is_proper, max_indegree, CompensationSpec, Orientation, OrientationError, PartialOrientation,
};
