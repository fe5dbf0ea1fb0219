//! Power domination on graphs: propagation, forts, exact and constructive
//! solvers, and generators for the standard extremal families.

pub mod constructive;
pub mod edgelist;
pub mod families;
pub mod forts;
pub mod graph;
pub mod propagation;
pub mod solvers;
pub mod transforms;

pub use graph::{Graph, GraphError, VertexSet};
