pub(crate) mod bitset;
pub mod cli;
pub mod engine;
pub mod error;
pub mod gadgets;
pub mod generate;
pub mod graph;
pub mod io;
pub mod kernel;
pub mod planar;

pub use engine::{
    feasible_successors, is_feasible, solve_tar, solve_tar_with, verify_sequence, Move, Op,
    ReconfInstance, ReconfSequence, SolveOptions, Variant, Violation,
};
pub use error::{Error, Result};
pub use graph::{Coloring, Graph, Vertex, VertexMap, VertexSet};
