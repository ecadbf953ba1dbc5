pub mod error;
pub mod generate;
pub mod io;
pub mod kernel;
pub mod longest_cycle;
pub mod multigraph;
pub mod par;
pub mod solvers;
pub mod structure;
