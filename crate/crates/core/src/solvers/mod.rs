//! Solvers and oracles for the deletion problem and for longest cycles.

pub mod approx;
pub mod brute;
pub mod exact;
pub mod obstruction;

pub use approx::approx_ctov;
pub use brute::{brute_force_ctov, brute_force_longest_cycle, DEFAULT_CTOV_CAP, DEFAULT_CYCLE_CAP};
pub use exact::{exact_ctov, minimum_ctov};
pub use obstruction::{find_obstruction, is_valid_obstruction, Obstruction, ObstructionKind};
