//! Combinatorial primitives used by the kernel and the longest-cycle solver.

pub mod bipartite;
pub mod expansion;
pub mod gallai;
pub mod matching;
pub mod p3;

pub use bipartite::{hopcroft_karp, max_bipartite_matching, BipartiteMatching};
pub use expansion::{expansion_violations, q_expansion, Expansion};
pub use gallai::{gallai_flower_or_blocker, is_blocker, is_flower, max_flower, FlowerOrBlocker};
pub use p3::{maximal_p3_packing, p3_star_order, P3Packing};
