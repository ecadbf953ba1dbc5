//! Longest cycle parameterized by a cliques-or-trees modulator `S`.

mod driver;
mod labels;
mod ldtp;

pub use driver::{longest_cycle, longest_cycle_with, CycleOptions};
pub use labels::{label_components, q_value, LabelTable};
pub use ldtp::{ldtp_clique, ldtp_tree, tree_dp_tables, LdtpInstance, TreeDpTables};
