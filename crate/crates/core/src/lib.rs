//! Reconfiguration of k-path vertex covers.
//!
//! Polynomial solvers for paths, cycles and trees under token sliding (TS),
//! token jumping (TJ) and token addition/removal (TAR), an exhaustive oracle
//! for small graphs, and generators for the hardness gadgets.

pub mod cycle;
pub mod error;
pub mod graph;
pub mod instance;
pub mod path;
pub mod oracle;
pub mod par;
pub mod reconfig;
pub mod reductions;
pub mod solve;
mod tar;
pub mod tree;

pub use error::{Error, Result, VerifyError, VerifyErrorKind};
pub use graph::{psi_k_closed_form, CoverSet, Graph, GraphShape};
pub use reconfig::{tar_to_tj, tj_to_tar, verify, NoReason, ReconfSequence, Rule, SolveOutcome, Step};
pub use oracle::{enumerate_covers, oracle_min_cover_size, oracle_reachable, oracle_shortest_sequence, OracleAnswer, OracleConfig, ReconfGraph};
pub use path::{push, solve_path_tar, solve_path_tj, solve_path_ts};
pub use tree::{min_cover_tree, partition_tree, solve_tree_tar, solve_tree_tj, TreePartition};
pub use cycle::{
    cut_cycle, find_movable_token, lemma11_family, lemma11_witness, rotate, solve_cycle, solve_cycle_tar,
    CutInstance, Direction,
};
pub use instance::{GraphFile, Instance};
pub use solve::{solve, solve_by_oracle};
pub use reductions::{
    build_gadget, gadget_reconf_graph, orientation_graph, pendant_transform, valid_orientations, GadgetKind,
    GadgetQuotient, NclGadget, Orientation, PendantTransform, Port, PortDir, PortState, Signature,
};
