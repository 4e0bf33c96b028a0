//! Single conflict coloring of `r`-uniform hypergraphs under random local
//! `k`-partitions, and list coloring of linear hypergraphs from random
//! palettes.
//!
//! The crate is split into four layers:
//!
//! * [`hypergraph`]: the immutable hypergraph type, structural measures
//!   (degeneracy, density, linearity), generators and the text format.
//! * [`conflict`]: local `k`-partitions, conflict colorings, the greedy
//!   procedure, exact and backtracking solvers, exhaustive oracles and the
//!   closed-form bounds.
//! * [`palette`]: list assignments, color degrees, the local-lemma
//!   resampler and bad-color pruning.
//! * [`lab`]: seeded Monte Carlo experiments and CSV output.

pub mod conflict;
pub mod error;
pub mod hypergraph;
pub mod lab;
pub mod palette;
pub mod stats;

pub use conflict::{
    Budget, Coloring, ConflictSolver, Estimate, LocalKPartition, SolveOutcome, SolveStatus,
};
pub use error::{Error, Result};
pub use hypergraph::{DegeneracyOrder, Hypergraph, MaxDensity};
pub use palette::{ColorDegreeTable, ListAssignment, ListViolation};

/// Colors are dense positive integers starting at 1.
pub type Color = u32;
