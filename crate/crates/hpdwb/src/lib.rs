//! Combinatorics of windows and weights for symplectic duality pairs:
//! partitions and their rectangle duals, exact sparse Laurent polynomial
//! arithmetic, characters of classical groups with tensor and branching
//! rules, grade-restriction windows with their Lefschetz band structure,
//! local-cohomology multiplicity counting, and an acceptance battery tying
//! the pieces together.
//!
//! The `examples/` directory is the primary tour of the library; the
//! `hpdwb` binary exposes the same operations as subcommands.

pub mod error;
pub mod partition;
pub mod laurent;
pub mod weyl;
pub mod characters;
pub mod lrcalc;
pub mod report;
pub mod hpd;
pub mod vdb;
pub mod acceptance;
pub mod cli;

pub use error::{Error, Result};
pub use partition::Partition;
