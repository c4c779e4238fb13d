//! Additive pattern database heuristics.
//!
//! The crate is split by problem domain, with the search machinery shared:
//!
//! * [`search`]: IDA*, frontier-A*, depth-first branch-and-bound and a
//!   breadth-first oracle, all generic over a [`search::Domain`].
//! * [`pdb`]: permutation ranking, additive pattern database construction and
//!   the `APDB` file format.
//! * [`solvers`]: exact matching and weighted hypergraph cover solvers used to
//!   combine dynamically-partitioned heuristics.
//! * [`tiles`], [`hanoi`], [`vertex_cover`]: the three domains.
//! * [`registry`]: named heuristic factories so front ends can pick a
//!   strategy at runtime.

pub mod error;
pub mod hanoi;
pub mod pdb;
pub mod registry;
pub mod search;
pub mod solvers;
pub mod tiles;
pub mod vertex_cover;

pub use error::{Error, Result};
pub use registry::Registry;
pub use search::{Budget, Heuristic, SearchStats};
