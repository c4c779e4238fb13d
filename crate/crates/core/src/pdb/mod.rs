//! Additive pattern databases: indexing, construction and persistence.

mod build;
pub(crate) mod mapping;
mod store;

pub use build::{build_additive_pdb, Abstraction, CostPolicy};
pub use mapping::{compact_rank, compact_unrank, falling_factorial, sparse_index, Mapping, MappingScheme};
pub use store::{load_pdb, save_pdb, DomainTag, PatternDatabase, FORMAT_VERSION, MAGIC, SENTINEL};
