//! Search engines generic over a [`Domain`].
//!
//! All three concrete domains use unit-cost operators, but the contract
//! carries a cost per successor so the engines stay honest about it.

mod bfs;
mod dfbnb;
mod frontier;
mod ida;
mod report;

use std::hash::Hash;

use serde::Serialize;

pub use bfs::{bfs_dense, bfs_oracle, IndexedDomain, UNREACHED};
pub use dfbnb::{dfbnb, BranchProblem};
pub use frontier::frontier_a_star;
pub use ida::ida_star;
pub use report::{ResultRow, CSV_COLUMNS};

/// Operator identifier, local to a domain.
pub type OpId = u16;

/// One generated neighbor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Successor<S> {
    pub op: OpId,
    pub state: S,
    pub cost: u32,
    /// The operator that leads from `state` back to its parent, if the
    /// domain can name it. IDA* uses it to skip the parent; frontier-A* uses
    /// it to mark closed neighbors.
    pub reverse: Option<OpId>,
}

pub trait Domain {
    type State: Clone + Eq + Hash;

    fn initial_state(&self) -> Self::State;

    fn is_goal(&self, state: &Self::State) -> bool;

    /// Appends the successors of `state` to `out` in the domain's static
    /// operator order. `out` is not cleared.
    fn successors(&self, state: &Self::State, out: &mut Vec<Successor<Self::State>>);

    /// Number of distinct operator ids. Frontier-A* keeps one bit per
    /// operator, so this must not exceed 128 for that engine.
    fn operator_count(&self) -> usize;
}

/// An admissible estimate of the remaining cost.
pub trait Heuristic<S>: Send + Sync {
    fn name(&self) -> &str;

    fn estimate(&self, state: &S) -> u32;

    /// How many evaluations fell back to a weaker (still admissible) bound
    /// because an exact sub-solver hit its size cap.
    fn fallbacks(&self) -> u64 {
        0
    }
}

impl<S, H: Heuristic<S> + ?Sized> Heuristic<S> for Box<H> {
    fn name(&self) -> &str {
        (**self).name()
    }
    fn estimate(&self, state: &S) -> u32 {
        (**self).estimate(state)
    }
    fn fallbacks(&self) -> u64 {
        (**self).fallbacks()
    }
}

impl<S, H: Heuristic<S> + ?Sized> Heuristic<S> for std::sync::Arc<H> {
    fn name(&self) -> &str {
        (**self).name()
    }
    fn estimate(&self, state: &S) -> u32 {
        (**self).estimate(state)
    }
    fn fallbacks(&self) -> u64 {
        (**self).fallbacks()
    }
}

/// Heuristic that always answers zero (blind search).
#[derive(Clone, Copy, Debug, Default)]
pub struct Blind;

impl<S> Heuristic<S> for Blind {
    fn name(&self) -> &str {
        "blind"
    }
    fn estimate(&self, _: &S) -> u32 {
        0
    }
}

/// Wraps a closure as a heuristic; handy in tests and one-off experiments.
pub struct FnHeuristic<F> {
    name: String,
    f: F,
}

impl<F> FnHeuristic<F> {
    pub fn new(name: impl Into<String>, f: F) -> Self {
        FnHeuristic { name: name.into(), f }
    }
}

impl<S, F> Heuristic<S> for FnHeuristic<F>
where
    F: Fn(&S) -> u32 + Send + Sync,
{
    fn name(&self) -> &str {
        &self.name
    }
    fn estimate(&self, state: &S) -> u32 {
        (self.f)(state)
    }
}

/// Limits on a single search. Exceeding one is a reported outcome.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_generated: Option<u64>,
    pub max_stored: Option<u64>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget {
        max_generated: None,
        max_stored: None,
    };

    pub fn generated(limit: u64) -> Self {
        Budget {
            max_generated: Some(limit),
            max_stored: None,
        }
    }

    pub fn stored(limit: u64) -> Self {
        Budget {
            max_generated: None,
            max_stored: Some(limit),
        }
    }

    fn generated_exceeded(&self, generated: u64) -> bool {
        self.max_generated.is_some_and(|m| generated > m)
    }

    fn stored_exceeded(&self, stored: u64) -> bool {
        self.max_stored.is_some_and(|m| stored > m)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Limit {
    Generated,
    Stored,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Exhaustion {
    pub limit: Limit,
    /// Largest f = g + h among expanded nodes when the search stopped.
    pub largest_f: u32,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct SearchStats {
    pub nodes_generated: u64,
    pub nodes_expanded: u64,
    pub max_stored: u64,
    pub elapsed: f64,
    pub solution_cost: Option<u32>,
    pub exhausted: Option<Exhaustion>,
    pub heuristic_fallbacks: u64,
    /// IDA* cost thresholds in the order they were searched.
    pub thresholds: Vec<u32>,
}

impl SearchStats {
    /// Solved to proven optimality.
    pub fn is_solved(&self) -> bool {
        self.solution_cost.is_some() && self.exhausted.is_none()
    }
}
