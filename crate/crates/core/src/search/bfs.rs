use std::collections::VecDeque;

use rustc_hash::FxHashMap;

use super::{Domain, Successor};
use crate::error::{Error, Result};

/// Marker for states not reached by [`bfs_dense`].
pub const UNREACHED: u8 = u8::MAX;

/// A domain whose states map bijectively onto `0..index_space()`.
pub trait IndexedDomain: Domain {
    fn index_space(&self) -> usize;
    fn index_of(&self, state: &Self::State) -> usize;
    fn state_at(&self, index: usize) -> Self::State;
}

/// Exact unit-cost distances from `source` to every reachable state.
///
/// `max_states` bounds the size of the map; going past it is an error.
pub fn bfs_oracle<D: Domain>(
    domain: &D,
    source: &D::State,
    max_states: Option<usize>,
) -> Result<FxHashMap<D::State, u32>> {
    let mut dist = FxHashMap::default();
    dist.insert(source.clone(), 0u32);
    let mut queue = VecDeque::from([source.clone()]);
    let mut children: Vec<Successor<D::State>> = Vec::new();
    while let Some(state) = queue.pop_front() {
        let d = dist[&state];
        children.clear();
        domain.successors(&state, &mut children);
        for child in children.drain(..) {
            if child.cost != 1 {
                return Err(Error::invalid("bfs oracle requires unit operator costs"));
            }
            if dist.contains_key(&child.state) {
                continue;
            }
            if max_states.is_some_and(|m| dist.len() >= m) {
                return Err(Error::BudgetExceeded(format!(
                    "more than {} reachable states",
                    dist.len()
                )));
            }
            dist.insert(child.state.clone(), d + 1);
            queue.push_back(child.state);
        }
    }
    Ok(dist)
}

/// Breadth-first distances stored densely by state index, one byte per
/// state. Unreached states hold [`UNREACHED`].
pub fn bfs_dense<D: IndexedDomain>(domain: &D, source: &D::State) -> Result<Vec<u8>> {
    let mut dist = vec![UNREACHED; domain.index_space()];
    dist[domain.index_of(source)] = 0;
    let mut queue = VecDeque::from([domain.index_of(source) as u64]);
    let mut children: Vec<Successor<D::State>> = Vec::new();
    while let Some(idx) = queue.pop_front() {
        let d = dist[idx as usize];
        if d == UNREACHED - 1 {
            return Err(Error::CostOverflow(u32::from(d) + 1));
        }
        let state = domain.state_at(idx as usize);
        children.clear();
        domain.successors(&state, &mut children);
        for child in children.drain(..) {
            let ci = domain.index_of(&child.state);
            if dist[ci] == UNREACHED {
                dist[ci] = d + 1;
                queue.push_back(ci as u64);
            }
        }
    }
    Ok(dist)
}
