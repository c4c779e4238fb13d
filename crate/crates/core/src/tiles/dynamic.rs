use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use super::{PairsTriplesDb, TileState};
use crate::error::{Error, Result};
use crate::search::Heuristic;
use crate::solvers::{max_weighted_matching, min_weighted_cover, COMPONENT_CAP};

/// How the conflict graph is turned into extra moves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DynamicMode {
    /// Maximum weighted matching over pair edges.
    Matching,
    /// Minimum weighted vertex cover with even vertex values.
    Cover { triples: bool },
}

/// Manhattan distance plus the best disjoint combination of pair (and
/// triple) excesses for the current state.
pub struct DynamicHeuristic {
    db: Arc<PairsTriplesDb>,
    mode: DynamicMode,
    cap: usize,
    name: &'static str,
    fallbacks: AtomicU64,
}

impl DynamicHeuristic {
    pub fn new(db: Arc<PairsTriplesDb>, mode: DynamicMode) -> Result<Self> {
        if mode == (DynamicMode::Cover { triples: true }) && !db.has_triples() {
            return Err(Error::invalid("database was built without triples"));
        }
        let name = match mode {
            DynamicMode::Matching => "dynamic-mm",
            DynamicMode::Cover { triples: false } => "dynamic-wvc-pairs",
            DynamicMode::Cover { triples: true } => "dynamic-wvc",
        };
        Ok(DynamicHeuristic {
            db,
            mode,
            cap: COMPONENT_CAP,
            name,
            fallbacks: AtomicU64::new(0),
        })
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    /// Extra moves on top of Manhattan distance.
    pub fn excess(&self, state: &TileState) -> u32 {
        let mut g = self.db.conflict_graph(state).graph;
        let (value, capped) = match self.mode {
            DynamicMode::Matching => {
                let m = max_weighted_matching(&g, Some(self.cap));
                (m.value, m.capped)
            }
            DynamicMode::Cover { triples: false } => {
                g.hyperedges.clear();
                let c = min_weighted_cover(&g, true, Some(self.cap));
                (c.value, c.capped)
            }
            // An oversized component drops its triples before anything
            // weaker is tried, so this mode never falls below the pair-only
            // cover.
            DynamicMode::Cover { triples: true } => {
                let mut value = 0;
                let mut capped = false;
                for comp in g.components() {
                    if comp.vertices.len() <= self.cap {
                        value += min_weighted_cover(&comp.graph, true, Some(self.cap)).value;
                    } else {
                        capped = true;
                        value += min_weighted_cover(&comp.graph.pairs_only(), true, Some(self.cap)).value;
                    }
                }
                (value, capped)
            }
        };
        if capped {
            self.fallbacks.fetch_add(1, Ordering::Relaxed);
        }
        value
    }
}

impl Heuristic<TileState> for DynamicHeuristic {
    fn name(&self) -> &str {
        self.name
    }

    fn estimate(&self, state: &TileState) -> u32 {
        self.db.manhattan().total(state) + self.excess(state)
    }

    fn fallbacks(&self) -> u64 {
        self.fallbacks.load(Ordering::Relaxed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiles::{manhattan, Board};

    /// Tiles 3, 2, 1 in cells 1, 2, 3 of a 5x5 board, tiles 13 and 17
    /// swapped to restore parity (neither lies in its goal line afterwards).
    /// On 4x4 the same reversal puts tile 1 in a corner, which adds corner
    /// conflicts with the tile below it.
    pub(crate) fn triangle_state() -> TileState {
        let b = Board::square(5).unwrap();
        let mut cells: Vec<u8> = (0..25).collect();
        cells.swap(1, 3);
        cells.swap(13, 17);
        TileState::from_cells(b, &cells).unwrap()
    }

    #[test]
    fn reversed_row_is_a_triangle() {
        let b = Board::square(5).unwrap();
        let db = Arc::new(PairsTriplesDb::build(b, false).unwrap());
        let s = triangle_state();
        assert!(s.is_solvable());
        let g = db.conflict_graph(&s).graph;
        let mut edges: Vec<_> = g.edges.clone();
        edges.sort();
        assert_eq!(edges, vec![([1, 2], 2), ([1, 3], 2), ([2, 3], 2)]);

        let mm = DynamicHeuristic::new(db.clone(), DynamicMode::Matching).unwrap();
        let wvc = DynamicHeuristic::new(db, DynamicMode::Cover { triples: false }).unwrap();
        assert_eq!(mm.estimate(&s), manhattan(&s) + 2);
        assert_eq!(wvc.estimate(&s), manhattan(&s) + 4);
    }

    #[test]
    fn goal_is_zero() {
        let b = Board::square(3).unwrap();
        let db = Arc::new(PairsTriplesDb::build(b, true).unwrap());
        let h = DynamicHeuristic::new(db, DynamicMode::Cover { triples: true }).unwrap();
        assert_eq!(h.estimate(&TileState::goal(b)), 0);
    }
}
