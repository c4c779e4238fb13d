use super::{build_tile_pdb, Board, ManhattanTable, TileState};
use crate::error::Result;
use crate::pdb::{CostPolicy, Mapping};
use crate::solvers::WeightedHypergraph;

/// A stored excess: `tiles` at `cells` need `weight` moves beyond the sum of
/// their Manhattan distances.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Excess<const K: usize> {
    pub tiles: [u8; K],
    pub cells: [u8; K],
    pub weight: u8,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PairsTriplesStats {
    /// Pair table cells before filtering: one per tile pair and pair of
    /// distinct cells.
    pub pair_cells: usize,
    pub pairs_retained: usize,
    pub triple_cells: usize,
    pub triples_retained: usize,
}

/// Pair and triple distances that exceed what Manhattan distance already
/// accounts for. Triples are kept only when they beat every split into a
/// pair plus a single tile.
#[derive(Clone, Debug)]
pub struct PairsTriplesDb {
    board: Board,
    manhattan: ManhattanTable,
    pairs: Vec<Excess<2>>,
    triples: Vec<Excess<3>>,
    // indexed by tile * cells + cell
    pairs_by_first: Vec<Vec<u32>>,
    pairs_by_any: Vec<Vec<u32>>,
    triples_by_first: Vec<Vec<u32>>,
    triples_by_any: Vec<Vec<u32>>,
    stats: PairsTriplesStats,
    triples_built: bool,
}

impl PairsTriplesDb {
    /// Runs one additive backward search per tile pair and, with
    /// `with_triples`, per tile triple.
    pub fn build(board: Board, with_triples: bool) -> Result<Self> {
        let n = board.cells();
        let md = ManhattanTable::new(board);
        let tiles: Vec<u8> = (1..n as u8).collect();
        let mut stats = PairsTriplesStats::default();

        // pair_excess[pair_slot(a, b)][ca * n + cb], zero when not stored
        let slot = |a: usize, b: usize| (a - 1) * n + (b - 1);
        let mut pair_excess = vec![Vec::new(); n * n];
        let mut pairs = Vec::new();
        for (i, &a) in tiles.iter().enumerate() {
            for &b in &tiles[i + 1..] {
                let db = build_tile_pdb(board, &[a, b], Mapping::Sparse, CostPolicy::PatternMovesOnly, None)?;
                let mut ex = vec![0u8; n * n];
                for ca in 0..n {
                    for cb in 0..n {
                        if ca == cb {
                            continue;
                        }
                        stats.pair_cells += 1;
                        let d = db.get(ca * n + cb) as u32;
                        let m = md.tile(a as usize, ca) + md.tile(b as usize, cb);
                        if d > m {
                            ex[ca * n + cb] = (d - m) as u8;
                            pairs.push(Excess {
                                tiles: [a, b],
                                cells: [ca as u8, cb as u8],
                                weight: (d - m) as u8,
                            });
                        }
                    }
                }
                pair_excess[slot(a as usize, b as usize)] = ex;
            }
        }
        stats.pairs_retained = pairs.len();

        let mut triples = Vec::new();
        if with_triples {
            let pe = |a: u8, b: u8, ca: usize, cb: usize| -> u32 {
                pair_excess[slot(a as usize, b as usize)][ca * n + cb] as u32
            };
            for (i, &a) in tiles.iter().enumerate() {
                for (j, &b) in tiles.iter().enumerate().skip(i + 1) {
                    for &c in &tiles[j + 1..] {
                        let db = build_tile_pdb(board, &[a, b, c], Mapping::Sparse, CostPolicy::PatternMovesOnly, None)?;
                        for ca in 0..n {
                            for cb in 0..n {
                                if cb == ca {
                                    continue;
                                }
                                for cc in 0..n {
                                    if cc == ca || cc == cb {
                                        continue;
                                    }
                                    stats.triple_cells += 1;
                                    let d = db.get((ca * n + cb) * n + cc) as u32;
                                    let m = md.tile(a as usize, ca) + md.tile(b as usize, cb) + md.tile(c as usize, cc);
                                    if d <= m {
                                        continue;
                                    }
                                    let best_pair = pe(a, b, ca, cb).max(pe(a, c, ca, cc)).max(pe(b, c, cb, cc));
                                    if d - m > best_pair {
                                        triples.push(Excess {
                                            tiles: [a, b, c],
                                            cells: [ca as u8, cb as u8, cc as u8],
                                            weight: (d - m) as u8,
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        stats.triples_retained = triples.len();

        let mut db = PairsTriplesDb {
            board,
            manhattan: md,
            pairs: Vec::new(),
            triples: Vec::new(),
            pairs_by_first: vec![Vec::new(); n * n],
            pairs_by_any: vec![Vec::new(); n * n],
            triples_by_first: vec![Vec::new(); n * n],
            triples_by_any: vec![Vec::new(); n * n],
            stats,
            triples_built: with_triples,
        };
        db.pairs = pairs;
        db.triples = triples;
        for (id, e) in db.pairs.iter().enumerate() {
            db.pairs_by_first[e.tiles[0] as usize * n + e.cells[0] as usize].push(id as u32);
            for k in 0..2 {
                db.pairs_by_any[e.tiles[k] as usize * n + e.cells[k] as usize].push(id as u32);
            }
        }
        for (id, e) in db.triples.iter().enumerate() {
            db.triples_by_first[e.tiles[0] as usize * n + e.cells[0] as usize].push(id as u32);
            for k in 0..3 {
                db.triples_by_any[e.tiles[k] as usize * n + e.cells[k] as usize].push(id as u32);
            }
        }
        Ok(db)
    }

    pub fn board(&self) -> Board {
        self.board
    }

    pub fn manhattan(&self) -> &ManhattanTable {
        &self.manhattan
    }

    pub fn stats(&self) -> PairsTriplesStats {
        self.stats
    }

    pub fn pairs(&self) -> &[Excess<2>] {
        &self.pairs
    }

    pub fn triples(&self) -> &[Excess<3>] {
        &self.triples
    }

    pub fn has_triples(&self) -> bool {
        self.triples_built
    }

    /// Approximate memory held by retained entries.
    pub fn retained_bytes(&self) -> usize {
        self.pairs.len() * std::mem::size_of::<Excess<2>>() + self.triples.len() * std::mem::size_of::<Excess<3>>()
    }

    fn slot(&self, tile: usize, cell: usize) -> usize {
        tile * self.board.cells() + cell
    }

    fn pair_active(&self, id: u32, state: &TileState) -> bool {
        let e = &self.pairs[id as usize];
        (0..2).all(|k| state.position(e.tiles[k] as usize) == e.cells[k] as usize)
    }

    fn triple_active(&self, id: u32, state: &TileState) -> bool {
        let e = &self.triples[id as usize];
        (0..3).all(|k| state.position(e.tiles[k] as usize) == e.cells[k] as usize)
    }

    /// Conflict graph of a state, built from scratch.
    pub fn conflict_graph(&self, state: &TileState) -> ConflictGraph {
        let mut pairs = Vec::new();
        let mut triples = Vec::new();
        for t in 1..self.board.cells() {
            let s = self.slot(t, state.position(t));
            pairs.extend(self.pairs_by_first[s].iter().copied().filter(|&id| self.pair_active(id, state)));
            triples.extend(self.triples_by_first[s].iter().copied().filter(|&id| self.triple_active(id, state)));
        }
        pairs.sort_unstable();
        triples.sort_unstable();
        ConflictGraph::from_ids(self, pairs, triples)
    }
}

/// Excess hypergraph over tiles for one state. Vertex ids are tile numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConflictGraph {
    /// Ids of active pair and triple entries, ascending.
    pub pair_ids: Vec<u32>,
    pub triple_ids: Vec<u32>,
    pub graph: WeightedHypergraph,
}

impl ConflictGraph {
    fn from_ids(db: &PairsTriplesDb, pair_ids: Vec<u32>, triple_ids: Vec<u32>) -> Self {
        let mut graph = WeightedHypergraph::new(db.board.cells());
        for &id in &pair_ids {
            let e = &db.pairs[id as usize];
            graph.add_edge(e.tiles[0] as usize, e.tiles[1] as usize, e.weight as u32);
        }
        for &id in &triple_ids {
            let e = &db.triples[id as usize];
            graph.add_hyperedge(e.tiles.map(|t| t as usize), e.weight as u32);
        }
        ConflictGraph {
            pair_ids,
            triple_ids,
            graph,
        }
    }

    pub fn pair_count(&self) -> usize {
        self.pair_ids.len()
    }

    pub fn triple_count(&self) -> usize {
        self.triple_ids.len()
    }
}

/// Keeps the active entry sets of a state up to date as tiles move, so only
/// entries touching the moved tile are re-examined.
#[derive(Clone, Debug)]
pub struct ConflictTracker<'a> {
    db: &'a PairsTriplesDb,
    state: TileState,
    pair_active: Vec<bool>,
    triple_active: Vec<bool>,
}

impl<'a> ConflictTracker<'a> {
    pub fn new(db: &'a PairsTriplesDb, state: TileState) -> Self {
        let g = db.conflict_graph(&state);
        let mut pair_active = vec![false; db.pairs.len()];
        let mut triple_active = vec![false; db.triples.len()];
        g.pair_ids.iter().for_each(|&i| pair_active[i as usize] = true);
        g.triple_ids.iter().for_each(|&i| triple_active[i as usize] = true);
        ConflictTracker {
            db,
            state,
            pair_active,
            triple_active,
        }
    }

    pub fn state(&self) -> &TileState {
        &self.state
    }

    /// Moves to an adjacent state (one tile swapped with the blank).
    pub fn step(&mut self, next: TileState) {
        let moved = self.state.cells()[next.blank()] as usize;
        debug_assert_eq!(next.position(moved), self.state.blank());
        let db = self.db;
        let from = db.slot(moved, self.state.position(moved));
        let to = db.slot(moved, next.position(moved));
        for &id in &db.pairs_by_any[from] {
            self.pair_active[id as usize] = false;
        }
        for &id in &db.triples_by_any[from] {
            self.triple_active[id as usize] = false;
        }
        for &id in &db.pairs_by_any[to] {
            self.pair_active[id as usize] = db.pair_active(id, &next);
        }
        for &id in &db.triples_by_any[to] {
            self.triple_active[id as usize] = db.triple_active(id, &next);
        }
        self.state = next;
    }

    pub fn graph(&self) -> ConflictGraph {
        let ids = |v: &[bool]| -> Vec<u32> {
            v.iter()
                .enumerate()
                .filter(|(_, &a)| a)
                .map(|(i, _)| i as u32)
                .collect()
        };
        ConflictGraph::from_ids(self.db, ids(&self.pair_active), ids(&self.triple_active))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiles::random_solvable;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn goal_has_empty_graph_and_pairs_are_even() {
        let b = Board::square(4).unwrap();
        let db = PairsTriplesDb::build(b, false).unwrap();
        assert!(db.conflict_graph(&TileState::goal(b)).graph.is_empty());
        assert!(db.pairs().iter().all(|e| e.weight >= 2 && e.weight % 2 == 0));
        assert_eq!(db.stats().pair_cells, 105 * 16 * 15);
    }

    #[test]
    fn tracker_matches_scratch_along_random_walks() {
        let b = Board::square(3).unwrap();
        let db = PairsTriplesDb::build(b, true).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for seed in 0..10 {
            let mut t = ConflictTracker::new(&db, random_solvable(b, seed));
            for _ in 0..300 {
                let succ = t.state().successors();
                let next = succ[rng.gen_range(0..succ.len())].1.clone();
                t.step(next);
                assert_eq!(t.graph(), db.conflict_graph(t.state()));
            }
        }
    }
}
