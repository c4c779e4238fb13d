use std::path::PathBuf;
use std::sync::{Arc, OnceLock};

use super::{
    Board, DynamicHeuristic, DynamicMode, LinearConflict, Manhattan, PairsTriplesDb, Partition, StaticAdditive,
    TileState,
};
use crate::error::{Error, Result};
use crate::pdb::load_pdb;
use crate::registry::Registry;
use crate::search::Heuristic;

pub type TileHeuristic = dyn Heuristic<TileState>;

/// What tile heuristic factories may need. Databases are built (or loaded)
/// on first use and shared by every heuristic made from the same context.
pub struct TileContext {
    pub board: Board,
    pub partition: Option<Partition>,
    /// Prebuilt group tables, one per partition group, in group order.
    pub pdb_files: Vec<PathBuf>,
    pub reflect: bool,
    /// Refuse database builds whose abstract space exceeds this many
    /// configurations.
    pub max_configs: Option<usize>,
    static_h: OnceLock<Arc<StaticAdditive>>,
    pairs: OnceLock<Arc<PairsTriplesDb>>,
    pairs_triples: OnceLock<Arc<PairsTriplesDb>>,
}

impl TileContext {
    pub fn new(board: Board) -> Self {
        TileContext {
            board,
            partition: None,
            pdb_files: Vec::new(),
            reflect: true,
            max_configs: None,
            static_h: OnceLock::new(),
            pairs: OnceLock::new(),
            pairs_triples: OnceLock::new(),
        }
    }

    pub fn with_partition(mut self, partition: Partition) -> Self {
        self.partition = Some(partition);
        self
    }

    pub fn static_heuristic(&self) -> Result<Arc<StaticAdditive>> {
        if let Some(h) = self.static_h.get() {
            return Ok(h.clone());
        }
        let partition = self
            .partition
            .as_ref()
            .ok_or_else(|| Error::invalid("static heuristic needs a partition"))?;
        let h = if self.pdb_files.is_empty() {
            StaticAdditive::build(partition, self.reflect, self.max_configs)?
        } else {
            let tables = self.pdb_files.iter().map(load_pdb).collect::<Result<Vec<_>>>()?;
            StaticAdditive::from_tables(partition, tables, self.reflect)?
        };
        Ok(self.static_h.get_or_init(|| Arc::new(h)).clone())
    }

    /// The pair database, or the pair-and-triple one when `triples`.
    pub fn pairs_db(&self, triples: bool) -> Result<Arc<PairsTriplesDb>> {
        if !triples {
            if let Some(db) = self.pairs_triples.get() {
                return Ok(db.clone());
            }
        }
        let cell = if triples { &self.pairs_triples } else { &self.pairs };
        if let Some(db) = cell.get() {
            return Ok(db.clone());
        }
        let db = PairsTriplesDb::build(self.board, triples)?;
        Ok(cell.get_or_init(|| Arc::new(db)).clone())
    }

    /// Seeds the shared pair-and-triple database (e.g. one built ahead of
    /// time for several contexts).
    pub fn set_pairs_db(&self, db: Arc<PairsTriplesDb>) {
        let cell = if db.has_triples() { &self.pairs_triples } else { &self.pairs };
        let _ = cell.set(db);
    }
}

/// Every tile heuristic by name.
pub fn tile_registry() -> Registry<TileContext, TileHeuristic> {
    let mut r: Registry<TileContext, TileHeuristic> = Registry::new("tile heuristic");
    r.register("manhattan", "sum of tile distances to their goal cells", |c| {
        Ok(Box::new(Manhattan::new(c.board)))
    });
    r.register("linear-conflict", "Manhattan plus two per reversed pair in a goal line", |c| {
        Ok(Box::new(LinearConflict::new(c.board)))
    });
    r.register("static-pdb", "sum of disjoint group databases, maximized with the mirror image", |c| {
        Ok(Box::new(c.static_heuristic()?))
    });
    r.register("dynamic-mm", "Manhattan plus maximum weighted matching of pair excesses", |c| {
        Ok(Box::new(DynamicHeuristic::new(c.pairs_db(false)?, DynamicMode::Matching)?))
    });
    r.register("dynamic-wvc-pairs", "Manhattan plus weighted vertex cover of pair excesses", |c| {
        Ok(Box::new(DynamicHeuristic::new(
            c.pairs_db(false)?,
            DynamicMode::Cover { triples: false },
        )?))
    });
    r.register("dynamic-wvc", "Manhattan plus weighted vertex cover of pair and triple excesses", |c| {
        Ok(Box::new(DynamicHeuristic::new(
            c.pairs_db(true)?,
            DynamicMode::Cover { triples: true },
        )?))
    });
    r
}
