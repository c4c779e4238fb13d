use std::path::PathBuf;
use std::sync::{Arc, OnceLock};

use super::{DiskPdb, HanoiState, InfinitePeg, Split, SplitHeuristic, SplitMode};
use crate::error::{Error, Result};
use crate::pdb::load_pdb;
use crate::registry::Registry;
use crate::search::Heuristic;

pub type HanoiHeuristic = dyn Heuristic<HanoiState>;

/// Inputs for Hanoi heuristic factories. The disk database is built (or
/// loaded from `db_file`) on first use.
pub struct HanoiContext {
    pub n: usize,
    pub goal_peg: u8,
    pub split: Option<Split>,
    /// Disks in the database; defaults to the split's largest group.
    pub db_disks: Option<usize>,
    pub db_file: Option<PathBuf>,
    pub max_entries: Option<usize>,
    db: OnceLock<Arc<DiskPdb>>,
}

impl HanoiContext {
    pub fn new(n: usize, goal_peg: u8) -> Self {
        HanoiContext {
            n,
            goal_peg,
            split: None,
            db_disks: None,
            db_file: None,
            max_entries: None,
            db: OnceLock::new(),
        }
    }

    pub fn with_split(mut self, split: Split) -> Self {
        self.split = Some(split);
        self
    }

    /// Shares an already built database.
    pub fn with_database(self, db: Arc<DiskPdb>) -> Self {
        let _ = self.db.set(db);
        self
    }

    pub fn database(&self) -> Result<Arc<DiskPdb>> {
        if let Some(db) = self.db.get() {
            return Ok(db.clone());
        }
        let db = match &self.db_file {
            Some(path) => DiskPdb::from_database(load_pdb(path)?)?,
            None => {
                let disks = self
                    .db_disks
                    .or_else(|| self.split.as_ref().map(|s| s.sizes()[0]))
                    .ok_or_else(|| Error::invalid("no database size or split given"))?;
                DiskPdb::build(disks, self.goal_peg, self.max_entries)?
            }
        };
        if db.goal_peg() != self.goal_peg {
            return Err(Error::invalid(format!(
                "database targets peg {}, puzzle targets peg {}",
                db.goal_peg(),
                self.goal_peg
            )));
        }
        Ok(self.db.get_or_init(|| Arc::new(db)).clone())
    }

    fn split_heuristic(&self, mode: SplitMode) -> Result<Box<HanoiHeuristic>> {
        let split = self
            .split
            .clone()
            .ok_or_else(|| Error::invalid("split heuristics need group sizes"))?;
        Ok(Box::new(SplitHeuristic::new(self.n, self.database()?, split, mode)?))
    }
}

pub fn hanoi_registry() -> Registry<HanoiContext, HanoiHeuristic> {
    let mut r: Registry<HanoiContext, HanoiHeuristic> = Registry::new("hanoi heuristic");
    r.register("infinite-peg", "relaxation with unlimited spare pegs", |c| {
        Ok(Box::new(InfinitePeg {
            n: c.n,
            goal_peg: c.goal_peg,
        }))
    });
    r.register("static-split", "sum of disk-database lookups over a fixed grouping", |c| {
        c.split_heuristic(SplitMode::Static)
    });
    r.register("dynamic-split", "best sum of disk-database lookups over every grouping", |c| {
        c.split_heuristic(SplitMode::Dynamic)
    });
    r
}
