use std::sync::{Arc, OnceLock};

use super::{CliqueDb, CoverBound, DynamicCliques, Graph, MatchingBound, NoBound, StaticCliques};
use crate::error::Result;
use crate::registry::Registry;

/// A graph plus the clique database size; the database is built once and
/// shared by every bound made from the context.
pub struct VcContext {
    pub graph: Arc<Graph>,
    pub clique_k: usize,
    db: OnceLock<Arc<CliqueDb>>,
}

impl VcContext {
    pub fn new(graph: Arc<Graph>, clique_k: usize) -> Self {
        VcContext {
            graph,
            clique_k,
            db: OnceLock::new(),
        }
    }

    pub fn clique_db(&self) -> Result<Arc<CliqueDb>> {
        if let Some(db) = self.db.get() {
            return Ok(db.clone());
        }
        let db = CliqueDb::build(&self.graph, self.clique_k)?;
        db.verify(&self.graph)?;
        Ok(self.db.get_or_init(|| Arc::new(db)).clone())
    }
}

pub fn vc_registry() -> Registry<VcContext, dyn CoverBound> {
    let mut r: Registry<VcContext, dyn CoverBound> = Registry::new("vertex-cover heuristic");
    r.register("none", "no lower bound", |_| Ok(Box::new(NoBound)));
    r.register("static", "clique partition fixed at the root", |c| {
        Ok(Box::new(StaticCliques::new(&c.graph, &*c.clique_db()?)))
    });
    r.register("dynamic", "greedy clique partition of each remaining graph", |c| {
        Ok(Box::new(DynamicCliques::new(c.clique_db()?, c.graph.vertex_count())))
    });
    r.register("matching", "maximum matching of the remaining graph", |_| {
        Ok(Box::new(MatchingBound::default()))
    });
    r
}
