use serde::Serialize;

use super::SearchStats;

/// Column order of result tables.
pub const CSV_COLUMNS: [&str; 7] = [
    "instance_id",
    "heuristic",
    "cost",
    "nodes_generated",
    "nodes_expanded",
    "max_stored",
    "seconds",
];

/// One output row per solved (or abandoned) instance. An empty cost means
/// the search ran out of budget.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResultRow {
    pub instance_id: String,
    pub heuristic: String,
    pub cost: Option<u32>,
    pub nodes_generated: u64,
    pub nodes_expanded: u64,
    pub max_stored: u64,
    pub seconds: f64,
}

impl ResultRow {
    pub fn new(instance_id: impl Into<String>, heuristic: impl Into<String>, stats: &SearchStats) -> Self {
        ResultRow {
            instance_id: instance_id.into(),
            heuristic: heuristic.into(),
            cost: if stats.exhausted.is_some() {
                None
            } else {
                stats.solution_cost
            },
            nodes_generated: stats.nodes_generated,
            nodes_expanded: stats.nodes_expanded,
            max_stored: stats.max_stored,
            seconds: stats.elapsed,
        }
    }

    /// Fields in [`CSV_COLUMNS`] order.
    pub fn csv_record(&self) -> [String; 7] {
        [
            self.instance_id.clone(),
            self.heuristic.clone(),
            self.cost.map(|c| c.to_string()).unwrap_or_default(),
            self.nodes_generated.to_string(),
            self.nodes_expanded.to_string(),
            self.max_stored.to_string(),
            format!("{:.6}", self.seconds),
        ]
    }
}
