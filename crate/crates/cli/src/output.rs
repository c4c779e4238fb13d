use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use anyhow::{Context, Result};
use apdb_core::search::{ResultRow, CSV_COLUMNS};
use serde::Serialize;

use crate::args::Format;

pub fn sink(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

/// Means over all rows; `cost` averages solved rows only.
#[derive(Debug, Serialize)]
pub struct Summary {
    pub heuristic: String,
    pub instances: usize,
    pub solved: usize,
    pub cost: Option<f64>,
    pub nodes_generated: f64,
    pub nodes_expanded: f64,
    pub max_stored: f64,
    pub seconds: f64,
}

impl Summary {
    pub fn of(heuristic: &str, rows: &[ResultRow]) -> Self {
        let n = rows.len().max(1) as f64;
        let costs: Vec<f64> = rows.iter().filter_map(|r| r.cost).map(f64::from).collect();
        let avg = |f: fn(&ResultRow) -> f64| rows.iter().map(f).sum::<f64>() / n;
        Summary {
            heuristic: heuristic.into(),
            instances: rows.len(),
            solved: costs.len(),
            cost: (!costs.is_empty()).then(|| costs.iter().sum::<f64>() / costs.len() as f64),
            nodes_generated: avg(|r| r.nodes_generated as f64),
            nodes_expanded: avg(|r| r.nodes_expanded as f64),
            max_stored: avg(|r| r.max_stored as f64),
            seconds: avg(|r| r.seconds),
        }
    }

    fn csv_record(&self) -> [String; 7] {
        [
            "mean".into(),
            self.heuristic.clone(),
            self.cost.map(|c| format!("{c:.3}")).unwrap_or_default(),
            format!("{:.1}", self.nodes_generated),
            format!("{:.1}", self.nodes_expanded),
            format!("{:.1}", self.max_stored),
            format!("{:.6}", self.seconds),
        ]
    }
}

/// Instance rows then the summary row. Columns are [`CSV_COLUMNS`]; an
/// empty cost marks an exhausted budget.
pub fn write_rows(format: Format, w: &mut dyn Write, rows: &[ResultRow], summary: &Summary) -> Result<()> {
    match format {
        Format::Csv => {
            let mut csv = csv::Writer::from_writer(&mut *w);
            csv.write_record(CSV_COLUMNS)?;
            for r in rows {
                csv.write_record(r.csv_record())?;
            }
            csv.write_record(summary.csv_record())?;
            csv.flush()?;
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                rows: &'a [ResultRow],
                summary: &'a Summary,
            }
            serde_json::to_writer_pretty(&mut *w, &Doc { rows, summary })?;
            writeln!(w)?;
        }
    }
    w.flush()?;
    Ok(())
}
