use std::num::{NonZeroU64, NonZeroUsize};
use std::ops::Range;
use std::path::PathBuf;
use std::str::FromStr;

use apdb_core::tiles::Board;
use apdb_core::Budget;
use clap::{Args, ValueEnum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DomainKind {
    Tiles,
    Hanoi,
    Vc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// `a..b` (half open) or a single seed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seeds(pub Range<u64>);

impl FromStr for Seeds {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let bad = |e: std::num::ParseIntError| format!("{s:?}: {e}");
        match s.split_once("..") {
            Some((a, b)) => {
                let (a, b) = (a.trim().parse().map_err(bad)?, b.trim().parse().map_err(bad)?);
                if a >= b {
                    return Err(format!("empty seed range {s:?}"));
                }
                Ok(Seeds(a..b))
            }
            None => {
                let a: u64 = s.trim().parse().map_err(bad)?;
                Ok(Seeds(a..a + 1))
            }
        }
    }
}

/// `RxC` or a single side length.
pub fn parse_board(s: &str) -> Result<Board, String> {
    let dims = match s.split_once(['x', 'X']) {
        Some((r, c)) => (r.trim().parse(), c.trim().parse()),
        None => (s.trim().parse(), s.trim().parse()),
    };
    match dims {
        (Ok(r), Ok(c)) => Board::new(r, c).map_err(|e| e.to_string()),
        _ => Err(format!("expected RxC, got {s:?}")),
    }
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Write here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads; rows are still written in instance order.
    #[arg(long, short = 'j', default_value = "1")]
    pub jobs: NonZeroUsize,
}

#[derive(Args, Debug, Clone)]
pub struct BudgetArgs {
    /// Per-instance limit on generated nodes.
    #[arg(long)]
    pub max_nodes: Option<NonZeroU64>,
    /// Per-instance limit on stored nodes (frontier search).
    #[arg(long)]
    pub max_stored: Option<NonZeroU64>,
}

impl BudgetArgs {
    pub fn budget(&self) -> Budget {
        let mut b = Budget::UNLIMITED;
        b.max_generated = self.max_nodes.map(NonZeroU64::get);
        b.max_stored = self.max_stored.map(NonZeroU64::get);
        b
    }
}

#[derive(Args, Debug, Clone)]
pub struct TileArgs {
    #[arg(long, value_parser = parse_board, default_value = "4x4")]
    pub board: Board,
    /// Bundled name (5-5-5, 6-6-3, 7-8, singletons) or a partition file.
    #[arg(long)]
    pub partition: Option<String>,
    /// Prebuilt group tables, in partition group order.
    #[arg(long, value_delimiter = ',')]
    pub pdb_files: Vec<PathBuf>,
    /// Skip the mirrored lookup of static databases.
    #[arg(long)]
    pub no_reflect: bool,
    /// Refuse database builds with more abstract configurations (one byte
    /// each during the build) than this.
    #[arg(long, default_value = "1000000000")]
    pub max_configs: NonZeroUsize,
}

#[derive(Args, Debug, Clone)]
pub struct HanoiArgs {
    #[arg(long)]
    pub disks: Option<usize>,
    #[arg(long, default_value = "3", value_parser = clap::value_parser!(u8).range(0..4))]
    pub goal_peg: u8,
    /// Group sizes such as 14-1 or 6-6-3.
    #[arg(long)]
    pub split: Option<String>,
    /// Disks in the database (default: the largest group).
    #[arg(long)]
    pub db_disks: Option<usize>,
    #[arg(long)]
    pub db_file: Option<PathBuf>,
    /// Refuse disk databases with more entries than this.
    #[arg(long, default_value = "1000000000")]
    pub max_entries: NonZeroUsize,
}

#[derive(Args, Debug, Clone)]
pub struct GraphArgs {
    #[arg(long)]
    pub vertices: Option<usize>,
    /// Expected degree of the random graph generator.
    #[arg(long)]
    pub density: Option<f64>,
    /// Delaunay triangulation of random points instead.
    #[arg(long)]
    pub delaunay: bool,
}

#[derive(Args, Debug, Clone)]
pub struct SourceArgs {
    /// Generate instances from these seeds.
    #[arg(long)]
    pub seeds: Option<Seeds>,
    /// Read instances from a file: tile or peg-digit lines, or a DIMACS graph.
    #[arg(long)]
    pub instances: Option<PathBuf>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_and_boards() {
        assert_eq!("3..7".parse::<Seeds>().unwrap(), Seeds(3..7));
        assert_eq!("9".parse::<Seeds>().unwrap(), Seeds(9..10));
        assert!("7..7".parse::<Seeds>().is_err());
        assert!("a..b".parse::<Seeds>().is_err());
        assert_eq!(parse_board("3x4").unwrap(), Board::new(3, 4).unwrap());
        assert_eq!(parse_board("5").unwrap(), Board::square(5).unwrap());
        assert!(parse_board("9x9").is_err());
    }
}
