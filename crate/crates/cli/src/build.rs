use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{Context, Result};
use apdb_core::hanoi::DiskPdb;
use apdb_core::pdb::{save_pdb, CostPolicy, Mapping, PatternDatabase};
use apdb_core::tiles::{build_tile_pdb, PairsTriplesDb};
use clap::{Args, ValueEnum};

use crate::args::{parse_board, DomainKind};
use crate::solve::tile_context;
use crate::InvalidConfig;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// Full table over a tile pattern or disk set.
    Pattern,
    /// Tile pair excesses (statistics only; rebuilt at solve time).
    Pairs,
    PairsTriples,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MappingArg {
    Sparse,
    Compact,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolicyArg {
    /// Count only moves of pattern tiles (additive).
    PatternMoves,
    AllMoves,
}

#[derive(Args, Debug)]
pub struct BuildArgs {
    #[arg(long, value_enum)]
    pub domain: DomainKind,
    #[arg(long, value_enum, default_value = "pattern")]
    pub kind: Kind,
    #[arg(long, value_parser = parse_board, default_value = "4x4")]
    pub board: apdb_core::tiles::Board,
    /// Pattern tiles for a single table.
    #[arg(long, value_delimiter = ',')]
    pub tiles: Vec<u8>,
    /// Build one table per group; `--out` is then a directory.
    #[arg(long)]
    pub partition: Option<String>,
    #[arg(long, value_enum, default_value = "compact")]
    pub mapping: MappingArg,
    #[arg(long, value_enum, default_value = "pattern-moves")]
    pub policy: PolicyArg,
    #[arg(long)]
    pub disks: Option<usize>,
    #[arg(long, default_value = "3", value_parser = clap::value_parser!(u8).range(0..4))]
    pub goal_peg: u8,
    /// Refuse builds with more abstract configurations (one byte each
    /// during the build) than this.
    #[arg(long, default_value = "1000000000")]
    pub max_entries: NonZeroUsize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn report(label: &str, db: &PatternDatabase, secs: f64, path: &Path) {
    println!(
        "{label}: {} entries, {} reached, max cost {}, {} bytes, {secs:.2}s -> {}",
        db.len(),
        db.reached(),
        db.max_cost().unwrap_or(0),
        std::fs::metadata(path).map_or(0, |m| m.len()),
        path.display()
    );
}

pub fn run(a: &BuildArgs) -> Result<()> {
    let max = Some(a.max_entries.get());
    let out = || a.out.clone().ok_or_else(|| InvalidConfig("--out is required".into()));
    let t = Instant::now();
    match (a.domain, a.kind) {
        (DomainKind::Hanoi, Kind::Pattern) => {
            let n = a.disks.ok_or_else(|| InvalidConfig("--disks is required".into()))?;
            let path = out()?;
            let db = DiskPdb::build(n, a.goal_peg, max)?;
            save_pdb(db.database(), &path)?;
            report(&format!("{n} disks"), db.database(), t.elapsed().as_secs_f64(), &path);
        }
        (DomainKind::Tiles, Kind::Pattern) => {
            let mapping = match a.mapping {
                MappingArg::Sparse => Mapping::Sparse,
                MappingArg::Compact => Mapping::Compact,
            };
            let policy = match a.policy {
                PolicyArg::PatternMoves => CostPolicy::PatternMovesOnly,
                PolicyArg::AllMoves => CostPolicy::AllMoves,
            };
            let groups: Vec<Vec<u8>> = match (&a.partition, a.tiles.is_empty()) {
                (Some(_), true) => {
                    let targs = crate::args::TileArgs {
                        board: a.board,
                        partition: a.partition.clone(),
                        pdb_files: Vec::new(),
                        no_reflect: false,
                        max_configs: a.max_entries,
                    };
                    tile_context(&targs)?.partition.expect("partition was given").groups().to_vec()
                }
                (None, false) => vec![a.tiles.clone()],
                _ => return Err(InvalidConfig("give exactly one of --tiles and --partition".into()).into()),
            };
            let dest = out()?;
            if a.partition.is_some() {
                std::fs::create_dir_all(&dest).with_context(|| format!("creating {}", dest.display()))?;
            }
            for (i, g) in groups.iter().enumerate() {
                let t = Instant::now();
                let db = build_tile_pdb(a.board, g, mapping, policy, max)?;
                let path = if a.partition.is_some() { dest.join(format!("group-{i}.apdb")) } else { dest.clone() };
                save_pdb(&db, &path)?;
                report(&format!("tiles {g:?}"), &db, t.elapsed().as_secs_f64(), &path);
            }
        }
        (DomainKind::Tiles, kind) => {
            if a.out.is_some() {
                return Err(InvalidConfig("pair databases have no file format; drop --out".into()).into());
            }
            let db = PairsTriplesDb::build(a.board, kind == Kind::PairsTriples)?;
            let s = db.stats();
            println!(
                "{} pairs: {} of {} cells retained; triples: {} of {} retained; {} bytes, {:.2}s",
                a.board,
                s.pairs_retained,
                s.pair_cells,
                s.triples_retained,
                s.triple_cells,
                db.retained_bytes(),
                t.elapsed().as_secs_f64()
            );
        }
        _ => return Err(InvalidConfig(format!("no {:?} databases for {:?}", a.kind, a.domain)).into()),
    }
    Ok(())
}
