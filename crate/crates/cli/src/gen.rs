use std::io::Write;

use anyhow::Result;
use apdb_core::hanoi::HanoiState;
use apdb_core::tiles::random_solvable;
use clap::Args;

use crate::args::{parse_board, DomainKind, GraphArgs, Seeds};
use crate::output::sink;
use crate::{instances, InvalidConfig};

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub domain: DomainKind,
    /// One instance per seed; graphs take a single seed.
    #[arg(long, default_value = "0")]
    pub seeds: Seeds,
    #[arg(long, value_parser = parse_board, default_value = "4x4")]
    pub board: apdb_core::tiles::Board,
    #[arg(long)]
    pub disks: Option<usize>,
    #[command(flatten)]
    pub graph: GraphArgs,
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

/// Tile and Hanoi instances are one line per seed; graphs are DIMACS.
pub fn run(a: &GenArgs) -> Result<()> {
    let mut w = sink(a.out.as_deref())?;
    match a.domain {
        DomainKind::Tiles => {
            for s in a.seeds.0.clone() {
                writeln!(w, "{}", random_solvable(a.board, s))?;
            }
        }
        DomainKind::Hanoi => {
            let n = a.disks.ok_or_else(|| InvalidConfig("--disks is required".into()))?;
            for s in a.seeds.0.clone() {
                writeln!(w, "{}", HanoiState::random(n, s).to_digits(n))?;
            }
        }
        DomainKind::Vc => {
            if a.seeds.0.end - a.seeds.0.start != 1 {
                return Err(InvalidConfig("graphs are generated one seed at a time".into()).into());
            }
            let g = instances::graph(&a.graph, a.seeds.0.start)?;
            eprintln!(
                "{} vertices, {} edges, mean degree {:.3}",
                g.vertex_count(),
                g.edge_count(),
                g.mean_degree()
            );
            w.write_all(g.to_dimacs().as_bytes())?;
        }
    }
    w.flush()?;
    Ok(())
}
