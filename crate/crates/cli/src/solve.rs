use std::sync::Arc;

use anyhow::{Context, Result};
use apdb_core::hanoi::{hanoi_registry, Hanoi, HanoiContext, Split};
use apdb_core::search::{frontier_a_star, ida_star, ResultRow};
use apdb_core::tiles::{tile_registry, Partition, TileContext, TilePuzzle};
use apdb_core::vertex_cover::{solve_vc, vc_registry, VcContext};
use apdb_core::Budget;
use clap::{Args, ValueEnum};
use rayon::prelude::*;

use crate::args::{BudgetArgs, DomainKind, GraphArgs, HanoiArgs, OutputArgs, SourceArgs, TileArgs};
use crate::output::{sink, write_rows, Summary};
use crate::{instances, pool, require_file, InvalidConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Ida,
    Frontier,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    #[arg(long, value_enum)]
    pub domain: DomainKind,
    /// Registry name, e.g. static-pdb, dynamic-split or dynamic.
    #[arg(long)]
    pub heuristic: String,
    /// Tiles use IDA* only; Hanoi defaults to frontier search.
    #[arg(long, value_enum)]
    pub algorithm: Option<Algorithm>,
    /// Largest clique stored for the vertex-cover bounds.
    #[arg(long, default_value = "4")]
    pub clique_k: usize,
    #[command(flatten)]
    pub source: SourceArgs,
    #[command(flatten)]
    pub tiles: TileArgs,
    #[command(flatten)]
    pub hanoi: HanoiArgs,
    #[command(flatten)]
    pub graph: GraphArgs,
    #[command(flatten)]
    pub budget: BudgetArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// Returns whether every instance finished within its budget.
pub fn run(a: &SolveArgs) -> Result<bool> {
    let budget = a.budget.budget();
    let (name, rows) = match a.domain {
        DomainKind::Tiles => tiles(a, budget)?,
        DomainKind::Hanoi => hanoi(a, budget)?,
        DomainKind::Vc => vertex_cover(a, budget)?,
    };
    let summary = Summary::of(&name, &rows);
    write_rows(a.output.format, &mut *sink(a.output.out.as_deref())?, &rows, &summary)?;
    Ok(summary.solved == rows.len())
}

pub fn tile_context(t: &TileArgs) -> Result<TileContext> {
    let mut ctx = TileContext::new(t.board);
    if let Some(p) = &t.partition {
        let partition = match Partition::named(t.board, p) {
            Ok(part) => part,
            Err(apdb_core::Error::UnknownName { .. }) => {
                let path = require_file(p.as_ref())?;
                let text = std::fs::read_to_string(path).with_context(|| format!("reading {p}"))?;
                Partition::parse(t.board, &text)?
            }
            Err(e) => return Err(e.into()),
        };
        ctx = ctx.with_partition(partition);
    }
    for f in &t.pdb_files {
        require_file(f)?;
    }
    ctx.pdb_files = t.pdb_files.clone();
    ctx.reflect = !t.no_reflect;
    ctx.max_configs = Some(t.max_configs.get());
    Ok(ctx)
}

fn tiles(a: &SolveArgs, budget: Budget) -> Result<(String, Vec<ResultRow>)> {
    if a.algorithm == Some(Algorithm::Frontier) {
        // the blank-minimized tables are not consistent, which frontier search needs
        return Err(InvalidConfig("tile puzzles are solved with --algorithm ida".into()).into());
    }
    let ctx = tile_context(&a.tiles)?;
    let h = tile_registry().build(&a.heuristic, &ctx)?;
    let list = instances::tiles(a.tiles.board, &a.source)?;
    let rows = pool(a.output.jobs)?.install(|| {
        list.par_iter()
            .map(|(id, s)| ResultRow::new(id.clone(), h.name(), &ida_star(&TilePuzzle::new(s.clone()), h.as_ref(), s, budget)))
            .collect()
    });
    Ok((h.name().to_owned(), rows))
}

pub fn hanoi_context(h: &HanoiArgs, n: usize) -> Result<HanoiContext> {
    let mut ctx = HanoiContext::new(n, h.goal_peg);
    if let Some(s) = &h.split {
        ctx = ctx.with_split(Split::parse(s)?);
    }
    if let Some(f) = &h.db_file {
        ctx.db_file = Some(require_file(f)?.to_path_buf());
    }
    ctx.db_disks = h.db_disks;
    ctx.max_entries = Some(h.max_entries.get());
    Ok(ctx)
}

fn hanoi(a: &SolveArgs, budget: Budget) -> Result<(String, Vec<ResultRow>)> {
    let (n, list) = instances::hanoi(a.hanoi.disks, &a.source)?;
    let ctx = hanoi_context(&a.hanoi, n)?;
    let h = hanoi_registry().build(&a.heuristic, &ctx)?;
    let algorithm = a.algorithm.unwrap_or(Algorithm::Frontier);
    let rows = pool(a.output.jobs)?.install(|| {
        list.par_iter()
            .map(|(id, start)| {
                let domain = Hanoi::new(n, *start, a.hanoi.goal_peg)?;
                let stats = match algorithm {
                    Algorithm::Frontier => frontier_a_star(&domain, h.as_ref(), start, budget),
                    Algorithm::Ida => ida_star(&domain, h.as_ref(), start, budget),
                };
                Ok(ResultRow::new(id.clone(), h.name(), &stats))
            })
            .collect::<Result<Vec<_>>>()
    })?;
    Ok((h.name().to_owned(), rows))
}

fn vertex_cover(a: &SolveArgs, budget: Budget) -> Result<(String, Vec<ResultRow>)> {
    let list = instances::graphs(&a.graph, &a.source)?;
    let registry = vc_registry();
    let rows = pool(a.output.jobs)?.install(|| {
        list.into_par_iter()
            .map(|(id, g)| {
                let g = Arc::new(g);
                let ctx = VcContext::new(g.clone(), a.clique_k);
                let bound = registry.build(&a.heuristic, &ctx)?;
                let name = bound.name().to_owned();
                let out = solve_vc(&g, bound, budget);
                Ok((name, ResultRow::new(id, "", &out.stats)))
            })
            .collect::<Result<Vec<_>>>()
    })?;
    let name = rows.first().map_or(a.heuristic.clone(), |(n, _)| n.clone());
    Ok((
        name,
        rows.into_iter()
            .map(|(n, mut r)| {
                r.heuristic = n;
                r
            })
            .collect(),
    ))
}
