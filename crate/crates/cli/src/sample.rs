use std::collections::BTreeMap;
use std::io::Write;

use anyhow::Result;
use apdb_core::hanoi::{hanoi_registry, HanoiState};
use apdb_core::tiles::{random_solvable, tile_registry, TileState};
use clap::Args;
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{DomainKind, Format, HanoiArgs, OutputArgs, TileArgs};
use crate::solve::{hanoi_context, tile_context};
use crate::{instances, pool, InvalidConfig};

#[derive(Args, Debug)]
pub struct SampleArgs {
    #[arg(long, value_enum)]
    pub domain: DomainKind,
    #[arg(long)]
    pub heuristic: String,
    /// Random solvable states drawn from seeds `first-seed..first-seed+samples`.
    #[arg(long, default_value = "100000")]
    pub samples: u64,
    #[arg(long, default_value = "0")]
    pub first_seed: u64,
    /// Sample these states instead.
    #[arg(long)]
    pub instances: Option<std::path::PathBuf>,
    #[command(flatten)]
    pub tiles: TileArgs,
    #[command(flatten)]
    pub hanoi: HanoiArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Serialize)]
pub struct Distribution {
    pub heuristic: String,
    pub samples: u64,
    pub mean: f64,
    pub min: u32,
    pub max: u32,
    pub histogram: BTreeMap<u32, u64>,
}

impl Distribution {
    fn of(heuristic: &str, values: &[u32]) -> Self {
        let mut histogram = BTreeMap::new();
        for &v in values {
            *histogram.entry(v).or_insert(0) += 1;
        }
        Distribution {
            heuristic: heuristic.into(),
            samples: values.len() as u64,
            mean: values.iter().map(|&v| v as f64).sum::<f64>() / values.len().max(1) as f64,
            min: values.iter().copied().min().unwrap_or(0),
            max: values.iter().copied().max().unwrap_or(0),
            histogram,
        }
    }
}

pub fn run(a: &SampleArgs) -> Result<()> {
    let seeds = a.first_seed..a.first_seed + a.samples;
    let source = crate::args::SourceArgs {
        seeds: None,
        instances: a.instances.clone(),
    };
    let workers = pool(a.output.jobs)?;
    let dist = match a.domain {
        DomainKind::Tiles => {
            let ctx = tile_context(&a.tiles)?;
            let h = tile_registry().build(&a.heuristic, &ctx)?;
            let board = a.tiles.board;
            let values: Vec<u32> = match &a.instances {
                Some(_) => {
                    let states: Vec<TileState> = instances::tiles(board, &source)?.into_iter().map(|(_, s)| s).collect();
                    workers.install(|| states.par_iter().map(|s| h.estimate(s)).collect())
                }
                None => workers.install(|| seeds.into_par_iter().map(|s| h.estimate(&random_solvable(board, s))).collect()),
            };
            Distribution::of(h.name(), &values)
        }
        DomainKind::Hanoi => {
            let n = match &a.instances {
                Some(_) => instances::hanoi(a.hanoi.disks, &source)?.0,
                None => a.hanoi.disks.ok_or_else(|| InvalidConfig("--disks is required".into()))?,
            };
            let h = hanoi_registry().build(&a.heuristic, &hanoi_context(&a.hanoi, n)?)?;
            let values: Vec<u32> = match &a.instances {
                Some(_) => {
                    let states = instances::hanoi(Some(n), &source)?.1;
                    states.iter().map(|(_, s)| h.estimate(s)).collect()
                }
                None => workers.install(|| seeds.into_par_iter().map(|s| h.estimate(&HanoiState::random(n, s))).collect()),
            };
            Distribution::of(h.name(), &values)
        }
        DomainKind::Vc => return Err(InvalidConfig("sample-h supports tiles and hanoi".into()).into()),
    };
    let mut w = crate::output::sink(a.output.out.as_deref())?;
    match a.output.format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut w, &dist)?;
            writeln!(w)?;
        }
        Format::Csv => {
            let mut csv = csv::Writer::from_writer(&mut w);
            csv.write_record(["statistic", "value"])?;
            csv.write_record(["heuristic", &dist.heuristic])?;
            csv.write_record(["samples", &dist.samples.to_string()])?;
            csv.write_record(["mean", &format!("{:.4}", dist.mean)])?;
            csv.write_record(["min", &dist.min.to_string()])?;
            csv.write_record(["max", &dist.max.to_string()])?;
            for (h, c) in &dist.histogram {
                csv.write_record([format!("h={h}"), c.to_string()])?;
            }
            csv.flush()?;
        }
    }
    w.flush()?;
    Ok(())
}
