use std::path::Path;

use anyhow::{Context, Result};
use apdb_core::hanoi::HanoiState;
use apdb_core::tiles::{random_solvable, Board, TileState};
use apdb_core::vertex_cover::{gen_delaunay_graph, gen_random_graph, Graph};

use crate::args::{GraphArgs, SourceArgs};
use crate::InvalidConfig;

pub type Named<T> = Vec<(String, T)>;

fn data_lines(path: &Path) -> Result<Vec<(usize, String)>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim().to_owned()))
        .filter(|(_, l)| !l.is_empty())
        .collect())
}

pub fn tiles(board: Board, src: &SourceArgs) -> Result<Named<TileState>> {
    if let Some(path) = &src.instances {
        return data_lines(path)?
            .into_iter()
            .map(|(n, line)| {
                let s = TileState::parse(board, &line).with_context(|| format!("{}:{n}", path.display()))?;
                if !s.is_solvable() {
                    return Err(InvalidConfig(format!("{}:{n}: state is not solvable", path.display())).into());
                }
                Ok((format!("line-{n}"), s))
            })
            .collect();
    }
    let seeds = src
        .seeds
        .as_ref()
        .ok_or_else(|| InvalidConfig("tile instances need --seeds or --instances".into()))?;
    Ok(seeds.0.clone().map(|s| (format!("seed-{s}"), random_solvable(board, s))).collect())
}

/// Disk count plus start states. With no source, the standard start (all
/// disks on peg 0).
pub fn hanoi(disks: Option<usize>, src: &SourceArgs) -> Result<(usize, Named<HanoiState>)> {
    if let Some(path) = &src.instances {
        let mut n = disks;
        let mut out = Vec::new();
        for (line_no, line) in data_lines(path)? {
            let (k, s) = HanoiState::parse_digits(&line).with_context(|| format!("{}:{line_no}", path.display()))?;
            if *n.get_or_insert(k) != k {
                return Err(InvalidConfig(format!("{}:{line_no}: expected {} disks, got {k}", path.display(), n.unwrap())).into());
            }
            out.push((format!("line-{line_no}"), s));
        }
        let n = n.ok_or_else(|| InvalidConfig(format!("{} has no instances", path.display())))?;
        return Ok((n, out));
    }
    let n = disks.ok_or_else(|| InvalidConfig("--disks is required".into()))?;
    Ok(match &src.seeds {
        Some(seeds) => (n, seeds.0.clone().map(|s| (format!("seed-{s}"), HanoiState::random(n, s))).collect()),
        None => (n, vec![("standard".into(), HanoiState::all_on(n, 0))]),
    })
}

pub fn graph(g: &GraphArgs, seed: u64) -> Result<Graph> {
    let n = g.vertices.ok_or_else(|| InvalidConfig("--vertices is required".into()))?;
    if g.delaunay {
        return Ok(gen_delaunay_graph(n, seed)?);
    }
    let d = g
        .density
        .ok_or_else(|| InvalidConfig("give --density or --delaunay".into()))?;
    Ok(gen_random_graph(n, d, seed)?)
}

pub fn graphs(g: &GraphArgs, src: &SourceArgs) -> Result<Named<Graph>> {
    if let Some(path) = &src.instances {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let name = path.file_stem().map_or("graph".into(), |s| s.to_string_lossy().into_owned());
        return Ok(vec![(name, Graph::from_dimacs(&text)?)]);
    }
    let seeds = src
        .seeds
        .as_ref()
        .ok_or_else(|| InvalidConfig("graph instances need --seeds or --instances".into()))?;
    seeds.0.clone().map(|s| Ok((format!("seed-{s}"), graph(g, s)?))).collect()
}
