use std::fmt;

use super::{Board, Dir, TileState};
use crate::error::{Error, Result};
use crate::pdb::mapping::rank_unchecked;
use crate::pdb::{build_additive_pdb, falling_factorial, Abstraction, CostPolicy, DomainTag, Mapping, MappingScheme, PatternDatabase};
use crate::search::Heuristic;

/// Largest pattern the builder accepts; the search state holds the pattern
/// locations plus the blank in a fixed array.
pub const MAX_PATTERN: usize = 8;

type Config = [u8; MAX_PATTERN + 1];

/// Backward search space for a group of tiles: their cells plus the blank.
/// Every other tile is indistinguishable, so the blank may swap with any
/// non-pattern cell for free.
#[derive(Clone, Debug)]
pub struct TilePattern {
    board: Board,
    tiles: Vec<u8>,
    scheme: MappingScheme,
    /// When false the table keeps one cell per blank location instead of
    /// the minimum over them.
    project_blank: bool,
}

impl TilePattern {
    pub fn new(board: Board, tiles: &[u8], mapping: Mapping) -> Result<Self> {
        if tiles.len() > MAX_PATTERN {
            return Err(Error::invalid(format!(
                "patterns of more than {MAX_PATTERN} tiles are not supported"
            )));
        }
        let mut seen = vec![false; board.cells()];
        for &t in tiles {
            if t == 0 || t as usize >= board.cells() || seen[t as usize] {
                return Err(Error::invalid(format!("bad pattern tile {t}")));
            }
            seen[t as usize] = true;
        }
        if mapping == Mapping::Direct {
            return Err(Error::invalid("tile patterns need a sparse or compact mapping"));
        }
        Ok(TilePattern {
            board,
            tiles: tiles.to_vec(),
            scheme: MappingScheme::new(mapping, tiles.len(), board.cells()),
            project_blank: true,
        })
    }

    /// Keep the blank in the table index (for checking the projection).
    pub fn without_projection(mut self) -> Self {
        self.project_blank = false;
        self
    }

    fn k(&self) -> usize {
        self.tiles.len()
    }
}

impl Abstraction for TilePattern {
    type Config = Config;

    fn config_space(&self) -> usize {
        falling_factorial(self.board.cells(), self.k() + 1)
    }

    fn config_index(&self, c: &Config) -> usize {
        rank_unchecked(&c[..=self.k()], self.board.cells())
    }

    fn seeds(&self) -> Vec<Config> {
        let k = self.k();
        let mut base = [0u8; MAX_PATTERN + 1];
        base[..k].copy_from_slice(&self.tiles);
        (0..self.board.cells() as u8)
            .filter(|c| !self.tiles.contains(c))
            .map(|blank| {
                let mut s = base;
                s[k] = blank;
                s
            })
            .collect()
    }

    fn expand(&self, c: &Config, out: &mut Vec<(Config, bool)>) {
        let k = self.k();
        let blank = c[k] as usize;
        for dir in Dir::ALL {
            let Some(to) = self.board.neighbor(blank, dir) else {
                continue;
            };
            let mut next = *c;
            next[k] = to as u8;
            match c[..k].iter().position(|&x| x as usize == to) {
                Some(i) => {
                    next[i] = blank as u8;
                    out.push((next, true));
                }
                None => out.push((next, false)),
            }
        }
    }

    fn table_size(&self) -> usize {
        if self.project_blank {
            self.scheme.table_size()
        } else {
            self.config_space()
        }
    }

    fn table_index(&self, c: &Config) -> usize {
        self.scheme.index(&c[..self.k()])
    }

    fn identity_projection(&self) -> bool {
        !self.project_blank
    }
}

/// Builds the additive database of a tile group with the blank projected
/// out (minimum over blank cells).
pub fn build_tile_pdb(
    board: Board,
    tiles: &[u8],
    mapping: Mapping,
    policy: CostPolicy,
    max_configs: Option<usize>,
) -> Result<PatternDatabase> {
    let abs = TilePattern::new(board, tiles, mapping)?;
    let costs = build_additive_pdb(&abs, policy, max_configs)?;
    Ok(PatternDatabase {
        domain: DomainTag::Tiles {
            rows: board.rows() as u8,
            cols: board.cols() as u8,
        },
        pattern: tiles.iter().map(|&t| t as u16).collect(),
        scheme: abs.scheme,
        policy,
        costs,
    })
}

/// Disjoint tile groups covering every tile; the blank is in none.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    board: Board,
    groups: Vec<Vec<u8>>,
}

const FIFTEEN_555: &str = include_str!("../../fixtures/partition-4x4-5-5-5.txt");
const FIFTEEN_663: &str = include_str!("../../fixtures/partition-4x4-6-6-3.txt");
const FIFTEEN_78: &str = include_str!("../../fixtures/partition-4x4-7-8.txt");

impl Partition {
    pub fn new(board: Board, groups: Vec<Vec<u8>>) -> Result<Self> {
        let mut seen = vec![false; board.cells()];
        for g in &groups {
            if g.is_empty() {
                return Err(Error::invalid("empty tile group"));
            }
            for &t in g {
                if t == 0 {
                    return Err(Error::invalid("the blank cannot belong to a group"));
                }
                if t as usize >= board.cells() {
                    return Err(Error::invalid(format!("tile {t} is not on a {board} board")));
                }
                if std::mem::replace(&mut seen[t as usize], true) {
                    return Err(Error::invalid(format!("tile {t} appears in two groups")));
                }
            }
        }
        if let Some(t) = (1..board.cells()).find(|&t| !seen[t]) {
            return Err(Error::invalid(format!("tile {t} is in no group")));
        }
        Ok(Partition { board, groups })
    }

    /// Every tile in its own group; the sum of lookups is Manhattan.
    pub fn singletons(board: Board) -> Self {
        Partition {
            board,
            groups: (1..board.cells() as u8).map(|t| vec![t]).collect(),
        }
    }

    /// Fixture format: one group per line, tile numbers separated by
    /// whitespace or commas; `#` starts a comment.
    pub fn parse(board: Board, text: &str) -> Result<Self> {
        let mut groups = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let group = line
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|w| !w.is_empty())
                .map(|w| w.parse::<u8>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::Parse {
                    line: i + 1,
                    message: e.to_string(),
                })?;
            groups.push(group);
        }
        Partition::new(board, groups)
    }

    /// The bundled Fifteen Puzzle partitions: "5-5-5", "6-6-3" and "7-8".
    pub fn named(board: Board, name: &str) -> Result<Self> {
        let four = Board::square(4)?;
        let text = match name {
            "5-5-5" => FIFTEEN_555,
            "6-6-3" => FIFTEEN_663,
            "7-8" => FIFTEEN_78,
            "singletons" => return Ok(Partition::singletons(board)),
            _ => {
                return Err(Error::UnknownName {
                    kind: "partition",
                    name: name.into(),
                    available: "5-5-5, 6-6-3, 7-8, singletons".into(),
                })
            }
        };
        if board != four {
            return Err(Error::invalid(format!("partition {name} is defined for 4x4 only")));
        }
        Partition::parse(board, text)
    }

    pub fn board(&self) -> Board {
        self.board
    }

    pub fn groups(&self) -> &[Vec<u8>] {
        &self.groups
    }

    /// Group sizes joined by dashes, e.g. "5-5-5".
    pub fn label(&self) -> String {
        self.groups.iter().map(|g| g.len().to_string()).collect::<Vec<_>>().join("-")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.groups {
            let tiles: Vec<String> = g.iter().map(|t| t.to_string()).collect();
            writeln!(f, "{}", tiles.join(" "))?;
        }
        Ok(())
    }
}

/// Sum of one database lookup per group, maximized with the same sum on the
/// diagonal mirror image when the board is square.
pub struct StaticAdditive {
    name: String,
    tables: Vec<PatternDatabase>,
    reflect: bool,
    reflected_cell: Vec<u8>,
}

impl StaticAdditive {
    /// Assembles the heuristic from prebuilt tables, one per group and in
    /// group order.
    pub fn from_tables(partition: &Partition, tables: Vec<PatternDatabase>, reflect: bool) -> Result<Self> {
        let board = partition.board;
        if tables.len() != partition.groups.len() {
            return Err(Error::invalid("one table per group is required"));
        }
        for (g, t) in partition.groups.iter().zip(&tables) {
            let want: Vec<u16> = g.iter().map(|&x| x as u16).collect();
            let tag = DomainTag::Tiles {
                rows: board.rows() as u8,
                cols: board.cols() as u8,
            };
            if t.pattern != want || t.domain != tag || t.policy != CostPolicy::PatternMovesOnly {
                return Err(Error::invalid(format!(
                    "table for pattern {:?} does not match group {:?}",
                    t.pattern, g
                )));
            }
        }
        let reflect = reflect && board.is_square();
        let mut name = format!("static-{}", partition.label());
        if reflect {
            name.push_str("+reflect");
        }
        Ok(StaticAdditive {
            name,
            tables,
            reflect,
            reflected_cell: (0..board.cells()).map(|c| board.reflect(c) as u8).collect(),
        })
    }

    /// Builds every group's table. Groups of seven or more tiles use the
    /// compact mapping, smaller ones the sparse mapping.
    pub fn build(partition: &Partition, reflect: bool, max_configs: Option<usize>) -> Result<Self> {
        // refuse before building any table, not after the first few
        if let Some(m) = max_configs {
            for g in &partition.groups {
                let space = falling_factorial(partition.board.cells(), g.len() + 1);
                if space > m {
                    return Err(Error::BudgetExceeded(format!(
                        "group {g:?} has {space} abstract configurations"
                    )));
                }
            }
        }
        let tables = partition
            .groups
            .iter()
            .map(|g| {
                let mapping = if g.len() >= 7 { Mapping::Compact } else { Mapping::Sparse };
                build_tile_pdb(partition.board, g, mapping, CostPolicy::PatternMovesOnly, max_configs)
            })
            .collect::<Result<Vec<_>>>()?;
        StaticAdditive::from_tables(partition, tables, reflect)
    }

    pub fn tables(&self) -> &[PatternDatabase] {
        &self.tables
    }

    /// Sum of group lookups on the state as given.
    pub fn direct(&self, state: &TileState) -> u32 {
        let mut locs = [0u8; MAX_PATTERN];
        let mut sum = 0;
        for t in &self.tables {
            let k = t.pattern.len();
            for (slot, &tile) in locs.iter_mut().zip(&t.pattern) {
                *slot = state.position(tile as usize) as u8;
            }
            sum += t.lookup(&locs[..k]) as u32;
        }
        sum
    }

    /// Sum of group lookups on the mirror image, computed without building
    /// the mirrored state: tile `g` of the mirror sits at the reflection of
    /// the cell holding tile `refl(g)`.
    pub fn mirrored(&self, state: &TileState) -> u32 {
        let mut locs = [0u8; MAX_PATTERN];
        let mut sum = 0;
        for t in &self.tables {
            let k = t.pattern.len();
            for (slot, &tile) in locs.iter_mut().zip(&t.pattern) {
                let twin = self.reflected_cell[tile as usize] as usize;
                *slot = self.reflected_cell[state.position(twin)];
            }
            sum += t.lookup(&locs[..k]) as u32;
        }
        sum
    }
}

impl Heuristic<TileState> for StaticAdditive {
    fn name(&self) -> &str {
        &self.name
    }

    fn estimate(&self, state: &TileState) -> u32 {
        let h = self.direct(state);
        if self.reflect {
            h.max(self.mirrored(state))
        } else {
            h
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::UNREACHED;
    use crate::tiles::{manhattan, random_solvable};

    #[test]
    fn single_tile_table_is_manhattan() {
        let b = Board::square(4).unwrap();
        let db = build_tile_pdb(b, &[6], Mapping::Sparse, CostPolicy::PatternMovesOnly, None).unwrap();
        for c in 0..16 {
            assert_eq!(db.lookup(&[c as u8]) as u32, b.distance(6, c));
        }
    }

    #[test]
    fn three_tile_sparse_table_has_3360_valid_cells() {
        let b = Board::square(4).unwrap();
        let db = build_tile_pdb(b, &[1, 2, 3], Mapping::Sparse, CostPolicy::PatternMovesOnly, None).unwrap();
        assert_eq!(db.len(), 4096);
        assert_eq!(db.reached(), 16 * 15 * 14);
        assert_eq!(db.lookup(&[1, 2, 3]), 0);
    }

    #[test]
    fn projection_is_dominated_by_every_blank_cell() {
        let b = Board::square(3).unwrap();
        let tiles = [1u8, 2, 5];
        let abs = TilePattern::new(b, &tiles, Mapping::Sparse).unwrap();
        let full = build_additive_pdb(&abs.clone().without_projection(), CostPolicy::PatternMovesOnly, None).unwrap();
        let projected = build_additive_pdb(&abs, CostPolicy::PatternMovesOnly, None).unwrap();
        for i in 0..abs.config_space() {
            if full[i] == UNREACHED {
                continue;
            }
            let c = crate::pdb::compact_unrank(i, 4, 9).unwrap();
            let mut cfg = [0u8; MAX_PATTERN + 1];
            cfg[..4].copy_from_slice(&c);
            assert!(projected[abs.table_index(&cfg)] <= full[i]);
        }
    }

    #[test]
    fn singletons_reproduce_manhattan() {
        let b = Board::square(4).unwrap();
        let h = StaticAdditive::build(&Partition::singletons(b), true, None).unwrap();
        for seed in 0..100 {
            let s = random_solvable(b, seed);
            assert_eq!(h.estimate(&s), manhattan(&s));
        }
    }

    #[test]
    fn mirrored_lookup_matches_reflected_state() {
        let b = Board::square(4).unwrap();
        let pairs: Vec<Vec<u8>> = (1..16u8).collect::<Vec<_>>().chunks(2).map(|c| c.to_vec()).collect();
        let h = StaticAdditive::build(&Partition::new(b, pairs).unwrap(), true, None).unwrap();
        for seed in 0..50 {
            let s = random_solvable(b, seed);
            assert_eq!(h.mirrored(&s), h.direct(&s.reflected()));
        }
    }

    #[test]
    fn partition_validation() {
        let b = Board::square(3).unwrap();
        assert!(Partition::new(b, vec![vec![1, 2, 3, 4], vec![5, 6, 7]]).is_err());
        assert!(Partition::new(b, vec![vec![0, 1, 2, 3, 4], vec![5, 6, 7, 8]]).is_err());
        assert!(Partition::new(b, vec![vec![1, 2, 3, 4], vec![4, 5, 6, 7, 8]]).is_err());
        assert!(Partition::parse(b, "1 2 3 4\n5,6,7,8 # rest\n").is_ok());
        let four = Board::square(4).unwrap();
        for name in ["5-5-5", "6-6-3", "7-8"] {
            assert_eq!(Partition::named(four, name).unwrap().label(), name);
        }
    }

    #[test]
    fn minimizing_out_the_blank_breaks_consistency() {
        // tile 2 slides down from cell 3 to cell 6; before the move tiles
        // 2 and 4 shut the blank into corner cell 6, away from the cheaper
        // blank regions the table minimizes over
        let b = Board::square(3).unwrap();
        let p = Partition::new(b, vec![vec![1, 2, 3, 4], vec![5, 6, 7, 8]]).unwrap();
        let h = StaticAdditive::build(&p, false, None).unwrap();
        let before = TileState::from_cells(b, &[8, 3, 5, 2, 7, 1, 0, 4, 6]).unwrap();
        let after = TileState::from_cells(b, &[8, 3, 5, 0, 7, 1, 2, 4, 6]).unwrap();
        assert!(before.successors().iter().any(|(_, s)| *s == after));
        assert_eq!((h.direct(&before), h.direct(&after)), (18, 21));
    }
}
