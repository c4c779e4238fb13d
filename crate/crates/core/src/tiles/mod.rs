//! Sliding-tile puzzles from 3×3 up to 6×6.
//!
//! Cells are numbered row-major from 0. In the goal the blank sits in cell 0
//! and tile `t` in cell `t`.

mod dynamic;
mod heuristics;
mod pairs;
mod pattern;
mod registry;

use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::search::{Domain, OpId, Successor};

pub use dynamic::{DynamicHeuristic, DynamicMode};
pub use heuristics::{linear_conflict, manhattan, LinearConflict, Manhattan, ManhattanTable};
pub use pairs::{ConflictGraph, ConflictTracker, PairsTriplesDb, PairsTriplesStats};
pub use pattern::{build_tile_pdb, Partition, StaticAdditive, TilePattern};
pub use registry::{tile_registry, TileContext};

pub const MAX_CELLS: usize = 36;

/// Board dimensions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Board {
    rows: u8,
    cols: u8,
}

impl Board {
    pub fn new(rows: usize, cols: usize) -> Result<Self> {
        if rows < 2 || cols < 2 || rows * cols > MAX_CELLS {
            return Err(Error::invalid(format!("unsupported board {rows}x{cols}")));
        }
        Ok(Board {
            rows: rows as u8,
            cols: cols as u8,
        })
    }

    pub fn square(side: usize) -> Result<Self> {
        Board::new(side, side)
    }

    pub fn rows(self) -> usize {
        self.rows as usize
    }

    pub fn cols(self) -> usize {
        self.cols as usize
    }

    pub fn cells(self) -> usize {
        self.rows() * self.cols()
    }

    /// Number of tiles, blank excluded.
    pub fn tiles(self) -> usize {
        self.cells() - 1
    }

    pub fn row_col(self, cell: usize) -> (usize, usize) {
        (cell / self.cols(), cell % self.cols())
    }

    pub fn distance(self, a: usize, b: usize) -> u32 {
        let (ra, ca) = self.row_col(a);
        let (rb, cb) = self.row_col(b);
        (ra.abs_diff(rb) + ca.abs_diff(cb)) as u32
    }

    /// Cell reached by moving the blank in `dir`, if on the board.
    pub fn neighbor(self, cell: usize, dir: Dir) -> Option<usize> {
        let (r, c) = self.row_col(cell);
        match dir {
            Dir::Up if r > 0 => Some(cell - self.cols()),
            Dir::Down if r + 1 < self.rows() => Some(cell + self.cols()),
            Dir::Left if c > 0 => Some(cell - 1),
            Dir::Right if c + 1 < self.cols() => Some(cell + 1),
            _ => None,
        }
    }

    /// Transpose of a cell; only meaningful on square boards.
    pub fn reflect(self, cell: usize) -> usize {
        let (r, c) = self.row_col(cell);
        c * self.cols() + r
    }

    pub fn is_square(self) -> bool {
        self.rows == self.cols
    }
}

impl fmt::Display for Board {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}

/// Direction the blank moves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dir {
    Up = 0,
    Left = 1,
    Right = 2,
    Down = 3,
}

impl Dir {
    /// Static operator order used by every search.
    pub const ALL: [Dir; 4] = [Dir::Up, Dir::Left, Dir::Right, Dir::Down];

    pub fn reverse(self) -> Dir {
        match self {
            Dir::Up => Dir::Down,
            Dir::Down => Dir::Up,
            Dir::Left => Dir::Right,
            Dir::Right => Dir::Left,
        }
    }

    pub fn op(self) -> OpId {
        self as OpId
    }
}

/// A puzzle position. `cells[c]` is the tile in cell `c` (0 = blank) and
/// `pos[t]` the cell of tile `t`, with `pos[0]` the blank.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TileState {
    board: Board,
    cells: [u8; MAX_CELLS],
    pos: [u8; MAX_CELLS],
}

impl TileState {
    pub fn goal(board: Board) -> Self {
        let mut cells = [0u8; MAX_CELLS];
        let mut pos = [0u8; MAX_CELLS];
        for i in 0..board.cells() {
            cells[i] = i as u8;
            pos[i] = i as u8;
        }
        TileState { board, cells, pos }
    }

    /// Builds a state from the row-major cell contents, blank as 0. The
    /// state must be a permutation; solvability is not checked.
    pub fn from_cells(board: Board, contents: &[u8]) -> Result<Self> {
        let n = board.cells();
        if contents.len() != n {
            return Err(Error::InvalidState(format!(
                "expected {n} cells, got {}",
                contents.len()
            )));
        }
        let mut cells = [0u8; MAX_CELLS];
        let mut pos = [u8::MAX; MAX_CELLS];
        for (c, &t) in contents.iter().enumerate() {
            if t as usize >= n || pos[t as usize] != u8::MAX {
                return Err(Error::InvalidState(format!(
                    "cell contents are not a permutation of 0..{n}"
                )));
            }
            cells[c] = t;
            pos[t as usize] = c as u8;
        }
        // unused slots must match `goal` for Eq and Hash
        pos[n..].fill(0);
        Ok(TileState { board, cells, pos })
    }

    /// Parses the [`Display`](fmt::Display) form: cell contents separated by
    /// whitespace or commas.
    pub fn parse(board: Board, text: &str) -> Result<Self> {
        let cells = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|w| !w.is_empty())
            .map(|w| w.parse::<u8>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::InvalidState(format!("{text:?}: {e}")))?;
        TileState::from_cells(board, &cells)
    }

    pub fn board(&self) -> Board {
        self.board
    }

    /// Row-major cell contents with the blank as 0.
    pub fn cells(&self) -> &[u8] {
        &self.cells[..self.board.cells()]
    }

    /// Cell of each tile, index 0 being the blank.
    pub fn positions(&self) -> &[u8] {
        &self.pos[..self.board.cells()]
    }

    pub fn blank(&self) -> usize {
        self.pos[0] as usize
    }

    #[inline]
    pub fn position(&self, tile: usize) -> usize {
        self.pos[tile] as usize
    }

    pub fn is_goal(&self) -> bool {
        (0..self.board.cells()).all(|i| self.cells[i] as usize == i)
    }

    /// The tile the blank would swap with, and the resulting state.
    pub fn apply(&self, dir: Dir) -> Option<(u8, TileState)> {
        let b = self.blank();
        let to = self.board.neighbor(b, dir)?;
        let tile = self.cells[to];
        let mut next = self.clone();
        next.cells[b] = tile;
        next.cells[to] = 0;
        next.pos[tile as usize] = b as u8;
        next.pos[0] = to as u8;
        Some((tile, next))
    }

    /// Every legal move as (moved tile, successor).
    pub fn successors(&self) -> Vec<(u8, TileState)> {
        Dir::ALL.iter().filter_map(|&d| self.apply(d)).collect()
    }

    /// Solvable iff the parity of the cell permutation equals the parity of
    /// the blank's grid distance from its goal cell.
    pub fn is_solvable(&self) -> bool {
        let n = self.board.cells();
        let mut seen = [false; MAX_CELLS];
        let mut transpositions = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut c = start;
            while !seen[c] {
                seen[c] = true;
                c = self.cells[c] as usize;
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions % 2 == self.board.distance(self.blank(), 0) as usize % 2
    }

    /// Mirror image about the main diagonal: tile `refl(t)` goes to the
    /// reflection of `t`'s cell. Distances to the goal are preserved.
    pub fn reflected(&self) -> TileState {
        debug_assert!(self.board.is_square());
        let b = self.board;
        let mut cells = [0u8; MAX_CELLS];
        for c in 0..b.cells() {
            cells[b.reflect(c)] = b.reflect(self.cells[c] as usize) as u8;
        }
        TileState::from_cells(b, &cells[..b.cells()]).expect("reflection is a permutation")
    }

    /// Packed key: 4 bits per cell up to 16 cells, 6 bits otherwise.
    pub fn packed(&self) -> [u64; 4] {
        let width = if self.board.cells() <= 16 { 4 } else { 6 };
        let mut key = [0u64; 4];
        for (c, &t) in self.cells().iter().enumerate() {
            let bit = c * width;
            let (w, off) = (bit / 64, bit % 64);
            key[w] |= (t as u64) << off;
            if off + width > 64 {
                key[w + 1] |= (t as u64) >> (64 - off);
            }
        }
        key
    }
}

impl fmt::Debug for TileState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TileState({}: {})", self.board, self)
    }
}

impl fmt::Display for TileState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.cells().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Uniformly random solvable state, deterministic per seed. An unsolvable
/// shuffle is repaired by swapping the tiles in the first two non-blank
/// cells, which flips parity and pairs the two halves one-to-one.
pub fn random_solvable(board: Board, seed: u64) -> TileState {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cells: Vec<u8> = (0..board.cells() as u8).collect();
    cells.shuffle(&mut rng);
    let mut state = TileState::from_cells(board, &cells).expect("shuffle is a permutation");
    if !state.is_solvable() {
        let mut nonblank = (0..board.cells()).filter(|&c| cells[c] != 0);
        let (a, b) = (nonblank.next().unwrap(), nonblank.next().unwrap());
        cells.swap(a, b);
        state = TileState::from_cells(board, &cells).expect("swap keeps a permutation");
    }
    debug_assert!(state.is_solvable());
    state
}

/// Puzzle instance for the search engines.
#[derive(Clone, Debug)]
pub struct TilePuzzle {
    pub start: TileState,
}

impl TilePuzzle {
    pub fn new(start: TileState) -> Self {
        TilePuzzle { start }
    }
}

impl Domain for TilePuzzle {
    type State = TileState;

    fn initial_state(&self) -> TileState {
        self.start.clone()
    }

    fn is_goal(&self, state: &TileState) -> bool {
        state.is_goal()
    }

    fn successors(&self, state: &TileState, out: &mut Vec<Successor<TileState>>) {
        for dir in Dir::ALL {
            if let Some((_, next)) = state.apply(dir) {
                out.push(Successor {
                    op: dir.op(),
                    state: next,
                    cost: 1,
                    reverse: Some(dir.reverse().op()),
                });
            }
        }
    }

    fn operator_count(&self) -> usize {
        4
    }
}

/// Parses an instance file: one state per line, row-major cell contents
/// separated by whitespace, blank as 0. Blank lines and `#` comments are
/// skipped.
pub fn parse_instances(board: Board, text: &str) -> Result<Vec<TileState>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let cells = line
            .split_whitespace()
            .map(|w| w.parse::<u8>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse {
                line: i + 1,
                message: e.to_string(),
            })?;
        let state = TileState::from_cells(board, &cells).map_err(|e| Error::Parse {
            line: i + 1,
            message: e.to_string(),
        })?;
        if !state.is_solvable() {
            return Err(Error::Parse {
                line: i + 1,
                message: "state is not solvable".into(),
            });
        }
        out.push(state);
    }
    Ok(out)
}

pub fn format_instances(states: &[TileState]) -> String {
    let mut s = String::new();
    for st in states {
        s.push_str(&st.to_string());
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corner_and_center_degrees() {
        let b = Board::square(4).unwrap();
        let goal = TileState::goal(b);
        assert_eq!(goal.successors().len(), 2);
        let mut s = goal.clone();
        for d in [Dir::Down, Dir::Right] {
            s = s.apply(d).unwrap().1;
        }
        assert_eq!(s.blank(), 5);
        assert_eq!(s.successors().len(), 4);
    }

    #[test]
    fn parse_reads_display_output() {
        let b = Board::new(2, 3).unwrap();
        let s = random_solvable(b, 11);
        assert_eq!(TileState::parse(b, &s.to_string()).unwrap(), s);
        assert_eq!(TileState::parse(b, "0,1,2, 3 4 5").unwrap(), TileState::goal(b));
        assert!(TileState::parse(b, "0 1 2 3 4").is_err());
        assert!(TileState::parse(b, "0 1 2 3 4 x").is_err());
    }

    #[test]
    fn move_then_reverse_restores() {
        let b = Board::square(4).unwrap();
        let s = random_solvable(b, 3);
        for dir in Dir::ALL {
            if let Some((_, next)) = s.apply(dir) {
                assert_eq!(next.apply(dir.reverse()).unwrap().1, s);
            }
        }
    }

    #[test]
    fn random_states_are_solvable_and_deterministic() {
        let b = Board::new(3, 4).unwrap();
        for seed in 0..200 {
            let s = random_solvable(b, seed);
            assert!(s.is_solvable());
            assert_eq!(s, random_solvable(b, seed));
        }
    }

    #[test]
    fn single_swap_is_unsolvable() {
        let b = Board::square(3).unwrap();
        let s = TileState::from_cells(b, &[0, 2, 1, 3, 4, 5, 6, 7, 8]).unwrap();
        assert!(!s.is_solvable());
        assert!(TileState::goal(b).apply(Dir::Right).unwrap().1.is_solvable());
    }

    #[test]
    fn reflection_is_an_involution() {
        let b = Board::square(5).unwrap();
        let s = random_solvable(b, 11);
        assert_eq!(s.reflected().reflected(), s);
        assert!(s.reflected().is_solvable());
    }

    #[test]
    fn instance_text_roundtrip() {
        let b = Board::square(4).unwrap();
        let states: Vec<_> = (0..5).map(|s| random_solvable(b, s)).collect();
        let text = format_instances(&states);
        assert_eq!(parse_instances(b, &text).unwrap(), states);
        assert!(matches!(
            parse_instances(b, "1 0 2 3 4 5 6 7 8 9 10 11 12 13 14 15 15"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn packed_keys_distinguish_neighbors() {
        let b = Board::square(6).unwrap();
        let s = random_solvable(b, 1);
        for (_, n) in s.successors() {
            assert_ne!(n.packed(), s.packed());
        }
    }
}
