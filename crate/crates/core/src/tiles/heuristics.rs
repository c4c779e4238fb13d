use super::{Board, TileState};
use crate::search::Heuristic;

/// Per-tile distance to its goal cell, indexed `[tile * cells + cell]`.
#[derive(Clone, Debug)]
pub struct ManhattanTable {
    board: Board,
    dist: Vec<u8>,
}

impl ManhattanTable {
    pub fn new(board: Board) -> Self {
        let n = board.cells();
        let mut dist = vec![0u8; n * n];
        for t in 1..n {
            for c in 0..n {
                dist[t * n + c] = board.distance(t, c) as u8;
            }
        }
        ManhattanTable { board, dist }
    }

    #[inline]
    pub fn tile(&self, tile: usize, cell: usize) -> u32 {
        self.dist[tile * self.board.cells() + cell] as u32
    }

    #[inline]
    pub fn total(&self, state: &TileState) -> u32 {
        let pos = state.positions();
        (1..pos.len()).map(|t| self.tile(t, pos[t] as usize)).sum()
    }
}

/// Sum over tiles of the grid distance to the goal cell.
pub fn manhattan(state: &TileState) -> u32 {
    let b = state.board();
    (1..b.cells()).map(|t| b.distance(t, state.position(t))).sum()
}

/// Manhattan distance plus two moves for every tile that has to leave its
/// goal row or column to let the others in that line pass. Per line the
/// extra is `2 * (count - LIS)` over the tiles already in their goal line,
/// ordered by position.
pub fn linear_conflict(state: &TileState) -> u32 {
    manhattan(state) + conflict_extra(state)
}

fn conflict_extra(state: &TileState) -> u32 {
    let b = state.board();
    let (rows, cols) = (b.rows(), b.cols());
    let mut extra = 0;
    let mut line = Vec::with_capacity(rows.max(cols));
    for r in 0..rows {
        line.clear();
        for c in 0..cols {
            let t = state.cells()[r * cols + c] as usize;
            if t != 0 && t / cols == r {
                line.push(t % cols);
            }
        }
        extra += 2 * (line.len() - longest_increasing(&line)) as u32;
    }
    for c in 0..cols {
        line.clear();
        for r in 0..rows {
            let t = state.cells()[r * cols + c] as usize;
            if t != 0 && t % cols == c {
                line.push(t / cols);
            }
        }
        extra += 2 * (line.len() - longest_increasing(&line)) as u32;
    }
    extra
}

fn longest_increasing(xs: &[usize]) -> usize {
    // patience sorting; lines are at most six long
    let mut tails: Vec<usize> = Vec::with_capacity(xs.len());
    for &x in xs {
        match tails.binary_search(&x) {
            Ok(_) => {}
            Err(i) if i == tails.len() => tails.push(x),
            Err(i) => tails[i] = x,
        }
    }
    tails.len()
}

pub struct Manhattan {
    table: ManhattanTable,
}

impl Manhattan {
    pub fn new(board: Board) -> Self {
        Manhattan {
            table: ManhattanTable::new(board),
        }
    }
}

impl Heuristic<TileState> for Manhattan {
    fn name(&self) -> &str {
        "manhattan"
    }
    fn estimate(&self, state: &TileState) -> u32 {
        self.table.total(state)
    }
}

pub struct LinearConflict {
    table: ManhattanTable,
}

impl LinearConflict {
    pub fn new(board: Board) -> Self {
        LinearConflict {
            table: ManhattanTable::new(board),
        }
    }
}

impl Heuristic<TileState> for LinearConflict {
    fn name(&self) -> &str {
        "linear-conflict"
    }
    fn estimate(&self, state: &TileState) -> u32 {
        self.table.total(state) + conflict_extra(state)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiles::{random_solvable, Dir};

    #[test]
    fn goal_and_one_move() {
        let b = Board::square(4).unwrap();
        let g = TileState::goal(b);
        assert_eq!(manhattan(&g), 0);
        assert_eq!(linear_conflict(&g), 0);
        let s = g.apply(Dir::Right).unwrap().1;
        assert_eq!(manhattan(&s), 1);
    }

    #[test]
    fn reversed_pair_in_top_row_adds_two() {
        // Tiles 1 and 2 swapped in the top row; swap 14 and 15 to fix parity.
        let b = Board::square(4).unwrap();
        let mut cells: Vec<u8> = (0..16).collect();
        cells.swap(1, 2);
        cells.swap(14, 15);
        let s = TileState::from_cells(b, &cells).unwrap();
        assert!(s.is_solvable());
        // 14/15 are also reversed in their row, which is a second conflict.
        assert_eq!(manhattan(&s), 4);
        assert_eq!(linear_conflict(&s), 8);

        let mut cells: Vec<u8> = (0..16).collect();
        cells.swap(1, 2);
        cells.swap(11, 14);
        let s = TileState::from_cells(b, &cells).unwrap();
        assert_eq!(linear_conflict(&s), manhattan(&s) + 2);
    }

    #[test]
    fn table_and_direct_sum_agree() {
        let b = Board::square(5).unwrap();
        let t = ManhattanTable::new(b);
        for seed in 0..50 {
            let s = random_solvable(b, seed);
            assert_eq!(t.total(&s), manhattan(&s));
        }
    }

    #[test]
    fn lis() {
        assert_eq!(longest_increasing(&[3, 2, 1]), 1);
        assert_eq!(longest_increasing(&[0, 2, 1, 3]), 3);
        assert_eq!(longest_increasing(&[]), 0);
    }
}
