//! Four-peg Towers of Hanoi.
//!
//! Disk 0 is the smallest. A state packs disk `i`'s peg into bits
//! `2i..2i+1`, so every value below 4^n is a legal state.

mod half;
mod pdb;
mod registry;

use std::fmt;

use crate::error::{Error, Result};
use crate::search::{Domain, IndexedDomain, OpId, Successor};

pub use half::{restricted_branching_factor, symmetric_half_search};
pub use pdb::{count_splits, for_each_split, DiskPdb, HanoiAbstraction, InfinitePeg, Split, SplitHeuristic, SplitMode};
pub use registry::{hanoi_registry, HanoiContext};

pub const PEGS: usize = 4;
pub const MAX_DISKS: usize = 31;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HanoiState(pub u64);

impl HanoiState {
    /// All `n` disks on `peg`.
    pub fn all_on(n: usize, peg: u8) -> Self {
        let mut bits = 0u64;
        for d in 0..n {
            bits |= (peg as u64) << (2 * d);
        }
        HanoiState(bits)
    }

    #[inline]
    pub fn peg(self, disk: usize) -> u8 {
        ((self.0 >> (2 * disk)) & 3) as u8
    }

    #[inline]
    pub fn with_disk(self, disk: usize, peg: u8) -> Self {
        HanoiState((self.0 & !(3u64 << (2 * disk))) | ((peg as u64) << (2 * disk)))
    }

    /// Smallest disk on each peg, or `None` for an empty peg.
    #[inline]
    pub fn tops(self, n: usize) -> [Option<u8>; PEGS] {
        let mut tops = [None; PEGS];
        let mut found = 0;
        for d in 0..n {
            let p = self.peg(d) as usize;
            if tops[p].is_none() {
                tops[p] = Some(d as u8);
                found += 1;
                if found == PEGS {
                    break;
                }
            }
        }
        tops
    }

    /// Every legal move as (disk, destination peg, successor): the top
    /// disk of a peg may go to any peg whose top is larger, or empty.
    pub fn moves(self, n: usize) -> impl Iterator<Item = (u8, u8, HanoiState)> {
        let tops = self.tops(n);
        (0..PEGS).flat_map(move |from| {
            (0..PEGS).filter_map(move |to| {
                let d = tops[from]?;
                if to == from || tops[to].is_some_and(|t| t < d) {
                    return None;
                }
                Some((d, to as u8, self.with_disk(d as usize, to as u8)))
            })
        })
    }

    /// Uniformly random placement of `n` disks, deterministic per seed.
    pub fn random(n: usize, seed: u64) -> Self {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        HanoiState(rng.gen::<u64>() & HanoiState::mask(n))
    }

    /// Peg digits, largest disk first.
    pub fn to_digits(self, n: usize) -> String {
        (0..n).rev().map(|d| char::from(b'0' + self.peg(d))).collect()
    }

    pub fn parse_digits(text: &str) -> Result<(usize, Self)> {
        let text = text.trim();
        let n = text.len();
        if n == 0 || n > MAX_DISKS {
            return Err(Error::InvalidState(format!("expected 1..={MAX_DISKS} peg digits")));
        }
        let mut s = HanoiState(0);
        for (i, ch) in text.bytes().enumerate() {
            if !(b'0'..=b'3').contains(&ch) {
                return Err(Error::InvalidState(format!("bad peg digit {:?}", ch as char)));
            }
            s = s.with_disk(n - 1 - i, ch - b'0');
        }
        Ok((n, s))
    }

    pub fn mask(n: usize) -> u64 {
        if n >= 32 {
            u64::MAX
        } else {
            (1u64 << (2 * n)) - 1
        }
    }
}

/// Relaxation where every disk may wait on a private peg: each non-goal peg
/// with `d` disks needs `2d - 1` moves, and every disk on the goal peg that
/// sits above (is smaller than) some disk still off the goal peg has to
/// leave and come back, for 2 more.
pub fn infinite_peg_h(state: HanoiState, n: usize, goal_peg: u8) -> u32 {
    let mut count = [0u32; PEGS];
    for d in 0..n {
        count[state.peg(d) as usize] += 1;
    }
    let mut h = 0;
    for (p, &c) in count.iter().enumerate() {
        if p != goal_peg as usize && c > 0 {
            h += 2 * c - 1;
        }
    }
    if let Some(largest_off) = (0..n).rev().find(|&d| state.peg(d) != goal_peg) {
        h += 2 * (0..largest_off).filter(|&d| state.peg(d) == goal_peg).count() as u32;
    }
    h
}

/// A puzzle instance: `n` disks, a start state and the peg everything must
/// end on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Hanoi {
    pub n: usize,
    pub start: HanoiState,
    pub goal_peg: u8,
}

impl Hanoi {
    /// All disks from peg 0 to peg 3.
    pub fn standard(n: usize) -> Result<Self> {
        Hanoi::new(n, HanoiState::all_on(n, 0), 3)
    }

    pub fn new(n: usize, start: HanoiState, goal_peg: u8) -> Result<Self> {
        if n == 0 || n > MAX_DISKS {
            return Err(Error::invalid(format!("disk count {n} out of range")));
        }
        if goal_peg as usize >= PEGS || start.0 & !HanoiState::mask(n) != 0 {
            return Err(Error::invalid("start state or goal peg out of range"));
        }
        Ok(Hanoi { n, start, goal_peg })
    }

    pub fn goal(&self) -> HanoiState {
        HanoiState::all_on(self.n, self.goal_peg)
    }
}

impl fmt::Display for Hanoi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> peg {}", self.start.to_digits(self.n), self.goal_peg)
    }
}

/// Operator id of moving `disk` to `peg`.
pub fn op_id(disk: u8, peg: u8) -> OpId {
    disk as OpId * PEGS as OpId + peg as OpId
}

impl Domain for Hanoi {
    type State = HanoiState;

    fn initial_state(&self) -> HanoiState {
        self.start
    }

    fn is_goal(&self, state: &HanoiState) -> bool {
        *state == self.goal()
    }

    fn successors(&self, state: &HanoiState, out: &mut Vec<Successor<HanoiState>>) {
        for (disk, to, next) in state.moves(self.n) {
            out.push(Successor {
                op: op_id(disk, to),
                state: next,
                cost: 1,
                reverse: Some(op_id(disk, state.peg(disk as usize))),
            });
        }
    }

    fn operator_count(&self) -> usize {
        self.n * PEGS
    }
}

impl IndexedDomain for Hanoi {
    fn index_space(&self) -> usize {
        1usize << (2 * self.n)
    }
    fn index_of(&self, state: &HanoiState) -> usize {
        state.0 as usize
    }
    fn state_at(&self, index: usize) -> HanoiState {
        HanoiState(index as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn move_counts() {
        assert_eq!(HanoiState::all_on(1, 0).moves(1).count(), 3);
        // one disk per peg: 3 + 2 + 1 moves
        let s = HanoiState(0b11_10_01_00);
        assert_eq!(s.moves(4).count(), 6);
        for (d, _, next) in s.moves(4) {
            let back = next.with_disk(d as usize, s.peg(d as usize));
            assert_eq!(back, s);
        }
    }

    #[test]
    fn random_states_stay_in_range() {
        for seed in 0..50 {
            let s = HanoiState::random(5, seed);
            assert!(s.0 < 1 << 10);
            assert_eq!(s, HanoiState::random(5, seed));
        }
    }

    #[test]
    fn infinite_peg_values() {
        assert_eq!(infinite_peg_h(HanoiState::all_on(15, 0), 15, 3), 29);
        assert_eq!(infinite_peg_h(HanoiState::all_on(15, 3), 15, 3), 0);
        // disk 0 on the goal peg above disk 1, which is elsewhere
        let s = HanoiState::all_on(2, 3).with_disk(1, 0);
        assert_eq!(infinite_peg_h(s, 2, 3), 1 + 2);
    }

    #[test]
    fn digits_roundtrip() {
        let (n, s) = HanoiState::parse_digits("0123").unwrap();
        assert_eq!(n, 4);
        assert_eq!(s.peg(3), 0);
        assert_eq!(s.peg(0), 3);
        assert_eq!(s.to_digits(4), "0123");
        assert!(HanoiState::parse_digits("0143").is_err());
    }
}
