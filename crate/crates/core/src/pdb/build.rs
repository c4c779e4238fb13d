use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::search::UNREACHED;

/// Which moves a pattern database charges for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CostPolicy {
    /// Only moves of pattern variables cost 1; tables for disjoint patterns
    /// may be summed.
    PatternMovesOnly,
    /// Every move costs 1 (non-additive; for comparison).
    AllMoves,
}

/// The abstract space searched backward from the goal when building a
/// database.
///
/// A configuration holds the pattern variables plus whatever else is needed
/// to decide which moves apply (the blank, for tile puzzles). The table only
/// keeps the projection onto the pattern variables; configurations that
/// project to the same cell keep the minimum.
pub trait Abstraction {
    type Config: Copy;

    fn config_space(&self) -> usize;
    fn config_index(&self, config: &Self::Config) -> usize;

    /// Goal configurations, all at cost 0.
    fn seeds(&self) -> Vec<Self::Config>;

    /// Appends neighbors with a flag telling whether the move changes a
    /// pattern variable.
    fn expand(&self, config: &Self::Config, out: &mut Vec<(Self::Config, bool)>);

    fn table_size(&self) -> usize;
    fn table_index(&self, config: &Self::Config) -> usize;

    /// True when the table index equals the configuration index, so the
    /// search distances are the table.
    fn identity_projection(&self) -> bool {
        false
    }
}

/// Runs the backward search and returns the cost table (unreached cells hold
/// [`UNREACHED`]).
///
/// Moves that leave the pattern alone are free under
/// [`CostPolicy::PatternMovesOnly`], so this is a 0-1 breadth-first search:
/// free moves go to the front of the deque, paid moves to the back, and
/// configurations settle in nondecreasing cost order.
pub fn build_additive_pdb<A: Abstraction>(
    abstraction: &A,
    policy: CostPolicy,
    max_configs: Option<usize>,
) -> Result<Vec<u8>> {
    let space = abstraction.config_space();
    if max_configs.is_some_and(|m| space > m) {
        return Err(Error::BudgetExceeded(format!(
            "abstract space has {space} configurations"
        )));
    }
    let identity = abstraction.identity_projection();
    let mut dist = vec![UNREACHED; space];
    let mut table = if identity {
        Vec::new()
    } else {
        vec![UNREACHED; abstraction.table_size()]
    };

    let mut deque: VecDeque<(A::Config, u8)> = VecDeque::new();
    for seed in abstraction.seeds() {
        let i = abstraction.config_index(&seed);
        if dist[i] != 0 {
            dist[i] = 0;
            deque.push_back((seed, 0));
        }
    }

    let mut out = Vec::new();
    while let Some((config, d)) = deque.pop_front() {
        let ci = abstraction.config_index(&config);
        if dist[ci] < d {
            continue;
        }
        if !identity {
            let ti = abstraction.table_index(&config);
            if table[ti] == UNREACHED {
                table[ti] = d;
            }
        }
        out.clear();
        abstraction.expand(&config, &mut out);
        for &(next, moves_pattern) in &out {
            let step = match policy {
                CostPolicy::AllMoves => 1,
                CostPolicy::PatternMovesOnly => u8::from(moves_pattern),
            };
            let nd = d + step;
            if nd >= UNREACHED {
                return Err(Error::CostOverflow(u32::from(nd)));
            }
            let ni = abstraction.config_index(&next);
            if nd < dist[ni] {
                dist[ni] = nd;
                if step == 0 {
                    deque.push_front((next, nd));
                } else {
                    deque.push_back((next, nd));
                }
            }
        }
    }
    Ok(if identity { dist } else { table })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Two tokens on a path of `n` cells; only token A is in the pattern.
    /// Token B moves for free, A pays 1. A-only distance must equal |a - goal|.
    struct TwoTokens {
        n: usize,
    }

    impl Abstraction for TwoTokens {
        type Config = (u8, u8);
        fn config_space(&self) -> usize {
            self.n * self.n
        }
        fn config_index(&self, c: &(u8, u8)) -> usize {
            c.0 as usize * self.n + c.1 as usize
        }
        fn seeds(&self) -> Vec<(u8, u8)> {
            vec![(0, (self.n - 1) as u8)]
        }
        fn expand(&self, c: &(u8, u8), out: &mut Vec<((u8, u8), bool)>) {
            let (a, b) = *c;
            for na in [a.wrapping_sub(1), a + 1] {
                if (na as usize) < self.n && na != b {
                    out.push(((na, b), true));
                }
            }
            for nb in [b.wrapping_sub(1), b + 1] {
                if (nb as usize) < self.n && nb != a {
                    out.push(((a, nb), false));
                }
            }
        }
        fn table_size(&self) -> usize {
            self.n
        }
        fn table_index(&self, c: &(u8, u8)) -> usize {
            c.0 as usize
        }
    }

    #[test]
    fn free_moves_are_not_charged() {
        // Tokens cannot pass each other on a path, so with B at the far end
        // A reaches every cell except the last, at cost = distance from 0.
        let t = TwoTokens { n: 6 };
        let table = build_additive_pdb(&t, CostPolicy::PatternMovesOnly, None).unwrap();
        assert_eq!(&table[..5], &[0, 1, 2, 3, 4]);
        assert_eq!(table[5], UNREACHED);
        let all = build_additive_pdb(&t, CostPolicy::AllMoves, None).unwrap();
        assert!(all.iter().zip(&table).all(|(a, p)| a >= p));
    }

    #[test]
    fn respects_memory_budget() {
        let t = TwoTokens { n: 6 };
        assert!(matches!(
            build_additive_pdb(&t, CostPolicy::AllMoves, Some(10)),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
