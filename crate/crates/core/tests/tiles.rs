use std::sync::{Arc, OnceLock};

use apdb_core::search::{bfs_oracle, ida_star, Domain};
use apdb_core::tiles::{
    random_solvable, tile_registry, Board, Dir, Partition, TileContext, TilePuzzle, TileState,
};
use apdb_core::{Budget, Heuristic};
use proptest::prelude::*;
use rustc_hash::FxHashMap;

const HEURISTICS: [&str; 6] = [
    "manhattan",
    "linear-conflict",
    "static-pdb",
    "dynamic-mm",
    "dynamic-wvc-pairs",
    "dynamic-wvc",
];

struct Eight {
    heuristics: Vec<Box<dyn Heuristic<TileState>>>,
    dist: FxHashMap<TileState, u32>,
}

fn eight() -> &'static Eight {
    static CELL: OnceLock<Eight> = OnceLock::new();
    CELL.get_or_init(|| {
        let board = Board::square(3).unwrap();
        let partition = Partition::new(board, vec![vec![1, 2, 3, 4], vec![5, 6, 7, 8]]).unwrap();
        let ctx = TileContext::new(board).with_partition(partition);
        let reg = tile_registry();
        let heuristics = HEURISTICS.iter().map(|n| reg.build(n, &ctx).unwrap()).collect();
        let goal = TileState::goal(board);
        let dist = bfs_oracle(&TilePuzzle::new(goal.clone()), &goal, None).unwrap();
        Eight { heuristics, dist }
    })
}

fn walk(board: Board, steps: &[u8]) -> TileState {
    let mut s = TileState::goal(board);
    for &d in steps {
        if let Some((_, next)) = s.apply(Dir::ALL[d as usize % 4]) {
            s = next;
        }
    }
    s
}

#[test]
fn every_eight_puzzle_heuristic_is_admissible_everywhere() {
    let e = eight();
    assert_eq!(e.dist.len(), 181_440);
    for (state, &d) in &e.dist {
        for h in &e.heuristics {
            assert!(h.estimate(state) <= d, "{} {} > {d} at {state}", h.name(), h.estimate(state));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // Database heuristics minimize over blank positions, and pattern tiles
    // can cut the blank's region in two, so they are admissible without
    // being consistent. Only the two closed-form bounds are checked here.
    #[test]
    fn closed_form_heuristics_are_consistent(steps in prop::collection::vec(0u8..4, 0..60)) {
        let e = eight();
        let s = walk(Board::square(3).unwrap(), &steps);
        for (_, next) in s.successors() {
            for h in &e.heuristics[..2] {
                let (a, b) = (h.estimate(&s) as i64, h.estimate(&next) as i64);
                prop_assert!((a - b).abs() <= 1, "{} jumps {a} -> {b}", h.name());
            }
        }
    }

    #[test]
    fn ida_star_matches_the_oracle(seed in 0u64..1_000_000) {
        let e = eight();
        let start = random_solvable(Board::square(3).unwrap(), seed);
        let puzzle = TilePuzzle::new(start.clone());
        prop_assert!(puzzle.is_goal(&TileState::goal(start.board())));
        for h in &e.heuristics {
            let stats = ida_star(&puzzle, h.as_ref(), &start, Budget::UNLIMITED);
            prop_assert_eq!(stats.solution_cost, Some(e.dist[&start]), "{}", h.name());
        }
    }

    #[test]
    fn random_states_are_solvable(seed in any::<u64>(), side in 2usize..=6) {
        let s = random_solvable(Board::square(side).unwrap(), seed);
        prop_assert!(s.is_solvable());
        prop_assert_eq!(s.reflected().reflected(), s.clone());
    }
}

fn fifteen() -> &'static [Box<dyn Heuristic<TileState>>] {
    static CELL: OnceLock<Vec<Box<dyn Heuristic<TileState>>>> = OnceLock::new();
    CELL.get_or_init(|| {
        let ctx = TileContext::new(Board::square(4).unwrap());
        let reg = tile_registry();
        ["manhattan", "dynamic-mm", "dynamic-wvc-pairs", "dynamic-wvc"]
            .iter()
            .map(|n| reg.build(n, &ctx).unwrap())
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dynamic_heuristics_are_ordered(seed in any::<u64>()) {
        let s = random_solvable(Board::square(4).unwrap(), seed);
        let v: Vec<u32> = fifteen().iter().map(|h| h.estimate(&s)).collect();
        prop_assert!(v[0] <= v[1] && v[1] <= v[2] && v[2] <= v[3], "{v:?}");
    }
}

#[test]
fn shared_pairs_database_serves_both_modes() {
    let board = Board::square(3).unwrap();
    let ctx = TileContext::new(board);
    let with_triples = ctx.pairs_db(true).unwrap();
    // the pair-only request reuses the richer database
    assert!(Arc::ptr_eq(&with_triples, &ctx.pairs_db(false).unwrap()));
}
