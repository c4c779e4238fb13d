use std::sync::Arc;

use apdb_core::search::BranchProblem;
use apdb_core::solvers::oracles::vertex_cover_size;
use apdb_core::vertex_cover::{
    gen_delaunay_graph, gen_random_graph, solve_vc, static_partition, vc_registry, CliqueDb, CoverBound,
    DynamicCliques, Graph, MatchingBound, NoBound, StaticCliques, VcContext, VcSearch,
};
use apdb_core::Budget;
use proptest::prelude::*;

const MODES: [(&str, usize); 6] = [
    ("none", 2),
    ("static", 3),
    ("static", 4),
    ("dynamic", 3),
    ("dynamic", 4),
    ("matching", 2),
];

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (4usize..=16, prop::sample::select(vec![4.0, 8.0, 16.0]), any::<u64>())
        .prop_map(|(n, d, seed)| gen_random_graph(n, f64::min(d, n as f64 - 1.0), seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn every_mode_finds_the_optimum(g in graph_strategy()) {
        let want = vertex_cover_size(g.vertex_count(), &g.edges()).unwrap() as u32;
        let g = Arc::new(g);
        let reg = vc_registry();
        for (mode, k) in MODES {
            let ctx = VcContext::new(g.clone(), k);
            let out = solve_vc(&g, reg.build(mode, &ctx).unwrap(), Budget::UNLIMITED);
            prop_assert!(out.proven);
            prop_assert_eq!(out.cover_size, want, "{}-{}", mode, k);
            prop_assert!(g.edges().iter().all(|(u, v)| out.cover.contains(u) || out.cover.contains(v)));
        }
    }

    /// Decisions are taken along a random root-to-leaf path; at each node
    /// every bound stays within the remaining graph's optimum.
    #[test]
    fn bounds_are_admissible_along_random_paths(g in graph_strategy(), picks in prop::collection::vec(0usize..2, 16)) {
        let db = Arc::new(CliqueDb::build(&g, 4).unwrap());
        let mut bounds: Vec<Box<dyn CoverBound>> = vec![
            Box::new(StaticCliques::new(&g, &db)),
            Box::new(DynamicCliques::new(db.clone(), g.vertex_count())),
            Box::new(MatchingBound::default()),
        ];
        let mut s = VcSearch::new(&g, Box::new(NoBound));
        for &alt in &picks {
            s.propagate();
            if s.is_complete() {
                break;
            }
            let node = s.node();
            let remaining: Vec<(usize, usize)> = g
                .edges()
                .into_iter()
                .filter(|&(u, v)| node.is_undecided(u) && node.is_undecided(v))
                .collect();
            prop_assert_eq!(remaining.len(), node.remaining_edges());
            let opt = vertex_cover_size(g.vertex_count(), &remaining).unwrap() as u32;
            for b in &mut bounds {
                prop_assert!(b.evaluate(node) <= opt, "{} exceeds {}", b.name(), opt);
            }
            let v = s.choose();
            s.apply(&v, alt);
        }
    }
}

#[test]
fn clique_database_passes_self_check() {
    for seed in 0..5 {
        let g = gen_random_graph(60, 12.0, seed).unwrap();
        let db = CliqueDb::build(&g, 4).unwrap();
        db.verify(&g).unwrap();
        let part = static_partition(&g, &db);
        let mut seen = vec![false; 60];
        for c in &part {
            for &v in c {
                assert!(!seen[v], "partition reuses vertex {v}");
                seen[v] = true;
            }
        }
    }
}

#[test]
fn delaunay_small_instances_solve() {
    let g = gen_delaunay_graph(18, 4).unwrap();
    let want = vertex_cover_size(18, &g.edges()).unwrap() as u32;
    let db = Arc::new(CliqueDb::build(&g, 4).unwrap());
    let out = solve_vc(&g, Box::new(DynamicCliques::new(db, 18)), Budget::UNLIMITED);
    assert_eq!(out.cover_size, want);
}

#[test]
fn dimacs_files_roundtrip_through_disk() {
    let g = gen_random_graph(40, 6.0, 9).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    std::fs::write(&path, g.to_dimacs()).unwrap();
    let back = Graph::from_dimacs(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(back, g);
}
