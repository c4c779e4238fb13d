use apdb_core::solvers::oracles::{cardinality_matching_size, cover_value, matching_value};
use apdb_core::solvers::{max_cardinality_matching, max_weighted_matching, min_weighted_cover, WeightedHypergraph};
use proptest::prelude::*;

/// Up to 7 vertices, distinct pair edges with even weights (as in the tile
/// conflict graphs) and a few triples.
fn hypergraph(max_edges: usize, triples: bool) -> impl Strategy<Value = WeightedHypergraph> {
    (3usize..=7).prop_flat_map(move |n| {
        let pairs: Vec<[usize; 2]> = (0..n).flat_map(|a| (a + 1..n).map(move |b| [a, b])).collect();
        let edges = prop::sample::subsequence(pairs, 0..=max_edges.min(n * (n - 1) / 2))
            .prop_flat_map(|es| {
                let k = es.len();
                (Just(es), prop::collection::vec(prop::sample::select(vec![2u32, 2, 2, 4, 6]), k))
            });
        let hyper = prop::collection::vec(
            (prop::sample::subsequence((0..n).collect::<Vec<_>>(), 3), prop::sample::select(vec![2u32, 4])),
            0..if triples { 3 } else { 1 },
        );
        (Just(n), edges, hyper)
    })
    .prop_map(|(n, (es, ws), hy)| {
        let mut h = WeightedHypergraph::new(n);
        for (e, w) in es.into_iter().zip(ws) {
            h.add_edge(e[0], e[1], w);
        }
        for (v, w) in hy {
            h.add_hyperedge([v[0], v[1], v[2]], w);
        }
        h
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn matching_equals_enumeration(h in hypergraph(14, false)) {
        let m = max_weighted_matching(&h, None);
        prop_assert!(!m.capped);
        prop_assert_eq!(m.value, matching_value(&h).unwrap());
        let picked: u32 = m.edges.iter().map(|&i| h.edges[i].1).sum();
        prop_assert_eq!(picked, m.value);
    }

    #[test]
    fn covers_equal_enumeration(h in hypergraph(10, true)) {
        for strengthened in [false, true] {
            let c = min_weighted_cover(&h, strengthened, None);
            prop_assert!(!c.capped);
            prop_assert_eq!(c.value, cover_value(&h, strengthened).unwrap(), "strengthened {}", strengthened);
        }
    }

    #[test]
    fn cover_dominates_matching(h in hypergraph(14, true)) {
        let m = max_weighted_matching(&h, None).value;
        let plain = min_weighted_cover(&h, false, None).value;
        let strong = min_weighted_cover(&h, true, None).value;
        prop_assert!(m <= plain && plain <= strong, "{m} {plain} {strong}");
    }

    #[test]
    fn capped_components_fall_back_admissibly(h in hypergraph(14, true)) {
        let exact = min_weighted_cover(&h, true, None).value;
        let capped = min_weighted_cover(&h, true, Some(2));
        prop_assert!(capped.value <= exact);
    }

    #[test]
    fn cardinality_matching_equals_enumeration(n in 2usize..=12, raw in prop::collection::vec((0usize..12, 0usize..12), 0..20)) {
        let mut edges: Vec<(usize, usize)> = raw
            .into_iter()
            .map(|(a, b)| (a % n, b % n))
            .filter(|(a, b)| a != b)
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        edges.sort();
        edges.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let m = max_cardinality_matching(&adj);
        prop_assert_eq!(m.size, cardinality_matching_size(n, &edges).unwrap());
        let matched = m.mate.iter().filter(|x| x.is_some()).count();
        prop_assert_eq!(matched, 2 * m.size);
        for (v, mate) in m.mate.iter().enumerate() {
            if let Some(u) = *mate {
                prop_assert_eq!(m.mate[u], Some(v));
                prop_assert!(adj[v].contains(&u));
            }
        }
    }
}
