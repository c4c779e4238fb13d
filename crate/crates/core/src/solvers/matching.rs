use super::{WeightedHypergraph, COMPONENT_CAP};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedMatching {
    pub value: u32,
    /// Indices into the hypergraph's `edges`.
    pub edges: Vec<usize>,
    /// Some component exceeded the cap and was matched greedily.
    pub capped: bool,
}

/// Maximum-weight set of vertex-disjoint pair edges (hyperedges are
/// ignored). Each component is solved exactly by branch-and-bound when it
/// has at most `cap` vertices, greedily otherwise.
pub fn max_weighted_matching(h: &WeightedHypergraph, cap: Option<usize>) -> WeightedMatching {
    let cap = cap.unwrap_or(COMPONENT_CAP).min(64);
    let mut out = WeightedMatching {
        value: 0,
        edges: Vec::new(),
        capped: false,
    };
    for comp in h.pairs_only().components() {
        let (value, chosen) = if comp.vertices.len() <= cap {
            exact_component(&comp.graph)
        } else {
            out.capped = true;
            let g = greedy_weighted_matching(&comp.graph);
            (g.value, g.edges)
        };
        out.value += value;
        out.edges.extend(chosen.into_iter().map(|e| comp.edge_origin[e]));
    }
    out.edges.sort_unstable();
    out
}

/// Heaviest-edge-first greedy matching. Its value is at least half the
/// optimum and never above it.
pub fn greedy_weighted_matching(h: &WeightedHypergraph) -> WeightedMatching {
    let mut order: Vec<usize> = (0..h.edges.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(h.edges[i].1));
    let mut used = vec![false; h.vertex_count];
    let mut value = 0;
    let mut edges = Vec::new();
    for i in order {
        let ([a, b], w) = h.edges[i];
        if !used[a] && !used[b] {
            used[a] = true;
            used[b] = true;
            value += w;
            edges.push(i);
        }
    }
    edges.sort_unstable();
    WeightedMatching {
        value,
        edges,
        capped: false,
    }
}

fn exact_component(g: &WeightedHypergraph) -> (u32, Vec<usize>) {
    let mut order: Vec<usize> = (0..g.edges.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(g.edges[i].1));
    let edges: Vec<(u64, u32)> = order
        .iter()
        .map(|&i| {
            let ([a, b], w) = g.edges[i];
            ((1u64 << a) | (1u64 << b), w)
        })
        .collect();
    let mut suffix = vec![0u32; edges.len() + 1];
    for i in (0..edges.len()).rev() {
        suffix[i] = suffix[i + 1] + edges[i].1;
    }

    struct Search<'a> {
        edges: &'a [(u64, u32)],
        suffix: &'a [u32],
        best: u32,
        best_set: Vec<usize>,
        current: Vec<usize>,
    }
    impl Search<'_> {
        fn go(&mut self, i: usize, used: u64, value: u32) {
            if value > self.best {
                self.best = value;
                self.best_set = self.current.clone();
            }
            if i == self.edges.len() || value + self.suffix[i] <= self.best {
                return;
            }
            let (mask, w) = self.edges[i];
            if used & mask == 0 {
                self.current.push(i);
                self.go(i + 1, used | mask, value + w);
                self.current.pop();
            }
            self.go(i + 1, used, value);
        }
    }

    let mut s = Search {
        edges: &edges,
        suffix: &suffix,
        best: 0,
        best_set: Vec::new(),
        current: Vec::new(),
    };
    s.go(0, 0, 0);
    let chosen = s.best_set.iter().map(|&i| order[i]).collect();
    (s.best, chosen)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_of_twos_matches_one_edge() {
        let mut h = WeightedHypergraph::new(3);
        h.add_edge(0, 1, 2);
        h.add_edge(1, 2, 2);
        h.add_edge(0, 2, 2);
        let m = max_weighted_matching(&h, None);
        assert_eq!(m.value, 2);
        assert_eq!(m.edges.len(), 1);
    }

    #[test]
    fn empty_graph_is_zero() {
        let m = max_weighted_matching(&WeightedHypergraph::new(5), None);
        assert_eq!(m.value, 0);
        assert!(!m.capped);
    }

    #[test]
    fn prefers_two_light_edges_over_one_heavy() {
        // path a-b-c-d with weights 3, 4, 3
        let mut h = WeightedHypergraph::new(4);
        h.add_edge(0, 1, 3);
        h.add_edge(1, 2, 4);
        h.add_edge(2, 3, 3);
        assert_eq!(max_weighted_matching(&h, None).value, 6);
        assert_eq!(greedy_weighted_matching(&h).value, 4);
    }

    #[test]
    fn over_cap_falls_back_to_greedy_and_flags() {
        let mut h = WeightedHypergraph::new(4);
        h.add_edge(0, 1, 3);
        h.add_edge(1, 2, 4);
        h.add_edge(2, 3, 3);
        let m = max_weighted_matching(&h, Some(3));
        assert!(m.capped);
        assert_eq!(m.value, 4);
    }
}
