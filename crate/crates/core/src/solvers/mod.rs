//! Exact solvers for the small combinatorial problems that combine
//! dynamically-partitioned heuristics, plus brute-force oracles to check
//! them against.

mod cardinality;
mod cover;
mod matching;
pub mod oracles;

pub use cardinality::{max_cardinality_matching, CardinalityMatching};
pub use cover::{min_weighted_cover, CoverOutcome};
pub use matching::{greedy_weighted_matching, max_weighted_matching, WeightedMatching};

/// Default per-component vertex cap for the exponential solvers.
pub const COMPONENT_CAP: usize = 12;

/// Vertices `0..vertex_count`, weighted pair edges and weighted triples.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightedHypergraph {
    pub vertex_count: usize,
    pub edges: Vec<([usize; 2], u32)>,
    pub hyperedges: Vec<([usize; 3], u32)>,
}

/// A connected piece of a hypergraph, relabelled to `0..vertices.len()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    /// Original vertex id of each local vertex.
    pub vertices: Vec<usize>,
    pub graph: WeightedHypergraph,
    /// Indices into the parent's `edges` of each local edge.
    pub edge_origin: Vec<usize>,
}

impl WeightedHypergraph {
    pub fn new(vertex_count: usize) -> Self {
        WeightedHypergraph {
            vertex_count,
            ..Default::default()
        }
    }

    pub fn add_edge(&mut self, a: usize, b: usize, weight: u32) {
        debug_assert!(a != b && weight >= 1);
        self.edges.push(([a, b], weight));
    }

    pub fn add_hyperedge(&mut self, v: [usize; 3], weight: u32) {
        debug_assert!(weight >= 1);
        self.hyperedges.push((v, weight));
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty() && self.hyperedges.is_empty()
    }

    /// Copy without hyperedges.
    pub fn pairs_only(&self) -> WeightedHypergraph {
        WeightedHypergraph {
            vertex_count: self.vertex_count,
            edges: self.edges.clone(),
            hyperedges: Vec::new(),
        }
    }

    /// Connected components under edge and hyperedge incidence. Vertices
    /// touching nothing are left out.
    pub fn components(&self) -> Vec<Component> {
        let n = self.vertex_count;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut touched = vec![false; n];
        let union = |p: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (find(p, a), find(p, b));
            if ra != rb {
                p[ra.max(rb)] = ra.min(rb);
            }
        };
        for &([a, b], _) in &self.edges {
            touched[a] = true;
            touched[b] = true;
            union(&mut parent, a, b);
        }
        for &([a, b, c], _) in &self.hyperedges {
            touched[a] = true;
            touched[b] = true;
            touched[c] = true;
            union(&mut parent, a, b);
            union(&mut parent, a, c);
        }

        let mut comp_of = vec![usize::MAX; n];
        let mut local = vec![usize::MAX; n];
        let mut comps: Vec<Component> = Vec::new();
        for v in 0..n {
            if !touched[v] {
                continue;
            }
            let r = find(&mut parent, v);
            if comp_of[r] == usize::MAX {
                comp_of[r] = comps.len();
                comps.push(Component {
                    vertices: Vec::new(),
                    graph: WeightedHypergraph::default(),
                    edge_origin: Vec::new(),
                });
            }
            let c = &mut comps[comp_of[r]];
            local[v] = c.vertices.len();
            c.vertices.push(v);
        }
        for (idx, &([a, b], w)) in self.edges.iter().enumerate() {
            let c = &mut comps[comp_of[find(&mut parent, a)]];
            c.graph.edges.push(([local[a], local[b]], w));
            c.edge_origin.push(idx);
        }
        for &([a, b, cc], w) in &self.hyperedges {
            let c = &mut comps[comp_of[find(&mut parent, a)]];
            c.graph.hyperedges.push(([local[a], local[b], local[cc]], w));
        }
        for c in &mut comps {
            c.graph.vertex_count = c.vertices.len();
        }
        comps
    }

    /// Largest total weight of constraints touching each vertex.
    pub(crate) fn max_incident_weight(&self) -> Vec<u32> {
        let mut m = vec![0u32; self.vertex_count];
        for &(vs, w) in &self.edges {
            for v in vs {
                m[v] = m[v].max(w);
            }
        }
        for &(vs, w) in &self.hyperedges {
            for v in vs {
                m[v] = m[v].max(w);
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn components_split_and_relabel() {
        let mut h = WeightedHypergraph::new(8);
        h.add_edge(5, 7, 2);
        h.add_edge(0, 1, 2);
        h.add_hyperedge([1, 2, 3], 4);
        let comps = h.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].vertices, vec![0, 1, 2, 3]);
        assert_eq!(comps[0].graph.edges, vec![([0, 1], 2)]);
        assert_eq!(comps[0].graph.hyperedges, vec![([1, 2, 3], 4)]);
        assert_eq!(comps[1].vertices, vec![5, 7]);
        assert_eq!(comps[1].edge_origin, vec![0]);
    }
}
