use std::sync::Arc;

use super::{static_partition, CliqueDb, Graph, Status, VcNode};
use crate::solvers::max_cardinality_matching;

/// Admissible lower bound on how many more vertices a node's cover needs.
pub trait CoverBound: Send {
    fn name(&self) -> &str;
    fn evaluate(&mut self, node: &VcNode<'_>) -> u32;
}

#[derive(Clone, Copy, Debug, Default)]
pub struct NoBound;

impl CoverBound for NoBound {
    fn name(&self) -> &str {
        "none"
    }
    fn evaluate(&mut self, _: &VcNode<'_>) -> u32 {
        0
    }
}

/// A clique partition chosen once on the full graph. A k-clique still owes
/// k-1 vertices minus those already included.
#[derive(Clone, Debug)]
pub struct StaticCliques {
    name: String,
    partition: Vec<Vec<usize>>,
}

impl StaticCliques {
    pub fn new(graph: &Graph, db: &CliqueDb) -> Self {
        Self::from_partition(static_partition(graph, db), db.max_k())
    }

    pub fn from_partition(partition: Vec<Vec<usize>>, max_k: usize) -> Self {
        StaticCliques {
            name: format!("static-{max_k}"),
            partition,
        }
    }

    pub fn partition(&self) -> &[Vec<usize>] {
        &self.partition
    }
}

impl CoverBound for StaticCliques {
    fn name(&self) -> &str {
        &self.name
    }
    fn evaluate(&mut self, node: &VcNode<'_>) -> u32 {
        self.partition
            .iter()
            .map(|c| {
                let inc = c.iter().filter(|&&v| node.status(v) == Status::Included).count();
                (c.len() - 1).saturating_sub(inc) as u32
            })
            .sum()
    }
}

/// Greedy vertex-disjoint selection, redone at every node, among database
/// cliques lying wholly in the remaining graph; 4-cliques, then triangles,
/// then edges, each in database order.
#[derive(Clone, Debug)]
pub struct DynamicCliques {
    name: String,
    db: Arc<CliqueDb>,
    used: Vec<bool>,
    touched: Vec<usize>,
}

impl DynamicCliques {
    pub fn new(db: Arc<CliqueDb>, vertex_count: usize) -> Self {
        DynamicCliques {
            name: format!("dynamic-{}", db.max_k()),
            db,
            used: vec![false; vertex_count],
            touched: Vec::new(),
        }
    }

    fn take(&mut self, clique: &[usize]) {
        for &v in clique {
            self.used[v] = true;
        }
        self.touched.extend_from_slice(clique);
    }
}

impl CoverBound for DynamicCliques {
    fn name(&self) -> &str {
        &self.name
    }

    fn evaluate(&mut self, node: &VcNode<'_>) -> u32 {
        let db = Arc::clone(&self.db);
        let free = |used: &[bool], v: usize| !used[v] && node.is_undecided(v);
        let mut h = 0;
        for q in db.quads() {
            if q.iter().all(|&v| free(&self.used, v)) {
                self.take(q);
                h += 3;
            }
        }
        for t in db.triangles() {
            if t.iter().all(|&v| free(&self.used, v)) {
                self.take(t);
                h += 2;
            }
        }
        // same as scanning the lexicographic edge list, restricted to free
        // endpoints
        let graph = node.graph();
        for u in 0..graph.vertex_count() {
            if !free(&self.used, u) || node.degree(u) == 0 {
                continue;
            }
            if let Some(&v) = graph.neighbors(u).iter().find(|&&v| v > u && free(&self.used, v)) {
                self.take(&[u, v]);
                h += 1;
            }
        }
        for &v in &self.touched {
            self.used[v] = false;
        }
        self.touched.clear();
        h
    }
}

/// Size of a maximum matching of the remaining graph.
#[derive(Clone, Debug, Default)]
pub struct MatchingBound {
    local: Vec<usize>,
}

impl CoverBound for MatchingBound {
    fn name(&self) -> &str {
        "matching"
    }

    fn evaluate(&mut self, node: &VcNode<'_>) -> u32 {
        let graph = node.graph();
        let n = graph.vertex_count();
        self.local.clear();
        self.local.resize(n, usize::MAX);
        let mut verts = Vec::new();
        for v in 0..n {
            if node.is_undecided(v) && node.degree(v) > 0 {
                self.local[v] = verts.len();
                verts.push(v);
            }
        }
        let adj: Vec<Vec<usize>> = verts
            .iter()
            .map(|&v| {
                graph
                    .neighbors(v)
                    .iter()
                    .filter(|&&u| self.local[u] != usize::MAX)
                    .map(|&u| self.local[u])
                    .collect()
            })
            .collect();
        max_cardinality_matching(&adj).size as u32
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::BranchProblem;
    use crate::vertex_cover::VcSearch;

    fn triangle() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn root_values_on_a_triangle() {
        let g = triangle();
        let db = Arc::new(CliqueDb::build(&g, 4).unwrap());
        let s = VcSearch::new(&g, Box::new(NoBound));
        assert_eq!(StaticCliques::new(&g, &db).evaluate(s.node()), 2);
        assert_eq!(DynamicCliques::new(db, 3).evaluate(s.node()), 2);
        assert_eq!(MatchingBound::default().evaluate(s.node()), 1);
    }

    #[test]
    fn one_included_triangle_vertex() {
        let g = triangle();
        let db = Arc::new(CliqueDb::build(&g, 3).unwrap());
        let mut s = VcSearch::new(&g, Box::new(NoBound));
        s.apply(&0, 0);
        assert_eq!(StaticCliques::new(&g, &db).evaluate(s.node()), 1);
        assert_eq!(DynamicCliques::new(Arc::clone(&db), 3).evaluate(s.node()), 1);
        s.apply(&1, 0);
        assert_eq!(StaticCliques::new(&g, &db).evaluate(s.node()), 0);
    }

    #[test]
    fn disjoint_edges() {
        let g = Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        let db = Arc::new(CliqueDb::build(&g, 4).unwrap());
        let s = VcSearch::new(&g, Box::new(NoBound));
        assert_eq!(StaticCliques::new(&g, &db).evaluate(s.node()), 3);
        assert_eq!(DynamicCliques::new(db, 6).evaluate(s.node()), 3);
        assert_eq!(MatchingBound::default().evaluate(s.node()), 3);
    }
}
