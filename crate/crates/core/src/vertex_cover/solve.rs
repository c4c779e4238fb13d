use super::{CoverBound, Graph};
use crate::search::{dfbnb, BranchProblem, Budget, SearchStats};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Undecided,
    Included,
    Excluded,
}

/// The remaining graph at a search node: the undecided vertices and the
/// edges between them. An undecided vertex never has an excluded
/// neighbor, so every uncovered edge lies inside this subgraph.
#[derive(Clone, Debug)]
pub struct VcNode<'g> {
    graph: &'g Graph,
    status: Vec<Status>,
    /// Undecided neighbors of each undecided vertex; frozen once decided.
    degree: Vec<u32>,
    remaining_edges: usize,
    included: u32,
    trail: Vec<usize>,
    queue: Vec<usize>,
    queue_degree: u32,
}

impl<'g> VcNode<'g> {
    fn new(graph: &'g Graph, triangle_rule: bool) -> Self {
        let n = graph.vertex_count();
        VcNode {
            graph,
            status: vec![Status::Undecided; n],
            degree: (0..n).map(|v| graph.degree(v) as u32).collect(),
            remaining_edges: graph.edge_count(),
            included: 0,
            trail: Vec::with_capacity(n),
            queue: (0..n).collect(),
            queue_degree: if triangle_rule { 2 } else { 1 },
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    #[inline]
    pub fn status(&self, v: usize) -> Status {
        self.status[v]
    }

    #[inline]
    pub fn is_undecided(&self, v: usize) -> bool {
        self.status[v] == Status::Undecided
    }

    /// Degree of an undecided vertex in the remaining graph.
    #[inline]
    pub fn degree(&self, v: usize) -> u32 {
        self.degree[v]
    }

    pub fn remaining_edges(&self) -> usize {
        self.remaining_edges
    }

    pub fn included(&self) -> u32 {
        self.included
    }

    pub fn included_vertices(&self) -> Vec<usize> {
        (0..self.status.len()).filter(|&v| self.status[v] == Status::Included).collect()
    }

    fn decide(&mut self, v: usize, to: Status) {
        debug_assert!(self.is_undecided(v));
        self.status[v] = to;
        if to == Status::Included {
            self.included += 1;
        }
        for &u in self.graph.neighbors(v) {
            if self.status[u] == Status::Undecided {
                self.degree[u] -= 1;
                if self.degree[u] <= self.queue_degree {
                    self.queue.push(u);
                }
            }
        }
        self.remaining_edges -= self.degree[v] as usize;
        self.trail.push(v);
    }

    fn include(&mut self, v: usize) {
        self.decide(v, Status::Included);
    }

    /// Excluding a vertex forces every undecided neighbor into the cover.
    fn exclude(&mut self, v: usize) {
        for i in 0..self.graph.degree(v) {
            let u = self.graph.neighbors(v)[i];
            if self.is_undecided(u) {
                self.include(u);
            }
        }
        self.decide(v, Status::Excluded);
    }

    fn undecided_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.graph.neighbors(v).iter().copied().filter(|&u| self.is_undecided(u))
    }

    fn undo_to(&mut self, len: usize) {
        while self.trail.len() > len {
            let v = self.trail.pop().expect("trail underflow");
            if self.status[v] == Status::Included {
                self.included -= 1;
            }
            self.status[v] = Status::Undecided;
            for &u in self.graph.neighbors(v) {
                if self.status[u] == Status::Undecided {
                    self.degree[u] += 1;
                }
            }
            self.remaining_edges += self.degree[v] as usize;
        }
        self.queue.clear();
    }

    /// Isolated vertices are excluded; a degree-1 vertex is excluded in
    /// favor of its neighbor; with the triangle rule, a degree-2 vertex
    /// whose neighbors are adjacent is excluded in favor of both.
    fn propagate(&mut self) {
        while let Some(v) = self.queue.pop() {
            if !self.is_undecided(v) {
                continue;
            }
            match self.degree[v] {
                0 => self.decide(v, Status::Excluded),
                1 => self.exclude(v),
                2 if self.queue_degree >= 2 => {
                    let mut it = self.undecided_neighbors(v);
                    let (a, b) = (it.next().expect("degree 2"), it.next().expect("degree 2"));
                    drop(it);
                    if self.graph.has_edge(a, b) {
                        self.exclude(v);
                    }
                }
                _ => {}
            }
        }
    }
}

/// Branch-and-bound over include/exclude decisions, always branching on an
/// undecided vertex of largest remaining degree (lowest index on ties).
pub struct VcSearch<'g> {
    node: VcNode<'g>,
    bound: Box<dyn CoverBound + 'g>,
    best: Vec<usize>,
}

impl<'g> VcSearch<'g> {
    pub fn new(graph: &'g Graph, bound: Box<dyn CoverBound + 'g>) -> Self {
        VcSearch {
            node: VcNode::new(graph, false),
            bound,
            best: Vec::new(),
        }
    }

    /// Enables the degree-2 triangle rule.
    pub fn with_triangle_rule(mut self) -> Self {
        self.node.queue_degree = 2;
        self
    }

    pub fn node(&self) -> &VcNode<'g> {
        &self.node
    }

    pub fn best_cover(&self) -> &[usize] {
        &self.best
    }
}

impl BranchProblem for VcSearch<'_> {
    type Choice = usize;
    type Mark = usize;

    fn mark(&self) -> usize {
        self.node.trail.len()
    }

    fn rollback(&mut self, mark: usize) {
        self.node.undo_to(mark);
    }

    fn propagate(&mut self) {
        self.node.propagate();
    }

    fn cost(&self) -> u32 {
        self.node.included
    }

    fn is_complete(&self) -> bool {
        self.node.remaining_edges == 0
    }

    fn lower_bound(&mut self) -> u32 {
        self.bound.evaluate(&self.node)
    }

    fn choose(&mut self) -> usize {
        let n = &self.node;
        let mut best = usize::MAX;
        let mut best_deg = 0;
        for v in 0..n.status.len() {
            if n.status[v] == Status::Undecided && n.degree[v] > best_deg {
                best = v;
                best_deg = n.degree[v];
            }
        }
        best
    }

    fn alternatives(&self, _: &usize) -> usize {
        2
    }

    fn apply(&mut self, &v: &usize, alternative: usize) {
        if alternative == 0 {
            self.node.include(v);
        } else {
            self.node.exclude(v);
        }
    }

    fn record_incumbent(&mut self) {
        self.best = self.node.included_vertices();
    }
}

#[derive(Clone, Debug)]
pub struct VcOutcome {
    /// Smallest cover found; optimal when `proven`.
    pub cover_size: u32,
    pub cover: Vec<usize>,
    pub proven: bool,
    pub stats: SearchStats,
}

pub fn solve_vc(graph: &Graph, bound: Box<dyn CoverBound + '_>, budget: Budget) -> VcOutcome {
    let mut search = VcSearch::new(graph, bound);
    run(&mut search, budget)
}

pub(crate) fn run(search: &mut VcSearch<'_>, budget: Budget) -> VcOutcome {
    let n = search.node.graph.vertex_count();
    let stats = dfbnb(search, None, budget);
    let (cover_size, cover) = match stats.solution_cost {
        Some(c) => (c, search.best.clone()),
        // nothing found before the budget ran out
        None => (n as u32, (0..n).collect()),
    };
    VcOutcome {
        cover_size,
        cover,
        proven: stats.is_solved(),
        stats,
    }
}
