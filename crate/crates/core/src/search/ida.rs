use std::time::Instant;

use super::{Budget, Domain, Exhaustion, Heuristic, Limit, OpId, SearchStats, Successor};

/// Iterative-deepening A*.
///
/// The first threshold is h(start); each following threshold is the smallest
/// f that exceeded the previous one. The operator that undoes the last move
/// is never applied.
pub fn ida_star<D: Domain>(
    domain: &D,
    heuristic: &dyn Heuristic<D::State>,
    start: &D::State,
    budget: Budget,
) -> SearchStats {
    let clock = Instant::now();
    let fallbacks_before = heuristic.fallbacks();
    let mut run = Ida {
        domain,
        heuristic,
        budget,
        stats: SearchStats::default(),
        next_bound: u32::MAX,
        largest_f: 0,
        aborted: false,
        buffers: Vec::new(),
    };

    let mut bound = heuristic.estimate(start);
    loop {
        run.stats.thresholds.push(bound);
        run.next_bound = u32::MAX;
        if let Some(cost) = run.dfs(start, 0, bound, None, 0) {
            run.stats.solution_cost = Some(cost);
            break;
        }
        if run.aborted {
            run.stats.exhausted = Some(Exhaustion {
                limit: Limit::Generated,
                largest_f: run.largest_f,
            });
            break;
        }
        if run.next_bound == u32::MAX {
            // Space exhausted without reaching a goal.
            break;
        }
        bound = run.next_bound;
    }

    let mut stats = run.stats;
    stats.heuristic_fallbacks = heuristic.fallbacks() - fallbacks_before;
    stats.elapsed = clock.elapsed().as_secs_f64();
    stats
}

struct Ida<'a, D: Domain> {
    domain: &'a D,
    heuristic: &'a dyn Heuristic<D::State>,
    budget: Budget,
    stats: SearchStats,
    next_bound: u32,
    largest_f: u32,
    aborted: bool,
    buffers: Vec<Vec<Successor<D::State>>>,
}

impl<D: Domain> Ida<'_, D> {
    fn dfs(
        &mut self,
        state: &D::State,
        g: u32,
        bound: u32,
        forbidden: Option<OpId>,
        depth: usize,
    ) -> Option<u32> {
        let f = g.saturating_add(self.heuristic.estimate(state));
        if f > bound {
            self.next_bound = self.next_bound.min(f);
            return None;
        }
        if self.domain.is_goal(state) {
            return Some(g);
        }
        self.stats.nodes_expanded += 1;
        self.largest_f = self.largest_f.max(f);
        self.stats.max_stored = self.stats.max_stored.max(depth as u64 + 1);

        if depth == self.buffers.len() {
            self.buffers.push(Vec::new());
        }
        let mut children = std::mem::take(&mut self.buffers[depth]);
        children.clear();
        self.domain.successors(state, &mut children);

        let mut found = None;
        for child in &children {
            if forbidden == Some(child.op) {
                continue;
            }
            self.stats.nodes_generated += 1;
            if self.budget.generated_exceeded(self.stats.nodes_generated) {
                self.aborted = true;
                break;
            }
            found = self.dfs(&child.state, g + child.cost, bound, child.reverse, depth + 1);
            if found.is_some() || self.aborted {
                break;
            }
        }
        self.buffers[depth] = children;
        found
    }
}
