use std::time::Instant;

use super::{Budget, Exhaustion, Limit, SearchStats};

/// A duplicate-free search tree explored in place: children are entered by
/// mutating the problem and left again through [`BranchProblem::rollback`].
pub trait BranchProblem {
    type Choice;
    type Mark: Copy;

    fn mark(&self) -> Self::Mark;
    fn rollback(&mut self, mark: Self::Mark);

    /// Applies forced decisions at the current node.
    fn propagate(&mut self);

    /// g: cost committed so far.
    fn cost(&self) -> u32;

    fn is_complete(&self) -> bool;

    /// h: admissible lower bound on the cost still to be added.
    fn lower_bound(&mut self) -> u32;

    fn choose(&mut self) -> Self::Choice;
    fn alternatives(&self, choice: &Self::Choice) -> usize;
    fn apply(&mut self, choice: &Self::Choice, alternative: usize);

    /// Called at a complete node that beats the incumbent.
    fn record_incumbent(&mut self) {}
}

/// Depth-first branch-and-bound.
///
/// `initial_bound` is the cost of a solution known in advance; only strictly
/// better solutions are searched for. Nodes with g + h at or above the
/// incumbent are pruned. On budget exhaustion the incumbent is still
/// reported in `solution_cost`, with `exhausted` set to mark it unproven.
pub fn dfbnb<P: BranchProblem>(
    problem: &mut P,
    initial_bound: Option<u32>,
    budget: Budget,
) -> SearchStats {
    let clock = Instant::now();
    let mut run = Bnb {
        incumbent: initial_bound.unwrap_or(u32::MAX),
        budget,
        stats: SearchStats::default(),
        largest_f: 0,
        aborted: false,
    };
    run.visit(problem, 1);

    let mut stats = run.stats;
    if run.incumbent != u32::MAX {
        stats.solution_cost = Some(run.incumbent);
    }
    if run.aborted {
        stats.exhausted = Some(Exhaustion {
            limit: Limit::Generated,
            largest_f: run.largest_f,
        });
    }
    stats.elapsed = clock.elapsed().as_secs_f64();
    stats
}

struct Bnb {
    incumbent: u32,
    budget: Budget,
    stats: SearchStats,
    largest_f: u32,
    aborted: bool,
}

impl Bnb {
    fn visit<P: BranchProblem>(&mut self, problem: &mut P, depth: u64) {
        self.stats.nodes_generated += 1;
        self.stats.max_stored = self.stats.max_stored.max(depth);
        if self.budget.generated_exceeded(self.stats.nodes_generated) {
            self.aborted = true;
            return;
        }

        let entry = problem.mark();
        problem.propagate();
        let g = problem.cost();
        if problem.is_complete() {
            if g < self.incumbent {
                self.incumbent = g;
                problem.record_incumbent();
            }
            problem.rollback(entry);
            return;
        }
        if g >= self.incumbent {
            problem.rollback(entry);
            return;
        }
        let f = g + problem.lower_bound();
        if f >= self.incumbent {
            problem.rollback(entry);
            return;
        }
        self.largest_f = self.largest_f.max(f);
        self.stats.nodes_expanded += 1;

        let choice = problem.choose();
        for alt in 0..problem.alternatives(&choice) {
            let before = problem.mark();
            problem.apply(&choice, alt);
            self.visit(problem, depth + 1);
            problem.rollback(before);
            if self.aborted {
                break;
            }
        }
        problem.rollback(entry);
    }
}
