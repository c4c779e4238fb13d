use std::collections::hash_map::Entry;
use std::time::Instant;

use rustc_hash::FxHashMap;

use super::{Budget, Domain, Exhaustion, Heuristic, Limit, OpId, SearchStats, Successor};

struct OpenNode {
    g: u32,
    h: u32,
    /// Operators leading to already-expanded neighbors.
    closed_ops: u128,
}

/// Open list bucketed by f, then by h, so the lowest f with the lowest h is
/// always selected next. Entries may go stale when a node's g improves; they
/// are filtered when popped.
struct Buckets<S> {
    by_f: Vec<Vec<Vec<S>>>,
    cursor: usize,
}

impl<S> Buckets<S> {
    fn new() -> Self {
        Buckets {
            by_f: Vec::new(),
            cursor: 0,
        }
    }

    fn push(&mut self, f: u32, h: u32, state: S) {
        let (f, h) = (f as usize, h as usize);
        if self.by_f.len() <= f {
            self.by_f.resize_with(f + 1, Vec::new);
        }
        let row = &mut self.by_f[f];
        if row.len() <= h {
            row.resize_with(h + 1, Vec::new);
        }
        row[h].push(state);
        self.cursor = self.cursor.min(f);
    }

    fn pop(&mut self) -> Option<(u32, u32, S)> {
        while self.cursor < self.by_f.len() {
            let row = &mut self.by_f[self.cursor];
            for (h, stack) in row.iter_mut().enumerate() {
                if let Some(s) = stack.pop() {
                    return Some((self.cursor as u32, h as u32, s));
                }
            }
            row.clear();
            self.cursor += 1;
        }
        None
    }
}

/// Frontier-A*: best-first search that keeps only the Open list.
///
/// Each Open node records which of its operators lead to expanded
/// neighbors, so a closed node is never regenerated (this requires a
/// consistent heuristic, which every heuristic in the crate is). Ties on f
/// go to the smaller h. Only the solution cost is returned; the path is not
/// reconstructed.
pub fn frontier_a_star<D: Domain>(
    domain: &D,
    heuristic: &dyn Heuristic<D::State>,
    start: &D::State,
    budget: Budget,
) -> SearchStats {
    assert!(
        domain.operator_count() <= 128,
        "frontier search supports at most 128 operators"
    );
    let clock = Instant::now();
    let fallbacks_before = heuristic.fallbacks();
    let mut stats = SearchStats::default();

    let mut open: FxHashMap<D::State, OpenNode> = FxHashMap::default();
    let mut buckets = Buckets::new();
    let h0 = heuristic.estimate(start);
    open.insert(
        start.clone(),
        OpenNode {
            g: 0,
            h: h0,
            closed_ops: 0,
        },
    );
    buckets.push(h0, h0, start.clone());
    stats.max_stored = 1;

    let mut largest_f = 0;
    let mut children: Vec<Successor<D::State>> = Vec::new();

    while let Some((f, h, state)) = buckets.pop() {
        let node = match open.get(&state) {
            Some(n) if n.g + n.h == f && n.h == h => open.remove(&state).unwrap(),
            _ => continue,
        };
        largest_f = largest_f.max(f);
        if domain.is_goal(&state) {
            stats.solution_cost = Some(node.g);
            break;
        }
        stats.nodes_expanded += 1;

        children.clear();
        domain.successors(&state, &mut children);
        for child in children.drain(..) {
            if node.closed_ops & op_bit(child.op) != 0 {
                continue;
            }
            stats.nodes_generated += 1;
            let g = node.g + child.cost;
            let back = child.reverse.map_or(0, op_bit);
            match open.entry(child.state) {
                Entry::Occupied(mut e) => {
                    let existing = e.get_mut();
                    existing.closed_ops |= back;
                    if g < existing.g {
                        existing.g = g;
                        let hh = existing.h;
                        buckets.push(g + hh, hh, e.key().clone());
                    }
                }
                Entry::Vacant(e) => {
                    let hh = heuristic.estimate(e.key());
                    buckets.push(g + hh, hh, e.key().clone());
                    e.insert(OpenNode {
                        g,
                        h: hh,
                        closed_ops: back,
                    });
                }
            }
        }

        stats.max_stored = stats.max_stored.max(open.len() as u64);
        let limit = if budget.stored_exceeded(open.len() as u64) {
            Some(Limit::Stored)
        } else if budget.generated_exceeded(stats.nodes_generated) {
            Some(Limit::Generated)
        } else {
            None
        };
        if let Some(limit) = limit {
            stats.exhausted = Some(Exhaustion { limit, largest_f });
            break;
        }
    }

    stats.heuristic_fallbacks = heuristic.fallbacks() - fallbacks_before;
    stats.elapsed = clock.elapsed().as_secs_f64();
    stats
}

fn op_bit(op: OpId) -> u128 {
    1u128 << op
}
