use std::collections::VecDeque;

const NONE: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CardinalityMatching {
    pub size: usize,
    /// `mate[v]` is v's partner, if matched.
    pub mate: Vec<Option<usize>>,
}

/// Maximum-cardinality matching of a general graph given as adjacency
/// lists, by Edmonds' augmenting-path search with blossom contraction.
pub fn max_cardinality_matching(adj: &[Vec<usize>]) -> CardinalityMatching {
    let n = adj.len();
    let mut b = Blossom {
        adj,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        in_blossom: vec![false; n],
        queue: VecDeque::new(),
    };

    // Greedy start.
    for v in 0..n {
        if b.mate[v] == NONE {
            if let Some(&u) = adj[v].iter().find(|&&u| u != v && b.mate[u] == NONE) {
                b.mate[v] = u;
                b.mate[u] = v;
            }
        }
    }
    for root in 0..n {
        if b.mate[root] != NONE || adj[root].is_empty() {
            continue;
        }
        let mut v = b.find_path(root);
        while v != NONE {
            let pv = b.parent[v];
            let ppv = b.mate[pv];
            b.mate[v] = pv;
            b.mate[pv] = v;
            v = ppv;
        }
    }

    let mate: Vec<Option<usize>> = b.mate.iter().map(|&m| (m != NONE).then_some(m)).collect();
    let size = mate.iter().filter(|m| m.is_some()).count() / 2;
    CardinalityMatching { size, mate }
}

struct Blossom<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl Blossom<'_> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Returns the free vertex that ends an augmenting path from `root`.
    fn find_path(&mut self, root: usize) -> usize {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for &to in &self.adj[v] {
                if to == v || self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        NONE
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn adj(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
        let mut a = vec![Vec::new(); n];
        for &(u, v) in edges {
            a[u].push(v);
            a[v].push(u);
        }
        a
    }

    #[test]
    fn small_cases() {
        assert_eq!(max_cardinality_matching(&adj(3, &[(0, 1), (1, 2), (0, 2)])).size, 1);
        let path: Vec<(usize, usize)> = (0..9).map(|i| (i, i + 1)).collect();
        assert_eq!(max_cardinality_matching(&adj(10, &path)).size, 5);
        assert_eq!(max_cardinality_matching(&adj(4, &[])).size, 0);
    }

    #[test]
    fn needs_blossom() {
        // Odd cycle 0-1-2-3-4 with pendant 5 on 0 and 6 on 2; greedy can
        // strand the pendants, the optimum matches 3 pairs.
        let g = adj(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (2, 6)],
        );
        let m = max_cardinality_matching(&g);
        assert_eq!(m.size, 3);
        for (v, mate) in m.mate.iter().enumerate() {
            if let Some(u) = mate {
                assert_eq!(m.mate[*u], Some(v));
                assert!(g[v].contains(u));
            }
        }
    }
}
