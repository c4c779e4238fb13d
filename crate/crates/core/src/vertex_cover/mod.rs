//! Exact minimum vertex cover by depth-first branch-and-bound.

mod bounds;
mod cliques;
mod generators;
mod registry;
mod solve;

use std::fmt::Write as _;

use crate::error::{Error, Result};

pub use bounds::{CoverBound, DynamicCliques, MatchingBound, NoBound, StaticCliques};
pub use cliques::{static_partition, CliqueDb};
pub use generators::{gen_delaunay_graph, gen_random_graph};
pub use registry::{vc_registry, VcContext};
pub use solve::{solve_vc, Status, VcNode, VcOutcome, VcSearch};

/// Simple undirected graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Rejects self-loops and repeated edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!("edge ({u}, {v}) out of range for {n} vertices")));
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop on vertex {u}")));
            }
            if g.adj[u].contains(&v) {
                return Err(Error::invalid(format!("repeated edge ({u}, {v})")));
            }
            g.adj[u].push(v);
            g.adj[v].push(u);
            g.edge_count += 1;
        }
        g.adj.iter_mut().for_each(|a| a.sort_unstable());
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn mean_degree(&self) -> f64 {
        if self.adj.is_empty() {
            0.0
        } else {
            2.0 * self.edge_count as f64 / self.adj.len() as f64
        }
    }

    /// Edges with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, a) in self.adj.iter().enumerate() {
            out.extend(a.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// DIMACS-style text: `p N M`, then `e u v` per edge, 1-based.
    pub fn to_dimacs(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "p {} {}", self.vertex_count(), self.edge_count);
        for (u, v) in self.edges() {
            let _ = writeln!(s, "e {} {}", u + 1, v + 1);
        }
        s
    }

    /// Reads the format written by [`Graph::to_dimacs`]; also accepts the
    /// `p edge N M` header and `c` comment lines.
    pub fn from_dimacs(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        let parse_err = |line: usize, message: String| Error::Parse { line, message };
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let words: Vec<&str> = raw.split_whitespace().collect();
            match words.as_slice() {
                [] | ["c", ..] => {}
                ["p", rest @ ..] => {
                    let nums = match rest {
                        [_, n, m] | [n, m] => (n.parse::<usize>(), m.parse::<usize>()),
                        _ => return Err(parse_err(line_no, "malformed problem line".into())),
                    };
                    match nums {
                        (Ok(n), Ok(m)) if header.is_none() => header = Some((n, m)),
                        (Ok(_), Ok(_)) => return Err(parse_err(line_no, "second problem line".into())),
                        _ => return Err(parse_err(line_no, "bad vertex or edge count".into())),
                    }
                }
                ["e", u, v] => {
                    let (Some((n, _)), Ok(u), Ok(v)) = (header, u.parse::<usize>(), v.parse::<usize>()) else {
                        return Err(parse_err(line_no, "bad edge line or missing header".into()));
                    };
                    if u == 0 || v == 0 || u > n || v > n {
                        return Err(parse_err(line_no, format!("vertex out of range 1..={n}")));
                    }
                    edges.push((u - 1, v - 1));
                }
                _ => return Err(parse_err(line_no, format!("unrecognized line {raw:?}"))),
            }
        }
        let (n, m) = header.ok_or_else(|| parse_err(0, "missing problem line".into()))?;
        if edges.len() != m {
            return Err(parse_err(0, format!("header promises {m} edges, found {}", edges.len())));
        }
        Graph::from_edges(n, &edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_simple_graphs() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
    }

    #[test]
    fn dimacs_roundtrip_and_variants() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3), (1, 2)]).unwrap();
        let text = g.to_dimacs();
        assert!(text.starts_with("p 4 3\n"));
        assert_eq!(Graph::from_dimacs(&text).unwrap(), g);
        let alt = "c comment\np edge 4 3\ne 1 2\ne 3 4\ne 2 3\n";
        assert_eq!(Graph::from_dimacs(alt).unwrap(), g);
        assert!(Graph::from_dimacs("p 2 1\ne 1 3\n").is_err());
        assert!(Graph::from_dimacs("p 2 2\ne 1 2\n").is_err());
    }
}
