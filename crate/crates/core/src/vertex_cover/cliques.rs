use super::Graph;
use crate::error::{Error, Result};

/// Every clique of 2 to `max_k` vertices of a graph, grouped by size.
/// Within a size class, cliques are sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueDb {
    max_k: usize,
    edges: Vec<[usize; 2]>,
    triangles: Vec<[usize; 3]>,
    quads: Vec<[usize; 4]>,
}

impl CliqueDb {
    pub fn build(graph: &Graph, max_k: usize) -> Result<Self> {
        if !(2..=4).contains(&max_k) {
            return Err(Error::invalid(format!("clique size {max_k} outside 2..=4")));
        }
        let mut db = CliqueDb {
            max_k,
            edges: graph.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            triangles: Vec::new(),
            quads: Vec::new(),
        };
        if max_k >= 3 {
            for &[a, b] in &db.edges {
                for c in common_above(graph, a, b, b) {
                    db.triangles.push([a, b, c]);
                }
            }
        }
        if max_k >= 4 {
            for &[a, b, c] in &db.triangles {
                for d in common_above(graph, a, b, c) {
                    if graph.has_edge(c, d) {
                        db.quads.push([a, b, c, d]);
                    }
                }
            }
        }
        Ok(db)
    }

    pub fn max_k(&self) -> usize {
        self.max_k
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn quads(&self) -> &[[usize; 4]] {
        &self.quads
    }

    pub fn len(&self) -> usize {
        self.edges.len() + self.triangles.len() + self.quads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All cliques, largest first, as vertex slices.
    pub fn iter_largest_first(&self) -> impl Iterator<Item = &[usize]> {
        self.quads
            .iter()
            .map(|q| &q[..])
            .chain(self.triangles.iter().map(|t| &t[..]))
            .chain(self.edges.iter().map(|e| &e[..]))
    }

    /// Re-checks every entry against `graph`: strictly increasing vertices,
    /// pairwise adjacent, no repeats.
    pub fn verify(&self, graph: &Graph) -> Result<()> {
        let mut seen = std::collections::HashSet::new();
        for c in self.iter_largest_first() {
            let ok = c.windows(2).all(|w| w[0] < w[1])
                && c.last().is_some_and(|&v| v < graph.vertex_count())
                && c.iter().enumerate().all(|(i, &u)| c[i + 1..].iter().all(|&v| graph.has_edge(u, v)));
            if !ok {
                return Err(Error::InvalidState(format!("{c:?} is not a clique")));
            }
            if !seen.insert(c.to_vec()) {
                return Err(Error::InvalidState(format!("clique {c:?} listed twice")));
            }
        }
        Ok(())
    }
}

/// Common neighbors of `a` and `b` greater than `floor`.
fn common_above(graph: &Graph, a: usize, b: usize, floor: usize) -> impl Iterator<Item = usize> + '_ {
    let nb = graph.neighbors(b);
    graph
        .neighbors(a)
        .iter()
        .copied()
        .filter(move |&c| c > floor && nb.binary_search(&c).is_ok())
}

/// Vertex-disjoint cliques picked greedily in database order, largest size
/// class first.
pub fn static_partition(graph: &Graph, db: &CliqueDb) -> Vec<Vec<usize>> {
    let mut used = vec![false; graph.vertex_count()];
    let mut out = Vec::new();
    for c in db.iter_largest_first() {
        if c.iter().all(|&v| !used[v]) {
            c.iter().for_each(|&v| used[v] = true);
            out.push(c.to_vec());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn counts_on_small_graphs() {
        let tri = complete(3);
        let db = CliqueDb::build(&tri, 3).unwrap();
        assert_eq!((db.edges().len(), db.triangles().len()), (3, 1));
        let k4 = CliqueDb::build(&complete(4), 4).unwrap();
        assert_eq!(k4.len(), 11);
        assert_eq!(k4.quads(), &[[0, 1, 2, 3]]);
        assert!(CliqueDb::build(&Graph::empty(5), 4).unwrap().is_empty());
        let k5 = complete(5);
        let db = CliqueDb::build(&k5, 4).unwrap();
        assert_eq!((db.edges().len(), db.triangles().len(), db.quads().len()), (10, 10, 5));
        db.verify(&k5).unwrap();
        assert!(db.verify(&Graph::empty(5)).is_err());
    }

    #[test]
    fn partitions() {
        let tri = complete(3);
        assert_eq!(static_partition(&tri, &CliqueDb::build(&tri, 4).unwrap()), vec![vec![0, 1, 2]]);
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(static_partition(&two, &CliqueDb::build(&two, 4).unwrap()).len(), 2);
        let empty = Graph::empty(3);
        assert!(static_partition(&empty, &CliqueDb::build(&empty, 4).unwrap()).is_empty());
    }
}
