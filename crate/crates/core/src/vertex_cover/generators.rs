use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};

/// Each of the `n(n-1)/2` possible edges is present independently with
/// probability `d / n`, so the expected degree is `d (n-1) / n`.
pub fn gen_random_graph(n: usize, d: f64, seed: u64) -> Result<Graph> {
    if !(d >= 0.0 && d < n as f64) {
        return Err(Error::invalid(format!("density {d} must lie in [0, {n})")));
    }
    let p = d / n as f64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

const RETRIES: usize = 100;
const EPS: f64 = 1e-12;

/// Delaunay triangulation of `n` uniform points in the unit square, found by
/// testing every triple's circumcircle against every other point. Point
/// sets with a nearly cocircular quadruple or collinear triple are
/// resampled.
pub fn gen_delaunay_graph(n: usize, seed: u64) -> Result<Graph> {
    if n < 3 {
        return Err(Error::invalid("a Delaunay graph needs at least 3 points"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RETRIES {
        let pts: Vec<(f64, f64)> = (0..n).map(|_| (rng.gen(), rng.gen())).collect();
        if let Some(edges) = delaunay_edges(&pts) {
            return Graph::from_edges(n, &edges);
        }
    }
    Err(Error::invalid(format!(
        "no point set in general position after {RETRIES} attempts"
    )))
}

/// `None` when the configuration is degenerate.
fn delaunay_edges(pts: &[(f64, f64)]) -> Option<Vec<(usize, usize)>> {
    let n = pts.len();
    let mut present = vec![false; n * n];
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let o = orient(pts[i], pts[j], pts[k]);
                if o.abs() < EPS {
                    return None;
                }
                // incircle sign is positive inside for counter-clockwise triples
                let (a, b, c) = if o > 0.0 { (i, j, k) } else { (i, k, j) };
                let mut empty = true;
                for l in 0..n {
                    if l == i || l == j || l == k {
                        continue;
                    }
                    let det = incircle(pts[a], pts[b], pts[c], pts[l]);
                    if det.abs() < EPS {
                        return None;
                    }
                    if det > 0.0 {
                        empty = false;
                        break;
                    }
                }
                if empty {
                    for (u, v) in [(i, j), (i, k), (j, k)] {
                        present[u * n + v] = true;
                    }
                }
            }
        }
    }
    Some(
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| present[u * n + v])
            .collect(),
    )
}

fn orient(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> f64 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

fn incircle(a: (f64, f64), b: (f64, f64), c: (f64, f64), d: (f64, f64)) -> f64 {
    let (adx, ady) = (a.0 - d.0, a.1 - d.1);
    let (bdx, bdy) = (b.0 - d.0, b.1 - d.1);
    let (cdx, cdy) = (c.0 - d.0, c.1 - d.1);
    let ad = adx * adx + ady * ady;
    let bd = bdx * bdx + bdy * bdy;
    let cd = cdx * cdx + cdy * cdy;
    adx * (bdy * cd - bd * cdy) - ady * (bdx * cd - bd * cdx) + ad * (bdx * cdy - bdy * cdx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_graph_is_deterministic_and_near_expected_degree() {
        let a = gen_random_graph(150, 16.0, 7).unwrap();
        assert_eq!(a, gen_random_graph(150, 16.0, 7).unwrap());
        let mean: f64 = (0..20).map(|s| gen_random_graph(150, 16.0, s).unwrap().mean_degree()).sum::<f64>() / 20.0;
        assert!((mean - 16.0 * 149.0 / 150.0).abs() < 0.3, "mean degree {mean}");
        assert_eq!(gen_random_graph(30, 0.0, 1).unwrap().edge_count(), 0);
        assert!(gen_random_graph(10, 10.0, 1).is_err());
    }

    #[test]
    fn three_points_make_a_triangle() {
        for seed in 0..5 {
            assert_eq!(gen_delaunay_graph(3, seed).unwrap().edge_count(), 3);
        }
    }

    #[test]
    fn square_plus_center_is_four_triangles() {
        let pts = [(0.0, 0.0), (1.0, 0.1), (1.1, 1.0), (0.05, 0.9), (0.5, 0.5)];
        let e = delaunay_edges(&pts).unwrap();
        // hull edges plus four spokes
        assert_eq!(e.len(), 8);
        assert!(e.iter().filter(|&&(_, v)| v == 4).count() == 4);
    }

    #[test]
    fn delaunay_is_planar_sized() {
        let g = gen_delaunay_graph(60, 3).unwrap();
        assert!(g.edge_count() <= 3 * 60 - 6);
        assert!(g.mean_degree() > 4.5 && g.mean_degree() < 6.0);
    }
}
