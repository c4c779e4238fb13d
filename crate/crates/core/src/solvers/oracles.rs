//! Brute-force reference values. Deliberately naive: every function
//! enumerates its search space in full and shares no code with the solvers
//! it is used to check.

use super::WeightedHypergraph;
use crate::error::{Error, Result};

/// Maximum weighted matching by enumerating every subset of pair edges.
pub fn matching_value(h: &WeightedHypergraph) -> Result<u32> {
    let m = h.edges.len();
    if m > 24 {
        return Err(Error::invalid(format!("{m} edges is too many to enumerate")));
    }
    let mut best = 0;
    'subsets: for mask in 0u32..(1 << m) {
        let mut used = vec![false; h.vertex_count];
        let mut value = 0;
        for (i, &([a, b], w)) in h.edges.iter().enumerate() {
            if mask & (1 << i) != 0 {
                if used[a] || used[b] {
                    continue 'subsets;
                }
                used[a] = true;
                used[b] = true;
                value += w;
            }
        }
        best = best.max(value);
    }
    Ok(best)
}

/// Minimum weighted cover by enumerating every value vector with entries in
/// `0..=max weight` (even entries only when `even_only`).
pub fn cover_value(h: &WeightedHypergraph, even_only: bool) -> Result<u32> {
    let n = h.vertex_count;
    let top = h
        .edges
        .iter()
        .map(|e| e.1)
        .chain(h.hyperedges.iter().map(|e| e.1))
        .max()
        .unwrap_or(0);
    let top = if even_only { top + (top & 1) } else { top };
    let choices: Vec<u32> = (0..=top).filter(|v| !even_only || v % 2 == 0).collect();
    let total = (choices.len() as f64).powi(n as i32);
    if total > 2e7 {
        return Err(Error::invalid(format!("{total} assignments is too many to enumerate")));
    }
    let mut digits = vec![0usize; n];
    let mut best = u32::MAX;
    loop {
        let values: Vec<u32> = digits.iter().map(|&d| choices[d]).collect();
        let ok = h.edges.iter().all(|&([a, b], w)| values[a] + values[b] >= w)
            && h
                .hyperedges
                .iter()
                .all(|&([a, b, c], w)| values[a] + values[b] + values[c] >= w);
        if ok {
            best = best.min(values.iter().sum());
        }
        // odometer
        let mut i = 0;
        loop {
            if i == n {
                return Ok(if best == u32::MAX { 0 } else { best });
            }
            digits[i] += 1;
            if digits[i] < choices.len() {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// Maximum cardinality matching by trying every edge subset.
pub fn cardinality_matching_size(vertex_count: usize, edges: &[(usize, usize)]) -> Result<usize> {
    let m = edges.len();
    if m > 26 {
        return Err(Error::invalid(format!("{m} edges is too many to enumerate")));
    }
    let mut best = 0;
    for mask in 0u32..(1 << m) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let mut used = vec![false; vertex_count];
        let disjoint = edges.iter().enumerate().all(|(i, &(a, b))| {
            if mask & (1 << i) == 0 {
                return true;
            }
            if used[a] || used[b] {
                return false;
            }
            used[a] = true;
            used[b] = true;
            true
        });
        if disjoint {
            best = size;
        }
    }
    Ok(best)
}

/// Minimum vertex cover by trying every vertex subset, skipping subsets no
/// smaller than the best found.
pub fn vertex_cover_size(vertex_count: usize, edges: &[(usize, usize)]) -> Result<usize> {
    if vertex_count > 26 {
        return Err(Error::invalid(format!(
            "{vertex_count} vertices is too many to enumerate"
        )));
    }
    let masks: Vec<(u32, u32)> = edges.iter().map(|&(a, b)| (1 << a, 1 << b)).collect();
    let mut best = vertex_count;
    for subset in 0u32..(1 << vertex_count) {
        let size = subset.count_ones() as usize;
        if size >= best {
            continue;
        }
        if masks.iter().all(|&(a, b)| subset & (a | b) != 0) {
            best = size;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_checked_values() {
        let mut tri = WeightedHypergraph::new(3);
        tri.add_edge(0, 1, 1);
        tri.add_edge(1, 2, 1);
        tri.add_edge(0, 2, 1);
        assert_eq!(cover_value(&tri, false).unwrap(), 2);

        let mut fig = WeightedHypergraph::new(3);
        fig.add_edge(0, 1, 2);
        fig.add_edge(1, 2, 2);
        fig.add_edge(0, 2, 2);
        assert_eq!(cover_value(&fig, true).unwrap(), 4);
        assert_eq!(matching_value(&fig).unwrap(), 2);

        let k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        assert_eq!(vertex_cover_size(4, &k4).unwrap(), 3);
        assert_eq!(cardinality_matching_size(4, &k4).unwrap(), 2);
    }
}
