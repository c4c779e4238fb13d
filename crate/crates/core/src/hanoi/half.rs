use super::HanoiState;
use crate::error::{Error, Result};

struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }
    #[inline]
    fn get(&self, i: usize) -> bool {
        self.0[i >> 6] >> (i & 63) & 1 == 1
    }
    #[inline]
    fn set(&mut self, i: usize) {
        self.0[i >> 6] |= 1 << (i & 63);
    }
    fn clear(&mut self) {
        self.0.iter_mut().for_each(|w| *w = 0);
    }
    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }
}

/// Optimal length of moving `n` disks from peg 0 to peg 3, from a
/// breadth-first search over only the first half of the path.
///
/// The largest disk stays on peg 0 until, at some depth `k`, every smaller
/// disk sits on peg 1 or 2; it can then move to peg 3, and by symmetry the
/// rest of the path mirrors the first half, for `2k + 1` moves in all.
/// Layers are kept as three bitsets over the `4^(n-1)` placements of the
/// smaller disks, so memory is `3 * 4^(n-1) / 8` bytes.
pub fn symmetric_half_search(n: usize, max_bytes: Option<usize>) -> Result<u32> {
    if n == 0 || n > 18 {
        return Err(Error::invalid(format!("half search supports 1..=18 disks, got {n}")));
    }
    let m = n - 1;
    let space = 1usize << (2 * m);
    let bytes = 3 * space.div_ceil(64) * 8;
    if max_bytes.is_some_and(|b| bytes > b) {
        return Err(Error::BudgetExceeded(format!("half search needs {bytes} bytes")));
    }
    // all smaller disks on pegs 1 or 2
    let done = |s: HanoiState| (0..m).all(|d| matches!(s.peg(d), 1 | 2));

    let start = HanoiState::all_on(m, 0);
    if done(start) {
        return Ok(1);
    }
    let mut prev = Bits::new(space);
    let mut cur = Bits::new(space);
    let mut next = Bits::new(space);
    cur.set(start.0 as usize);
    let mut depth = 0u32;
    loop {
        depth += 1;
        let mut any = false;
        for i in cur.ones() {
            for (_, _, s) in HanoiState(i as u64).moves(m) {
                let j = s.0 as usize;
                if prev.get(j) || cur.get(j) || next.get(j) {
                    continue;
                }
                if done(s) {
                    return Ok(2 * depth + 1);
                }
                next.set(j);
                any = true;
            }
        }
        if !any {
            return Err(Error::invalid("half search exhausted the space"));
        }
        // rotate: prev <- cur, cur <- next, next <- cleared
        std::mem::swap(&mut prev, &mut cur);
        std::mem::swap(&mut cur, &mut next);
        next.clear();
    }
}

/// Asymptotic branching factor of the depth-first tree that never moves
/// the same disk twice in a row, averaged over nodes whose state has all
/// four pegs occupied.
///
/// Node counts per (state, last-moved disk) evolve linearly from one depth
/// to the next; power iteration gives their limiting distribution, and the
/// factor is the mean number of children of the all-pegs-occupied nodes in
/// that distribution. Needs `8 * (n + 1) * 4^n` bytes.
pub fn restricted_branching_factor(n: usize, iterations: usize) -> Result<f64> {
    if !(4..=10).contains(&n) {
        return Err(Error::invalid("branching factor needs 4..=10 disks"));
    }
    let states = 1usize << (2 * n);
    let slots = n + 1; // last disk, or n for "none yet"
    let mut x = vec![1.0f64; states * slots];
    let mut y = vec![0.0f64; states * slots];
    let moves: Vec<Vec<(u8, u32)>> = (0..states)
        .map(|s| HanoiState(s as u64).moves(n).map(|(d, _, t)| (d, t.0 as u32)).collect())
        .collect();
    for _ in 0..iterations {
        y.iter_mut().for_each(|v| *v = 0.0);
        for s in 0..states {
            for last in 0..slots {
                let w = x[s * slots + last];
                if w == 0.0 {
                    continue;
                }
                for &(d, t) in &moves[s] {
                    if d as usize != last {
                        y[t as usize * slots + d as usize] += w;
                    }
                }
            }
        }
        let total: f64 = y.iter().sum();
        y.iter_mut().for_each(|v| *v /= total);
        std::mem::swap(&mut x, &mut y);
    }

    let mut nodes = 0.0;
    let mut children = 0.0;
    for s in 0..states {
        let st = HanoiState(s as u64);
        if st.tops(n).iter().any(|t| t.is_none()) {
            continue;
        }
        debug_assert_eq!(moves[s].len(), 6);
        for last in 0..slots {
            let w = x[s * slots + last];
            let kids = moves[s].iter().filter(|&&(d, _)| d as usize != last).count();
            nodes += w;
            children += w * kids as f64;
        }
    }
    Ok(children / nodes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_half_searches() {
        assert_eq!(symmetric_half_search(1, None).unwrap(), 1);
        assert_eq!(symmetric_half_search(2, None).unwrap(), 3);
        assert_eq!(symmetric_half_search(3, None).unwrap(), 5);
        assert_eq!(symmetric_half_search(6, None).unwrap(), 17);
        assert!(matches!(symmetric_half_search(10, Some(1024)), Err(Error::BudgetExceeded(_))));
    }
}
