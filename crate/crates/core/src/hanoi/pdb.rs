use super::{infinite_peg_h, HanoiState, PEGS};
use crate::error::{Error, Result};
use crate::pdb::{build_additive_pdb, Abstraction, CostPolicy, DomainTag, Mapping, MappingScheme, PatternDatabase};
use crate::search::Heuristic;

/// The `m`-disk puzzle itself, searched backward from everything on the
/// goal peg. Every move moves a pattern disk, and the packed state is the
/// table index.
#[derive(Clone, Copy, Debug)]
pub struct HanoiAbstraction {
    pub disks: usize,
    pub goal_peg: u8,
}

impl Abstraction for HanoiAbstraction {
    type Config = HanoiState;

    fn config_space(&self) -> usize {
        1usize << (2 * self.disks)
    }
    fn config_index(&self, c: &HanoiState) -> usize {
        c.0 as usize
    }
    fn seeds(&self) -> Vec<HanoiState> {
        vec![HanoiState::all_on(self.disks, self.goal_peg)]
    }
    fn expand(&self, c: &HanoiState, out: &mut Vec<(HanoiState, bool)>) {
        out.extend(c.moves(self.disks).map(|(_, _, s)| (s, true)));
    }
    fn table_size(&self) -> usize {
        self.config_space()
    }
    fn table_index(&self, c: &HanoiState) -> usize {
        c.0 as usize
    }
    fn identity_projection(&self) -> bool {
        true
    }
}

/// Exact distances to the goal peg for every placement of `m` disks. By
/// padding with goal-peg disks it also answers every smaller group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiskPdb {
    disks: usize,
    goal_peg: u8,
    db: PatternDatabase,
}

impl DiskPdb {
    pub fn build(disks: usize, goal_peg: u8, max_entries: Option<usize>) -> Result<Self> {
        if disks > 16 || goal_peg as usize >= PEGS {
            return Err(Error::invalid(format!("cannot build a {disks}-disk database")));
        }
        let abs = HanoiAbstraction { disks, goal_peg };
        let costs = build_additive_pdb(&abs, CostPolicy::PatternMovesOnly, max_entries)?;
        Ok(DiskPdb {
            disks,
            goal_peg,
            db: PatternDatabase {
                domain: DomainTag::Hanoi,
                pattern: (0..disks as u16).collect(),
                scheme: MappingScheme::new(Mapping::Direct, disks, PEGS),
                policy: CostPolicy::PatternMovesOnly,
                costs,
            },
        })
    }

    /// Wraps a loaded database. The goal peg is recovered from the zero
    /// entry.
    pub fn from_database(db: PatternDatabase) -> Result<Self> {
        let disks = db.scheme.k;
        if db.domain != DomainTag::Hanoi || db.scheme.mapping != Mapping::Direct || db.costs.len() != 1 << (2 * disks) {
            return Err(Error::invalid("not a Hanoi disk database"));
        }
        let goal_peg = (0..PEGS as u8)
            .find(|&p| db.costs[HanoiState::all_on(disks, p).0 as usize] == 0)
            .ok_or_else(|| Error::invalid("database has no goal entry"))?;
        Ok(DiskPdb { disks, goal_peg, db })
    }

    pub fn disks(&self) -> usize {
        self.disks
    }

    pub fn goal_peg(&self) -> u8 {
        self.goal_peg
    }

    pub fn database(&self) -> &PatternDatabase {
        &self.db
    }

    /// Distance for the disks of `group`, in increasing size, mapped onto
    /// slots 0.. with the remaining slots on the goal peg.
    #[inline]
    pub fn group_cost(&self, state: HanoiState, group: &[u8]) -> u32 {
        debug_assert!(group.len() <= self.disks);
        let mut idx = self.padding(group.len());
        for (slot, &d) in group.iter().enumerate() {
            idx |= (state.peg(d as usize) as u64) << (2 * slot);
        }
        self.db.get(idx as usize) as u32
    }

    fn padding(&self, used: usize) -> u64 {
        HanoiState::all_on(self.disks, self.goal_peg).0 & !HanoiState::mask(used)
    }
}

/// Group sizes of a split, largest first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Split {
    sizes: Vec<usize>,
}

impl Split {
    pub fn new(mut sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(Error::invalid("split sizes must be positive"));
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Split { sizes })
    }

    /// Parses "14-1" or "12,3".
    pub fn parse(text: &str) -> Result<Self> {
        let sizes = text
            .split(['-', ','])
            .map(|w| w.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::invalid(format!("bad split {text:?}: {e}")))?;
        Split::new(sizes)
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn disks(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn label(&self) -> String {
        self.sizes.iter().map(|s| s.to_string()).collect::<Vec<_>>().join("-")
    }

    /// The fixed grouping: the largest group takes the largest disks, the
    /// next group the next largest, and so on. Each group is listed in
    /// increasing disk order.
    pub fn static_groups(&self) -> Vec<Vec<u8>> {
        let mut next = self.disks();
        self.sizes
            .iter()
            .map(|&s| {
                next -= s;
                (next as u8..(next + s) as u8).collect()
            })
            .collect()
    }
}

/// Number of distinct ways to assign `n` disks to groups of the given
/// sizes, groups of equal size being interchangeable.
pub fn count_splits(n: usize, sizes: &[usize]) -> Result<u128> {
    if sizes.iter().sum::<usize>() != n {
        return Err(Error::invalid(format!("sizes {sizes:?} do not sum to {n}")));
    }
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    let mut count = fact(n);
    for &s in sizes {
        count /= fact(s);
    }
    let mut sorted = sizes.to_vec();
    sorted.sort_unstable();
    for run in sorted.chunk_by(|a, b| a == b) {
        count /= fact(run.len());
    }
    Ok(count)
}

/// Calls `f` once per distinct grouping of disks `0..n` into groups of the
/// split's sizes. Groups come largest first; among equal sizes each
/// group's smallest disk exceeds the previous group's, so no grouping is
/// produced twice. Groups of the first choice run in lexicographic order.
pub fn for_each_split(split: &Split, mut f: impl FnMut(&[Vec<u8>])) {
    let n = split.disks();
    let mut groups: Vec<Vec<u8>> = split.sizes.iter().map(|&s| Vec::with_capacity(s)).collect();
    let mut used = vec![false; n];
    fill(split, 0, &mut groups, &mut used, 0, &mut f);
}

fn fill(
    split: &Split,
    gi: usize,
    groups: &mut Vec<Vec<u8>>,
    used: &mut Vec<bool>,
    from: usize,
    f: &mut impl FnMut(&[Vec<u8>]),
) {
    let sizes = &split.sizes;
    if gi == sizes.len() {
        f(groups);
        return;
    }
    let n = used.len();
    if groups[gi].len() == sizes[gi] {
        let next_from = if gi + 1 < sizes.len() && sizes[gi + 1] == sizes[gi] {
            // interchangeable groups: next group's minimum must be larger
            groups[gi][0] as usize + 1
        } else {
            0
        };
        fill(split, gi + 1, groups, used, next_from, f);
        return;
    }
    let start = if groups[gi].is_empty() { from } else { *groups[gi].last().unwrap() as usize + 1 };
    for d in start..n {
        if used[d] {
            continue;
        }
        used[d] = true;
        groups[gi].push(d as u8);
        fill(split, gi, groups, used, from, f);
        groups[gi].pop();
        used[d] = false;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SplitMode {
    Static,
    Dynamic,
}

/// Sum of disk-database lookups over a split of the disks, either the fixed
/// grouping or the best over every grouping.
pub struct SplitHeuristic {
    n: usize,
    db: std::sync::Arc<DiskPdb>,
    split: Split,
    mode: SplitMode,
    static_groups: Vec<Vec<u8>>,
    /// Every grouping, flattened, for dynamic mode.
    candidates: Vec<Vec<Vec<u8>>>,
    name: String,
}

impl SplitHeuristic {
    pub fn new(n: usize, db: std::sync::Arc<DiskPdb>, split: Split, mode: SplitMode) -> Result<Self> {
        if split.disks() != n {
            return Err(Error::invalid(format!("split {} does not cover {n} disks", split.label())));
        }
        if split.sizes[0] > db.disks() {
            return Err(Error::invalid(format!(
                "group of {} disks exceeds the {}-disk database",
                split.sizes[0],
                db.disks()
            )));
        }
        let mut candidates = Vec::new();
        if mode == SplitMode::Dynamic {
            for_each_split(&split, |g| candidates.push(g.to_vec()));
        }
        let name = match mode {
            SplitMode::Static => format!("static-{}", split.label()),
            SplitMode::Dynamic => format!("dynamic-{}", split.label()),
        };
        Ok(SplitHeuristic {
            n,
            static_groups: split.static_groups(),
            db,
            split,
            mode,
            candidates,
            name,
        })
    }

    pub fn split(&self) -> &Split {
        &self.split
    }

    pub fn candidate_count(&self) -> usize {
        self.candidates.len()
    }

    fn sum(&self, state: HanoiState, groups: &[Vec<u8>]) -> u32 {
        groups.iter().map(|g| self.db.group_cost(state, g)).sum()
    }
}

impl Heuristic<HanoiState> for SplitHeuristic {
    fn name(&self) -> &str {
        &self.name
    }

    fn estimate(&self, state: &HanoiState) -> u32 {
        match self.mode {
            SplitMode::Static => self.sum(*state, &self.static_groups),
            SplitMode::Dynamic => {
                if self.n <= self.db.disks() {
                    // one group holding everything is exact
                    let all: Vec<u8> = (0..self.n as u8).collect();
                    return self.db.group_cost(*state, &all);
                }
                self.candidates.iter().map(|g| self.sum(*state, g)).max().unwrap_or(0)
            }
        }
    }
}

/// The infinite-peg relaxation as a heuristic object.
pub struct InfinitePeg {
    pub n: usize,
    pub goal_peg: u8,
}

impl Heuristic<HanoiState> for InfinitePeg {
    fn name(&self) -> &str {
        "infinite-peg"
    }
    fn estimate(&self, state: &HanoiState) -> u32 {
        infinite_peg_h(*state, self.n, self.goal_peg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn split_counts() {
        assert_eq!(count_splits(15, &[12, 3]).unwrap(), 455);
        assert_eq!(count_splits(16, &[14, 2]).unwrap(), 120);
        assert_eq!(count_splits(17, &[14, 3]).unwrap(), 680);
        assert_eq!(count_splits(4, &[2, 2]).unwrap(), 3);
        assert!(count_splits(5, &[2, 2]).is_err());
    }

    #[test]
    fn enumeration_matches_count_and_is_distinct() {
        for sizes in [vec![3, 2], vec![2, 2, 2], vec![3, 3, 1], vec![4], vec![2, 2, 1, 1]] {
            let split = Split::new(sizes.clone()).unwrap();
            let mut seen = HashSet::new();
            for_each_split(&split, |g| {
                let mut key: Vec<Vec<u8>> = g.to_vec();
                key.sort();
                assert!(seen.insert(key), "duplicate grouping {g:?}");
                let mut all: Vec<u8> = g.iter().flatten().copied().collect();
                all.sort();
                assert_eq!(all, (0..split.disks() as u8).collect::<Vec<_>>());
            });
            assert_eq!(seen.len() as u128, count_splits(split.disks(), &sizes).unwrap());
        }
    }

    #[test]
    fn three_disk_start_costs_five() {
        let db = DiskPdb::build(3, 3, None).unwrap();
        assert_eq!(db.group_cost(HanoiState::all_on(3, 0), &[0, 1, 2]), 5);
        assert_eq!(db.database().len(), 64);
        // a lone disk off the goal peg costs one move
        assert_eq!(db.group_cost(HanoiState::all_on(3, 0), &[2]), 1);
        assert_eq!(db.group_cost(HanoiState::all_on(3, 0), &[1, 2]), 3);
    }

    #[test]
    fn static_groups_take_the_largest_disks_first() {
        let s = Split::parse("3-2").unwrap();
        assert_eq!(s.static_groups(), vec![vec![2, 3, 4], vec![0, 1]]);
        assert_eq!(Split::parse("1,3").unwrap().sizes(), &[3, 1]);
    }
}
