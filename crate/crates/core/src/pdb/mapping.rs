use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mapping {
    /// One base-`locations` digit per pattern variable, most significant
    /// first. Wastes cells whose digits repeat.
    Sparse,
    /// Lexicographic rank of the partial permutation; no waste.
    Compact,
    /// The domain state value is the index itself (Hanoi: 2 bits per disk).
    Direct,
}

/// How `k` pattern variables over `locations` values are turned into a
/// table index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MappingScheme {
    pub mapping: Mapping,
    pub k: usize,
    pub locations: usize,
}

impl MappingScheme {
    pub fn new(mapping: Mapping, k: usize, locations: usize) -> Self {
        MappingScheme {
            mapping,
            k,
            locations,
        }
    }

    /// L^k cells for sparse and direct tables, L·(L−1)·…·(L−k+1) for compact.
    pub fn table_size(&self) -> usize {
        match self.mapping {
            Mapping::Sparse | Mapping::Direct => self.locations.pow(self.k as u32),
            Mapping::Compact => falling_factorial(self.locations, self.k),
        }
    }

    /// Index of a tuple of locations. Callers on hot paths are expected to
    /// pass valid tuples; validation is left to [`compact_rank`] and
    /// [`sparse_index`].
    #[inline]
    pub fn index(&self, locs: &[u8]) -> usize {
        match self.mapping {
            Mapping::Sparse | Mapping::Direct => {
                let l = self.locations;
                locs.iter().fold(0usize, |acc, &x| acc * l + x as usize)
            }
            Mapping::Compact => rank_unchecked(locs, self.locations),
        }
    }
}

/// n · (n−1) · … · (n−k+1).
pub fn falling_factorial(n: usize, k: usize) -> usize {
    (0..k).map(|i| n - i).product()
}

fn check_locations(partial: &[u8], locations: usize, distinct: bool) -> Result<()> {
    let mut seen = 0u64;
    for &x in partial {
        if x as usize >= locations {
            return Err(Error::LocationOutOfRange {
                location: x as u32,
                locations: locations as u32,
            });
        }
        if distinct {
            if seen & (1 << x) != 0 {
                return Err(Error::DuplicateLocation(x));
            }
            seen |= 1 << x;
        }
    }
    Ok(())
}

/// Lexicographic rank of a partial permutation of `locations` values.
pub fn compact_rank(partial: &[u8], locations: usize) -> Result<usize> {
    if locations > 64 || partial.len() > locations {
        return Err(Error::invalid(format!(
            "cannot rank {} of {} locations",
            partial.len(),
            locations
        )));
    }
    check_locations(partial, locations, true)?;
    Ok(rank_unchecked(partial, locations))
}

#[inline]
pub(crate) fn rank_unchecked(partial: &[u8], locations: usize) -> usize {
    let mut used = 0u64;
    let mut rank = 0usize;
    for (i, &x) in partial.iter().enumerate() {
        let smaller_used = (used & ((1u64 << x) - 1)).count_ones() as usize;
        let digit = x as usize - smaller_used;
        rank = rank * (locations - i) + digit;
        used |= 1 << x;
    }
    // mixed radix L, L-1, ..., L-k+1
    rank
}

/// Inverse of [`compact_rank`].
pub fn compact_unrank(index: usize, k: usize, locations: usize) -> Result<Vec<u8>> {
    if locations > 64 || k > locations {
        return Err(Error::invalid(format!("cannot unrank {k} of {locations} locations")));
    }
    let size = falling_factorial(locations, k);
    if index >= size {
        return Err(Error::IndexOutOfRange {
            index: index as u64,
            size: size as u64,
        });
    }
    let mut digits = vec![0usize; k];
    let mut rest = index;
    for i in (0..k).rev() {
        let radix = locations - i;
        digits[i] = rest % radix;
        rest /= radix;
    }
    let mut used = 0u64;
    let mut out = Vec::with_capacity(k);
    for d in digits {
        // d-th unused location
        let mut count = 0;
        let mut loc = 0;
        loop {
            if used & (1 << loc) == 0 {
                if count == d {
                    break;
                }
                count += 1;
            }
            loc += 1;
        }
        used |= 1 << loc;
        out.push(loc as u8);
    }
    Ok(out)
}

/// Row-major index of the tuple in an L^k array.
pub fn sparse_index(partial: &[u8], locations: usize) -> Result<usize> {
    check_locations(partial, locations, false)?;
    Ok(partial
        .iter()
        .fold(0usize, |acc, &x| acc * locations + x as usize))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rank_of_relabelled_213_is_two() {
        // (2,1,3) over {1,2,3}, relabelled to {0,1,2}.
        assert_eq!(compact_rank(&[1, 0, 2], 3).unwrap(), 2);
    }

    #[test]
    fn identity_prefix_ranks_first() {
        for l in 1..=16 {
            for k in 0..=l.min(6) {
                let p: Vec<u8> = (0..k as u8).collect();
                assert_eq!(compact_rank(&p, l).unwrap(), 0);
                assert_eq!(compact_unrank(0, k, l).unwrap(), p);
            }
        }
    }

    #[test]
    fn last_index_is_descending_tuple() {
        let (l, k) = (9usize, 4usize);
        let last = falling_factorial(l, k) - 1;
        assert_eq!(compact_unrank(last, k, l).unwrap(), vec![8, 7, 6, 5]);
    }

    #[test]
    fn exhaustive_l6_k3_is_gapless_and_ordered() {
        // Enumerate all 3-tuples of distinct values < 6 in lexicographic order
        // independently of the ranking code.
        let mut expected = Vec::new();
        for a in 0..6u8 {
            for b in 0..6u8 {
                for c in 0..6u8 {
                    if a != b && b != c && a != c {
                        expected.push([a, b, c]);
                    }
                }
            }
        }
        assert_eq!(expected.len(), 120);
        for (i, t) in expected.iter().enumerate() {
            assert_eq!(compact_rank(t, 6).unwrap(), i);
            assert_eq!(compact_unrank(i, 3, 6).unwrap(), t.to_vec());
        }
    }

    #[test]
    fn sparse_examples() {
        assert_eq!(sparse_index(&[2, 1, 3], 16).unwrap(), 531);
        assert_eq!(sparse_index(&[0, 0, 0], 16).unwrap(), 0);
        let s = MappingScheme::new(Mapping::Sparse, 3, 16);
        let c = MappingScheme::new(Mapping::Compact, 3, 16);
        assert_eq!(s.table_size(), 4096);
        assert_eq!(c.table_size(), 16 * 15 * 14);
        assert_eq!(s.index(&[2, 1, 3]), 531);
    }

    #[test]
    fn rejects_bad_tuples() {
        assert!(matches!(compact_rank(&[1, 1], 4), Err(Error::DuplicateLocation(1))));
        assert!(matches!(
            compact_rank(&[4], 4),
            Err(Error::LocationOutOfRange { location: 4, .. })
        ));
        assert!(matches!(sparse_index(&[16], 16), Err(Error::LocationOutOfRange { .. })));
        assert!(matches!(compact_unrank(120, 3, 6), Err(Error::IndexOutOfRange { .. })));
        // Repeats are fine for the sparse formula.
        assert_eq!(sparse_index(&[3, 3], 4).unwrap(), 15);
    }

    proptest! {
        #[test]
        fn rank_unrank_roundtrip(l in 1usize..=36, k in 0usize..8, seed in any::<u64>()) {
            let k = k.min(l);
            let size = falling_factorial(l, k);
            let idx = (seed % size as u64) as usize;
            let p = compact_unrank(idx, k, l).unwrap();
            prop_assert_eq!(compact_rank(&p, l).unwrap(), idx);
        }
    }
}
