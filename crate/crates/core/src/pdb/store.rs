//! The `APDB` file format.
//!
//! ```text
//! magic        4 bytes   "APDB"
//! version      u16
//! domain       u8 kind, u8 rows, u8 cols   (rows = cols = 0 for Hanoi)
//! locations    u16       L
//! k            u16       pattern size
//! mapping      u8        0 sparse, 1 compact, 2 direct
//! pattern      u16 count, then count x u16 variable ids
//! policy       u8        0 pattern-moves-only, 1 all-moves
//! entries      u64
//! costs        `entries` bytes
//! checksum     u64       FNV-1a over every preceding byte
//! ```
//!
//! All integers are little-endian.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use super::{CostPolicy, Mapping, MappingScheme};
use crate::error::{Error, Result};

pub const MAGIC: [u8; 4] = *b"APDB";
pub const FORMAT_VERSION: u16 = 1;
/// Cell value for patterns the backward search never reached.
pub const SENTINEL: u8 = crate::search::UNREACHED;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DomainTag {
    Tiles { rows: u8, cols: u8 },
    Hanoi,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternDatabase {
    pub domain: DomainTag,
    /// Tile numbers or disk indices, in the order their locations are fed
    /// to the mapping.
    pub pattern: Vec<u16>,
    pub scheme: MappingScheme,
    pub policy: CostPolicy,
    pub costs: Vec<u8>,
}

impl PatternDatabase {
    #[inline]
    pub fn get(&self, index: usize) -> u8 {
        self.costs[index]
    }

    /// Looks up a tuple of locations through the mapping scheme.
    #[inline]
    pub fn lookup(&self, locs: &[u8]) -> u8 {
        self.costs[self.scheme.index(locs)]
    }

    pub fn len(&self) -> usize {
        self.costs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.costs.is_empty()
    }

    pub fn reached(&self) -> usize {
        self.costs.iter().filter(|&&c| c != SENTINEL).count()
    }

    pub fn max_cost(&self) -> Option<u8> {
        self.costs.iter().copied().filter(|&c| c != SENTINEL).max()
    }

    fn encode(&self) -> Vec<u8> {
        let mut buf = Vec::with_capacity(64 + self.costs.len());
        buf.extend_from_slice(&MAGIC);
        buf.extend_from_slice(&FORMAT_VERSION.to_le_bytes());
        match self.domain {
            DomainTag::Tiles { rows, cols } => buf.extend_from_slice(&[0, rows, cols]),
            DomainTag::Hanoi => buf.extend_from_slice(&[1, 0, 0]),
        }
        buf.extend_from_slice(&(self.scheme.locations as u16).to_le_bytes());
        buf.extend_from_slice(&(self.scheme.k as u16).to_le_bytes());
        buf.push(match self.scheme.mapping {
            Mapping::Sparse => 0,
            Mapping::Compact => 1,
            Mapping::Direct => 2,
        });
        buf.extend_from_slice(&(self.pattern.len() as u16).to_le_bytes());
        for v in &self.pattern {
            buf.extend_from_slice(&v.to_le_bytes());
        }
        buf.push(match self.policy {
            CostPolicy::PatternMovesOnly => 0,
            CostPolicy::AllMoves => 1,
        });
        buf.extend_from_slice(&(self.costs.len() as u64).to_le_bytes());
        buf.extend_from_slice(&self.costs);
        let sum = fnv1a(&buf);
        buf.extend_from_slice(&sum.to_le_bytes());
        buf
    }

    fn decode(bytes: &[u8]) -> Result<Self> {
        let mut r = Cursor { bytes, pos: 0 };
        let magic: [u8; 4] = r.take(4, "magic")?.try_into().unwrap();
        if magic != MAGIC {
            return Err(Error::BadMagic(magic));
        }
        let version = r.u16("version")?;
        if version != FORMAT_VERSION {
            return Err(Error::VersionMismatch {
                found: version,
                expected: FORMAT_VERSION,
            });
        }
        let tag = r.take(3, "domain tag")?;
        let domain = match tag[0] {
            0 => DomainTag::Tiles {
                rows: tag[1],
                cols: tag[2],
            },
            1 => DomainTag::Hanoi,
            other => return Err(Error::MalformedHeader(format!("domain kind {other}"))),
        };
        let locations = r.u16("locations")? as usize;
        let k = r.u16("pattern size")? as usize;
        let mapping = match r.u8("mapping")? {
            0 => Mapping::Sparse,
            1 => Mapping::Compact,
            2 => Mapping::Direct,
            other => return Err(Error::MalformedHeader(format!("mapping variant {other}"))),
        };
        let count = r.u16("pattern length")? as usize;
        let mut pattern = Vec::with_capacity(count);
        for _ in 0..count {
            pattern.push(r.u16("pattern variables")?);
        }
        let policy = match r.u8("cost policy")? {
            0 => CostPolicy::PatternMovesOnly,
            1 => CostPolicy::AllMoves,
            other => return Err(Error::MalformedHeader(format!("cost policy {other}"))),
        };
        let entries = r.u64("entry count")?;
        let costs = r.take(entries as usize, "cost payload")?.to_vec();
        let body_len = r.pos;
        let stored = r.u64("checksum")?;
        let computed = fnv1a(&bytes[..body_len]);
        if stored != computed {
            return Err(Error::ChecksumMismatch { stored, computed });
        }
        if r.pos != bytes.len() {
            return Err(Error::MalformedHeader(format!(
                "{} trailing bytes after checksum",
                bytes.len() - r.pos
            )));
        }
        let scheme = MappingScheme::new(mapping, k, locations);
        if scheme.table_size() != costs.len() {
            return Err(Error::MalformedHeader(format!(
                "{} entries but the mapping needs {}",
                costs.len(),
                scheme.table_size()
            )));
        }
        Ok(PatternDatabase {
            domain,
            pattern,
            scheme,
            policy,
            costs,
        })
    }
}

pub fn save_pdb(db: &PatternDatabase, path: impl AsRef<Path>) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    w.write_all(&db.encode())?;
    w.flush()?;
    Ok(())
}

pub fn load_pdb(path: impl AsRef<Path>) -> Result<PatternDatabase> {
    let mut bytes = Vec::new();
    BufReader::new(File::open(path)?).read_to_end(&mut bytes)?;
    PatternDatabase::decode(&bytes)
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn take(&mut self, n: usize, what: &'static str) -> Result<&'a [u8]> {
        let end = self.pos.checked_add(n).filter(|&e| e <= self.bytes.len());
        match end {
            Some(end) => {
                let s = &self.bytes[self.pos..end];
                self.pos = end;
                Ok(s)
            }
            None => Err(Error::Truncated(what)),
        }
    }
    fn u8(&mut self, what: &'static str) -> Result<u8> {
        Ok(self.take(1, what)?[0])
    }
    fn u16(&mut self, what: &'static str) -> Result<u16> {
        Ok(u16::from_le_bytes(self.take(2, what)?.try_into().unwrap()))
    }
    fn u64(&mut self, what: &'static str) -> Result<u64> {
        Ok(u64::from_le_bytes(self.take(8, what)?.try_into().unwrap()))
    }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> PatternDatabase {
        PatternDatabase {
            domain: DomainTag::Tiles { rows: 2, cols: 2 },
            pattern: vec![1, 3],
            scheme: MappingScheme::new(Mapping::Compact, 2, 4),
            policy: CostPolicy::PatternMovesOnly,
            costs: (0..12).collect(),
        }
    }

    #[test]
    fn empty_pattern_has_single_zero_entry() {
        let db = PatternDatabase {
            domain: DomainTag::Hanoi,
            pattern: vec![],
            scheme: MappingScheme::new(Mapping::Direct, 0, 4),
            policy: CostPolicy::PatternMovesOnly,
            costs: vec![0],
        };
        assert_eq!(db.scheme.table_size(), 1);
        let back = PatternDatabase::decode(&db.encode()).unwrap();
        assert_eq!(back, db);
        assert_eq!(back.lookup(&[]), 0);
    }

    #[test]
    fn corruptions_map_to_distinct_errors() {
        let good = sample().encode();
        assert_eq!(PatternDatabase::decode(&good).unwrap(), sample());

        let mut bad = good.clone();
        bad[0] = b'X';
        assert!(matches!(PatternDatabase::decode(&bad), Err(Error::BadMagic(_))));

        let mut bad = good.clone();
        bad[4] = 9;
        assert!(matches!(
            PatternDatabase::decode(&bad),
            Err(Error::VersionMismatch { found: 9, .. })
        ));

        for cut in [3, 10, good.len() - 9, good.len() - 1] {
            assert!(matches!(
                PatternDatabase::decode(&good[..cut]),
                Err(Error::Truncated(_))
            ));
        }

        let mut bad = good.clone();
        let payload = good.len() - 9;
        bad[payload] ^= 0xff;
        assert!(matches!(
            PatternDatabase::decode(&bad),
            Err(Error::ChecksumMismatch { .. })
        ));
    }
}
