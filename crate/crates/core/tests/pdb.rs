use std::path::Path;

use apdb_core::hanoi::DiskPdb;
use apdb_core::pdb::{load_pdb, save_pdb, CostPolicy, DomainTag, Mapping, PatternDatabase};
use apdb_core::tiles::{build_tile_pdb, Board};
use apdb_core::Error;

const MAPPING_OFFSET: usize = 13;

fn tables() -> Vec<PatternDatabase> {
    let board = Board::square(3).unwrap();
    let mut out = Vec::new();
    for mapping in [Mapping::Sparse, Mapping::Compact] {
        out.push(build_tile_pdb(board, &[1, 2, 3, 4], mapping, CostPolicy::PatternMovesOnly, None).unwrap());
    }
    out.push(build_tile_pdb(board, &[5, 6, 7], Mapping::Compact, CostPolicy::AllMoves, None).unwrap());
    out.push(DiskPdb::build(5, 3, None).unwrap().database().clone());
    out
}

fn write(dir: &Path, name: &str, bytes: &[u8]) -> std::path::PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, bytes).unwrap();
    p
}

#[test]
fn save_then_load_is_bit_identical() {
    let dir = tempfile::tempdir().unwrap();
    for (i, db) in tables().iter().enumerate() {
        let a = dir.path().join(format!("{i}.apdb"));
        save_pdb(db, &a).unwrap();
        let back = load_pdb(&a).unwrap();
        assert_eq!(&back, db);
        let b = dir.path().join(format!("{i}-again.apdb"));
        save_pdb(&back, &b).unwrap();
        assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    }
    assert_eq!(tables()[3].domain, DomainTag::Hanoi);
}

#[test]
fn each_corruption_has_its_own_error() {
    let dir = tempfile::tempdir().unwrap();
    let db = &tables()[1];
    let good = dir.path().join("good.apdb");
    save_pdb(db, &good).unwrap();
    let bytes = std::fs::read(&good).unwrap();

    let mut magic = bytes.clone();
    magic[0] = b'X';
    let e = load_pdb(write(dir.path(), "magic", &magic)).unwrap_err();
    assert!(matches!(e, Error::BadMagic(_)), "{e}");

    let mut version = bytes.clone();
    version[4] = 9;
    let e = load_pdb(write(dir.path(), "version", &version)).unwrap_err();
    assert!(matches!(e, Error::VersionMismatch { found: 9, expected: 1 }), "{e}");

    for cut in [3, 20, bytes.len() - 9, bytes.len() - 1] {
        let e = load_pdb(write(dir.path(), "short", &bytes[..cut])).unwrap_err();
        assert!(matches!(e, Error::Truncated(_)), "cut at {cut}: {e}");
    }

    let mut mapping = bytes.clone();
    mapping[MAPPING_OFFSET] = 7;
    let e = load_pdb(write(dir.path(), "mapping", &mapping)).unwrap_err();
    assert!(matches!(e, Error::MalformedHeader(_)), "{e}");

    let mut domain = bytes.clone();
    domain[6] = 5;
    let e = load_pdb(write(dir.path(), "domain", &domain)).unwrap_err();
    assert!(matches!(e, Error::MalformedHeader(_)), "{e}");

    let mut payload = bytes.clone();
    let mid = bytes.len() / 2;
    payload[mid] ^= 0x5a;
    let e = load_pdb(write(dir.path(), "payload", &payload)).unwrap_err();
    assert!(matches!(e, Error::ChecksumMismatch { .. }), "{e}");

    let e = load_pdb(dir.path().join("missing.apdb")).unwrap_err();
    assert!(matches!(e, Error::Io(_)), "{e}");
}
