use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),

    #[error("bad magic: expected \"APDB\", found {0:?}")]
    BadMagic([u8; 4]),

    #[error("unsupported format version {found} (expected {expected})")]
    VersionMismatch { found: u16, expected: u16 },

    #[error("truncated file: {0}")]
    Truncated(&'static str),

    #[error("checksum mismatch: stored {stored:#018x}, computed {computed:#018x}")]
    ChecksumMismatch { stored: u64, computed: u64 },

    #[error("malformed database header: {0}")]
    MalformedHeader(String),

    #[error("duplicate location {0} in pattern")]
    DuplicateLocation(u8),

    #[error("location {location} out of range for {locations} locations")]
    LocationOutOfRange { location: u32, locations: u32 },

    #[error("index {index} out of range (table has {size} entries)")]
    IndexOutOfRange { index: u64, size: u64 },

    #[error("pattern cost {0} does not fit in a database cell")]
    CostOverflow(u32),

    #[error("memory budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown {kind} {name:?}; available: {available}")]
    UnknownName {
        kind: &'static str,
        name: String,
        available: String,
    },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
