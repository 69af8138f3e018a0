//! On-disk cache for the pruning tables.
//!
//! Layout: magic `RCS1`, format version as little-endian `u16`, then the four
//! tables in the order twist×slice, flip×slice, corner×slice-perm,
//! edge×slice-perm, each as a little-endian `u32` byte count followed by the
//! bytes.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use thiserror::Error;

use super::tables::{PruneTables, Tables};

pub const MAGIC: &[u8; 4] = b"RCS1";
pub const FORMAT_VERSION: u16 = 1;

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("table cache I/O: {0}")]
    Io(#[from] io::Error),
    #[error("not a table cache (bad magic)")]
    BadMagic,
    #[error("table cache version {found}, expected {FORMAT_VERSION}")]
    VersionMismatch { found: u16 },
    #[error("table {index} has {found} entries, expected {expected}")]
    BadLength {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("table cache truncated")]
    Truncated,
    #[error("table cache has trailing bytes")]
    TrailingBytes,
}

/// What [`load_or_build`] had to do.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CacheStatus {
    Loaded,
    /// No usable cache: built and written out.
    Built,
    /// Cache was present but invalid (wrong version, corrupt): rebuilt.
    Rebuilt,
}

pub fn encode(prune: &PruneTables) -> Vec<u8> {
    let total: usize = PruneTables::LENGTHS.iter().map(|n| n + 4).sum();
    let mut out = Vec::with_capacity(6 + total);
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&FORMAT_VERSION.to_le_bytes());
    for table in prune.as_slices() {
        out.extend_from_slice(&(table.len() as u32).to_le_bytes());
        out.extend_from_slice(table);
    }
    out
}

pub fn decode(bytes: &[u8]) -> Result<PruneTables, CacheError> {
    if bytes.len() < 6 {
        return Err(if bytes.starts_with(&MAGIC[..bytes.len().min(4)]) {
            CacheError::Truncated
        } else {
            CacheError::BadMagic
        });
    }
    if &bytes[..4] != MAGIC {
        return Err(CacheError::BadMagic);
    }
    let version = u16::from_le_bytes([bytes[4], bytes[5]]);
    if version != FORMAT_VERSION {
        return Err(CacheError::VersionMismatch { found: version });
    }
    let mut rest = &bytes[6..];
    let mut tables: Vec<Vec<u8>> = Vec::with_capacity(4);
    for (index, &expected) in PruneTables::LENGTHS.iter().enumerate() {
        if rest.len() < 4 {
            return Err(CacheError::Truncated);
        }
        let found = u32::from_le_bytes([rest[0], rest[1], rest[2], rest[3]]) as usize;
        if found != expected {
            return Err(CacheError::BadLength {
                index,
                expected,
                found,
            });
        }
        rest = &rest[4..];
        if rest.len() < found {
            return Err(CacheError::Truncated);
        }
        tables.push(rest[..found].to_vec());
        rest = &rest[found..];
    }
    if !rest.is_empty() {
        return Err(CacheError::TrailingBytes);
    }
    let mut it = tables.into_iter();
    Ok(PruneTables {
        phase1_twist_slice: it.next().unwrap(),
        phase1_flip_slice: it.next().unwrap(),
        phase2_corner_slice: it.next().unwrap(),
        phase2_edge_slice: it.next().unwrap(),
    })
}

pub fn save(prune: &PruneTables, path: &Path) -> Result<(), CacheError> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            fs::create_dir_all(dir)?;
        }
    }
    let tmp = path.with_extension("tmp");
    let mut f = fs::File::create(&tmp)?;
    f.write_all(&encode(prune))?;
    f.sync_all()?;
    fs::rename(&tmp, path)?;
    Ok(())
}

pub fn load(path: &Path) -> Result<PruneTables, CacheError> {
    decode(&fs::read(path)?)
}

/// Loads the cache at `path`, or builds the tables and writes a fresh cache
/// when the file is missing or unusable.
pub fn load_or_build(path: &Path) -> Result<(Tables, CacheStatus), CacheError> {
    let status = match load(path) {
        Ok(prune) => return Ok((Tables::from_prune(prune), CacheStatus::Loaded)),
        Err(CacheError::Io(e)) if e.kind() == io::ErrorKind::NotFound => CacheStatus::Built,
        Err(CacheError::Io(e)) => return Err(CacheError::Io(e)),
        Err(_) => CacheStatus::Rebuilt,
    };
    let tables = Tables::build();
    save(&tables.prune, path)?;
    Ok((tables, status))
}
