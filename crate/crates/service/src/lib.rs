//! Command-line and HTTP front end for the cuberig pipeline: face capture,
//! solving, scrambling, lowering to rig programs and step-mode sessions.

pub mod bench;
pub mod capture;
pub mod engine;
pub mod error;
pub mod http;
pub mod session;

use std::path::Path;

use cuberig::twophase::{cache, CacheError, CacheStatus, Tables};

pub use engine::Engine;
pub use error::Rejection;

/// Environment variable naming the table cache file.
pub const TABLE_CACHE_ENV: &str = "RIG_TABLE_CACHE";

/// Tables from `cache` (built and written there if missing or stale), or
/// the in-memory process tables when no cache is configured.
pub fn load_tables(cache_path: Option<&Path>) -> Result<(&'static Tables, Option<CacheStatus>), CacheError> {
    match cache_path {
        Some(p) => {
            let (tables, status) = cache::load_or_build(p)?;
            Ok((Box::leak(Box::new(tables)), Some(status)))
        }
        None => Ok((Tables::shared(), None)),
    }
}
