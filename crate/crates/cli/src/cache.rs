//! On-disk result cache keyed by a content hash.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: String,
    pub payload: Value,
    /// Seconds since the Unix epoch.
    pub created_at: u64,
}

/// Hex SHA-256 over the given parts and the tool version, NUL-separated.
pub fn cache_key(parts: &[&str]) -> String {
    let mut h = Sha256::new();
    for p in parts.iter().copied().chain([latimer_core::VERSION]) {
        h.update(p.as_bytes());
        h.update([0u8]);
    }
    hex::encode(h.finalize())
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: &Path) -> Self {
        Cache { dir: dir.to_path_buf() }
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// A stored payload for `key`; unreadable or mismatched files count as
    /// misses.
    pub fn get(&self, key: &str) -> Option<Value> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let entry: CacheEntry = serde_json::from_str(&text).ok()?;
        (entry.key == key).then_some(entry.payload)
    }

    /// Writes to a temporary file in the cache directory, then renames it
    /// into place.
    pub fn put(&self, key: &str, payload: &Value) -> Result<(), CliError> {
        fs::create_dir_all(&self.dir)?;
        let created_at = SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs());
        let entry = CacheEntry { key: key.to_string(), payload: payload.clone(), created_at };
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        serde_json::to_writer(&mut tmp, &entry).map_err(|e| CliError::Io(e.to_string()))?;
        tmp.flush()?;
        tmp.persist(self.path(key)).map_err(|e| CliError::Io(e.to_string()))?;
        Ok(())
    }
}
