//! Append-only result cache: one JSON object per line.
//!
//! Entries from other library versions are ignored, corrupt lines are
//! skipped with a warning, and the file is locked for the life of the
//! handle.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use svo_core::{FamilySpec, FormulaResult, Method};

use crate::LIBRARY_VERSION;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: String,
    pub sigma: String,
    pub sigma_prime_num: String,
    pub sigma_prime_den: String,
    /// Seconds since the Unix epoch.
    pub created_at: u64,
    pub library_version: String,
}

impl CacheEntry {
    pub fn new(spec: &FamilySpec, result: &FormulaResult) -> Self {
        CacheEntry {
            key: cache_key(spec, result.method),
            sigma: result.sigma.to_string(),
            sigma_prime_num: result.sigma_prime.numer().to_string(),
            sigma_prime_den: result.sigma_prime.denom().to_string(),
            created_at: SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0),
            library_version: LIBRARY_VERSION.to_string(),
        }
    }

    /// The cached value as a [`FormulaResult`], or `None` if a field does not parse.
    pub fn to_result(&self, method: Method) -> Option<FormulaResult> {
        let numer = self.sigma_prime_num.parse().ok()?;
        let denom: svo_core::ExactInteger = self.sigma_prime_den.parse().ok()?;
        if denom <= 0.into() {
            return None;
        }
        Some(FormulaResult {
            sigma_prime: svo_core::ExactRational::new(numer, denom),
            sigma: self.sigma.parse().ok()?,
            method,
        })
    }
}

/// Canonical family string plus method tag.
pub fn cache_key(spec: &FamilySpec, method: Method) -> String {
    format!("{spec}#{}", method.tag())
}

pub struct ResultCache {
    path: PathBuf,
    file: File,
    entries: BTreeMap<String, CacheEntry>,
    skipped: usize,
}

impl ResultCache {
    /// Opens (creating if needed) and loads the cache at `path`.
    pub fn open(path: impl AsRef<Path>) -> io::Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut file = OpenOptions::new().read(true).append(true).create(true).open(&path)?;
        file.lock()?;
        let mut entries = BTreeMap::new();
        let mut skipped = 0;
        file.seek(SeekFrom::Start(0))?;
        for (no, line) in BufReader::new(&file).lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            match serde_json::from_str::<CacheEntry>(&line) {
                Ok(e) if e.library_version == LIBRARY_VERSION => {
                    entries.insert(e.key.clone(), e);
                }
                Ok(_) => {}
                Err(err) => {
                    log::warn!("{}:{}: skipping corrupt cache line: {err}", path.display(), no + 1);
                    skipped += 1;
                }
            }
        }
        Ok(ResultCache { path, file, entries, skipped })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// Number of corrupt lines skipped while loading.
    pub fn skipped_lines(&self) -> usize {
        self.skipped
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, spec: &FamilySpec, method: Method) -> Option<&CacheEntry> {
        self.entries.get(&cache_key(spec, method))
    }

    pub fn insert(&mut self, entry: CacheEntry) -> io::Result<()> {
        let mut line = serde_json::to_string(&entry).map_err(io::Error::other)?;
        line.push('\n');
        self.file.write_all(line.as_bytes())?;
        self.file.flush()?;
        self.entries.insert(entry.key.clone(), entry);
        Ok(())
    }
}

impl Drop for ResultCache {
    fn drop(&mut self) {
        let _ = self.file.unlock();
    }
}
