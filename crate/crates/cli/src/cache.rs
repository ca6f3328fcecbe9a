//! On-disk spectrum cache under `MINORGAP_CACHE_DIR`.
//!
//! Each query gets a directory named by the SHA-256 of its key, holding
//! `key.json`, `spectrum.json` and `witnesses.g6`. A directory whose key
//! does not match the query, or whose files fail to parse, is a miss.

use std::fs;
use std::path::{Path, PathBuf};

use minorgap_core::{EdgeSpectrum, ForbiddenSet};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const ENGINE_VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "+spectrum.v1");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryKey {
    pub n: usize,
    pub forbidden_canonical: Vec<String>,
    pub engine_version: String,
}

impl QueryKey {
    pub fn new(n: usize, f: &ForbiddenSet) -> Self {
        let mut forbidden_canonical: Vec<String> = f.canonical_forms().iter().map(|c| c.as_str().to_string()).collect();
        forbidden_canonical.dedup();
        QueryKey { n, forbidden_canonical, engine_version: ENGINE_VERSION.to_string() }
    }

    pub fn digest(&self) -> String {
        let json = serde_json::to_vec(self).expect("key serializes");
        format!("{:x}", Sha256::digest(json))
    }
}

pub struct Cache {
    root: PathBuf,
}

impl Cache {
    pub fn from_env() -> Option<Self> {
        std::env::var_os("MINORGAP_CACHE_DIR").filter(|v| !v.is_empty()).map(|root| Cache { root: root.into() })
    }

    fn dir(&self, key: &QueryKey) -> PathBuf {
        self.root.join(key.digest())
    }

    pub fn get(&self, key: &QueryKey) -> Option<EdgeSpectrum> {
        let dir = self.dir(key);
        let stored: QueryKey = serde_json::from_slice(&fs::read(dir.join("key.json")).ok()?).ok()?;
        if stored != *key {
            return None;
        }
        serde_json::from_slice(&fs::read(dir.join("spectrum.json")).ok()?).ok()
    }

    /// Writes into a scratch directory and renames it into place, so readers
    /// never see a half-written entry.
    pub fn put(&self, key: &QueryKey, s: &EdgeSpectrum) -> std::io::Result<()> {
        let dir = self.dir(key);
        if dir.exists() {
            return Ok(());
        }
        fs::create_dir_all(&self.root)?;
        let tmp = self.root.join(format!(".{}.{}", key.digest(), std::process::id()));
        fs::create_dir_all(&tmp)?;
        write_entry(&tmp, key, s)?;
        match fs::rename(&tmp, &dir) {
            Ok(()) => Ok(()),
            Err(_) if dir.exists() => fs::remove_dir_all(&tmp),
            Err(e) => Err(e),
        }
    }
}

fn write_entry(dir: &Path, key: &QueryKey, s: &EdgeSpectrum) -> std::io::Result<()> {
    fs::write(dir.join("key.json"), serde_json::to_vec_pretty(key)?)?;
    fs::write(dir.join("spectrum.json"), serde_json::to_vec_pretty(s)?)?;
    let lines: String = s.witnesses.values().map(|w| format!("{w}\n")).collect();
    fs::write(dir.join("witnesses.g6"), lines)
}
