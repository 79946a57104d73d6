//! Optional on-disk cache of shard results, so interrupted sweeps resume.
//!
//! Keys hash the order, the pruning flag, the family's canonical codes and
//! the shard root's code. Unreadable or unwritable entries are treated as
//! misses; the cache never changes results.

use std::path::PathBuf;

use serde::{de::DeserializeOwned, Serialize};
use sha2::{Digest, Sha256};

use crate::family::GraphFamily;
use crate::graph::CanonicalCode;

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "TURAN_CACHE_DIR";

pub(crate) struct ShardKey {
    dir: Option<PathBuf>,
    prefix: Sha256,
}

impl ShardKey {
    pub(crate) fn new(n: usize, family: &GraphFamily, prune: bool) -> ShardKey {
        let dir = std::env::var_os(CACHE_ENV).map(PathBuf::from);
        let mut prefix = Sha256::new();
        prefix.update(format!("ex-v1|n={n}|prune={prune}|"));
        for code in family.codes() {
            prefix.update(code.as_bytes());
            prefix.update(b",");
        }
        ShardKey { dir, prefix }
    }

    fn path(&self, shard: &CanonicalCode) -> Option<PathBuf> {
        let dir = self.dir.as_ref()?;
        let mut h = self.prefix.clone();
        h.update(b"|shard=");
        h.update(shard.as_bytes());
        let digest = h.finalize();
        let name: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        Some(dir.join(format!("{name}.json")))
    }
}

pub(crate) fn load<T: DeserializeOwned>(key: &ShardKey, shard: &CanonicalCode) -> Option<T> {
    let text = std::fs::read_to_string(key.path(shard)?).ok()?;
    serde_json::from_str(&text).ok()
}

pub(crate) fn store<T: Serialize>(key: &ShardKey, shard: &CanonicalCode, value: &T) {
    let Some(path) = key.path(shard) else { return };
    let Ok(text) = serde_json::to_string(value) else { return };
    if std::fs::create_dir_all(path.parent().expect("file in a directory")).is_err() {
        return;
    }
    // Write then rename so a crash never leaves a truncated entry.
    let tmp = path.with_extension("tmp");
    if std::fs::write(&tmp, text).is_ok() {
        let _ = std::fs::rename(&tmp, &path);
    }
}
