use std::fmt;
use std::fs::{self, File};
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::Path;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Arc;

use dashmap::DashMap;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::ring::{from_json, to_json, GradedSeries};
use crate::sequences::SeqPair;

/// Version of the series encoding written into cache files. Bump whenever
/// `ring::to_json` or the recursion changes meaning.
pub const ENCODER_VERSION: &str = "tlh-series-json/1";

const MAGIC: &str = "tlh-memo";

/// Concurrent `(v, w) -> p(v, w)` table. Entries are written once and never
/// change.
#[derive(Default)]
pub struct MemoTable {
    map: DashMap<SeqPair, Arc<GradedSeries>>,
    hits: AtomicU64,
    misses: AtomicU64,
    max_depth: AtomicUsize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MemoStats {
    pub entries: usize,
    pub hits: u64,
    pub misses: u64,
    pub max_depth: usize,
}

impl fmt::Display for MemoStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "entries={} hits={} misses={} max_depth={}",
            self.entries, self.hits, self.misses, self.max_depth
        )
    }
}

#[derive(Debug, Error)]
pub enum PersistError {
    #[error("cache i/o: {0}")]
    Io(#[from] io::Error),
    #[error("cache was written by a different encoder (header `{found}`)")]
    VersionMismatch { found: String },
    #[error("cache line {line}: {msg}")]
    Malformed { line: usize, msg: String },
}

fn header() -> String {
    let digest = Sha256::digest(ENCODER_VERSION.as_bytes());
    let hex: String = digest.iter().take(8).map(|b| format!("{b:02x}")).collect();
    format!("{MAGIC} {ENCODER_VERSION} {hex}")
}

impl MemoTable {
    pub fn new() -> Self {
        MemoTable::default()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn get(&self, p: &SeqPair) -> Option<Arc<GradedSeries>> {
        self.map.get(p).map(|e| Arc::clone(e.value()))
    }

    pub fn contains(&self, p: &SeqPair) -> bool {
        self.map.contains_key(p)
    }

    /// Stores `value` unless the key is already present. Racing writers carry
    /// identical values, so the first one wins.
    pub fn insert(&self, p: SeqPair, value: GradedSeries) {
        self.map.entry(p).or_insert_with(|| Arc::new(value));
    }

    pub(crate) fn record_hits(&self, n: u64) {
        self.hits.fetch_add(n, Ordering::Relaxed);
    }

    pub(crate) fn record_misses(&self, n: u64) {
        self.misses.fetch_add(n, Ordering::Relaxed);
    }

    pub(crate) fn record_depth(&self, d: usize) {
        self.max_depth.fetch_max(d, Ordering::Relaxed);
    }

    pub fn stats(&self) -> MemoStats {
        MemoStats {
            entries: self.len(),
            hits: self.hits.load(Ordering::Relaxed),
            misses: self.misses.load(Ordering::Relaxed),
            max_depth: self.max_depth.load(Ordering::Relaxed),
        }
    }

    /// Writes every entry, sorted by key, as `v|w<TAB>json` lines after a
    /// version header.
    pub fn save(&self, path: &Path) -> Result<(), PersistError> {
        let mut entries: Vec<(SeqPair, Arc<GradedSeries>)> = self
            .map
            .iter()
            .map(|e| (e.key().clone(), Arc::clone(e.value())))
            .collect();
        entries.sort_by(|a, b| a.0.cmp(&b.0));

        let tmp = path.with_extension("tmp");
        {
            let mut out = BufWriter::new(File::create(&tmp)?);
            writeln!(out, "{}", header())?;
            for (k, v) in &entries {
                writeln!(out, "{k}\t{}", to_json(v))?;
            }
            out.flush()?;
        }
        fs::rename(&tmp, path)?;
        Ok(())
    }

    /// Loads entries from `path` into the table. Returns the number of entries
    /// read. A header from another encoder version is rejected before any
    /// entry is trusted.
    pub fn load(&self, path: &Path) -> Result<usize, PersistError> {
        let reader = BufReader::new(File::open(path)?);
        let mut lines = reader.lines();
        let first = lines.next().transpose()?.unwrap_or_default();
        if first != header() {
            return Err(PersistError::VersionMismatch { found: first });
        }
        let mut staged = Vec::new();
        for (n, line) in lines.enumerate() {
            let line = line?;
            if line.is_empty() {
                continue;
            }
            let bad = |msg: String| PersistError::Malformed { line: n + 2, msg };
            let (key, json) = line
                .split_once('\t')
                .ok_or_else(|| bad("missing tab separator".into()))?;
            let key: SeqPair = key.parse().map_err(|e| bad(format!("{e}")))?;
            let value = from_json(json).map_err(|e| bad(format!("{e}")))?;
            staged.push((key, value));
        }
        let count = staged.len();
        for (k, v) in staged {
            self.insert(k, v);
        }
        Ok(count)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recursion::eval_p;

    #[test]
    fn fresh_table_is_empty() {
        let memo = MemoTable::new();
        assert_eq!(memo.stats(), MemoStats::default());
    }

    #[test]
    fn insert_is_idempotent() {
        let memo = MemoTable::new();
        let k = SeqPair::parse("1", "1").unwrap();
        memo.insert(k.clone(), GradedSeries::one());
        memo.insert(k.clone(), GradedSeries::zero());
        assert_eq!(*memo.get(&k).unwrap(), GradedSeries::one());
    }

    #[test]
    fn save_and_reload() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("memo.cache");
        let memo = MemoTable::new();
        let want = eval_p(&SeqPair::torus(3, 4), &memo);
        memo.save(&path).unwrap();

        let again = MemoTable::new();
        let n = again.load(&path).unwrap();
        assert_eq!(n, memo.len());
        assert_eq!(*again.get(&SeqPair::torus(3, 4)).unwrap(), want);
        // nothing left to compute
        assert_eq!(eval_p(&SeqPair::torus(3, 4), &again), want);
        assert_eq!(again.stats().misses, 0);
    }

    #[test]
    fn rejects_foreign_header() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("memo.cache");
        fs::write(&path, "tlh-memo tlh-series-json/0 deadbeef\n|\t{\"num\":[],\"den\":[]}\n").unwrap();
        let memo = MemoTable::new();
        assert!(matches!(memo.load(&path), Err(PersistError::VersionMismatch { .. })));
        assert!(memo.is_empty());
    }

    #[test]
    fn rejects_malformed_lines() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("memo.cache");
        fs::write(&path, format!("{}\n1|0\t{{\"num\":[],\"den\":[]}}\n", header())).unwrap();
        let memo = MemoTable::new();
        assert!(matches!(memo.load(&path), Err(PersistError::Malformed { line: 2, .. })));
        assert!(memo.is_empty());
    }
}
