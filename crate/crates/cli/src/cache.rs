//! A persistent, content-addressed store of universal polynomials.
//!
//! ```text
//! <dir>/objects/<sha256>.poly   canonical polynomial text, named by its own hash
//! <dir>/index/<kind>-<k>[-<l>]  the hash of the entry for that key
//! ```
//!
//! Entries are written through a temporary file and a rename, so readers never see a
//! partial file. A `<key>.lock` file created exclusively makes initialization compute-once
//! across processes; a reader that finds the lock waits for the index entry.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::thread::sleep;
use std::time::{Duration, Instant};

use lambda_kernel::exact::LaurentPoly;
use lambda_kernel::lambda::{
    universal_p, universal_p2, universal_q, universal_q2, LambdaError, PolySource, UniversalKind,
};
use sha2::{Digest, Sha256};

/// How long a reader waits for another process holding a key's lock.
const LOCK_WAIT: Duration = Duration::from_secs(120);

type Key = (UniversalKind, usize, usize);

#[derive(Debug, Default)]
pub struct PolyCache {
    dir: Option<PathBuf>,
    memory: RefCell<BTreeMap<Key, LaurentPoly>>,
    events: RefCell<Vec<String>>,
}

pub fn compute(kind: UniversalKind, k: usize, l: usize) -> Result<LaurentPoly, LambdaError> {
    Ok(match kind {
        UniversalKind::Product => universal_p(k)?,
        UniversalKind::Composite => universal_p2(k, l)?,
        UniversalKind::GammaProduct => universal_q(k)?,
        UniversalKind::GammaComposite => universal_q2(k, l)?,
    }
    .poly)
}

pub fn key_name(kind: UniversalKind, k: usize, l: usize) -> String {
    match kind {
        UniversalKind::Product | UniversalKind::GammaProduct => format!("{}-{}", kind.tag(), k),
        _ => format!("{}-{}-{}", kind.tag(), k, l),
    }
}

fn digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(contents.as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)
}

impl PolyCache {
    /// A cache kept only in memory when `dir` is `None`.
    pub fn new(dir: Option<PathBuf>) -> Self {
        PolyCache { dir, ..Default::default() }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    /// Hits, misses and repairs, in order; for verbose output.
    pub fn events(&self) -> Vec<String> {
        self.events.borrow().clone()
    }

    fn note(&self, s: String) {
        self.events.borrow_mut().push(s);
    }

    pub fn get(&self, kind: UniversalKind, k: usize, l: usize) -> Result<LaurentPoly, LambdaError> {
        if let Some(p) = self.memory.borrow().get(&(kind, k, l)) {
            return Ok(p.clone());
        }
        let p = match &self.dir {
            None => compute(kind, k, l)?,
            Some(dir) => self.get_on_disk(dir, kind, k, l)?,
        };
        self.memory.borrow_mut().insert((kind, k, l), p.clone());
        Ok(p)
    }

    /// The entry for a key if it is present and intact; a damaged entry is removed.
    fn read_entry(&self, dir: &Path, name: &str) -> Option<LaurentPoly> {
        let index = dir.join("index").join(name);
        let hash = fs::read_to_string(&index).ok()?;
        let hash = hash.trim();
        let object = dir.join("objects").join(format!("{}.poly", hash));
        let parsed = fs::read_to_string(&object).ok().and_then(|text| {
            let body = text.strip_suffix('\n').unwrap_or(&text);
            (digest(&text) == hash).then(|| body.parse::<LaurentPoly>().ok()).flatten()
        });
        if parsed.is_none() {
            self.note(format!("cache: discarding damaged entry {}", name));
            let _ = fs::remove_file(&index);
        }
        parsed
    }

    fn get_on_disk(&self, dir: &Path, kind: UniversalKind, k: usize, l: usize) -> Result<LaurentPoly, LambdaError> {
        let name = key_name(kind, k, l);
        if let Some(p) = self.read_entry(dir, &name) {
            self.note(format!("cache: hit {}", name));
            return Ok(p);
        }
        let io = |e: std::io::Error| LambdaError::Invalid(format!("cache directory {}: {}", dir.display(), e));
        fs::create_dir_all(dir.join("index")).map_err(io)?;
        fs::create_dir_all(dir.join("objects")).map_err(io)?;
        let lock = dir.join("index").join(format!("{}.lock", name));
        let start = Instant::now();
        loop {
            match fs::OpenOptions::new().write(true).create_new(true).open(&lock) {
                Ok(_) => break,
                Err(e) if e.kind() == std::io::ErrorKind::AlreadyExists => {
                    if let Some(p) = self.read_entry(dir, &name) {
                        self.note(format!("cache: hit {} after waiting", name));
                        return Ok(p);
                    }
                    if start.elapsed() > LOCK_WAIT {
                        self.note(format!("cache: breaking stale lock for {}", name));
                        let _ = fs::remove_file(&lock);
                    }
                    sleep(Duration::from_millis(50));
                }
                Err(e) => return Err(io(e)),
            }
        }
        let result = self.fill(dir, &name, kind, k, l);
        let _ = fs::remove_file(&lock);
        result
    }

    fn fill(
        &self,
        dir: &Path,
        name: &str,
        kind: UniversalKind,
        k: usize,
        l: usize,
    ) -> Result<LaurentPoly, LambdaError> {
        // Another process may have finished between our miss and taking the lock.
        if let Some(p) = self.read_entry(dir, name) {
            return Ok(p);
        }
        self.note(format!("cache: miss {}", name));
        let p = compute(kind, k, l)?;
        let text = format!("{}\n", p);
        let hash = digest(&text);
        let io = |e: std::io::Error| LambdaError::Invalid(format!("cache directory {}: {}", dir.display(), e));
        let object = dir.join("objects").join(format!("{}.poly", hash));
        if !object.exists() {
            write_atomic(&object, &text).map_err(io)?;
        }
        write_atomic(&dir.join("index").join(name), &format!("{}\n", hash)).map_err(io)?;
        Ok(p)
    }
}

impl PolySource for PolyCache {
    fn product(&self, k: usize) -> Result<LaurentPoly, LambdaError> {
        self.get(UniversalKind::Product, k, 0)
    }

    fn composite(&self, k: usize, l: usize) -> Result<LaurentPoly, LambdaError> {
        self.get(UniversalKind::Composite, k, l)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cold_and_warm_reads_agree() {
        let dir = tempfile::tempdir().unwrap();
        let cold = PolyCache::new(Some(dir.path().to_path_buf()));
        let p = cold.get(UniversalKind::Composite, 2, 2).unwrap();
        assert_eq!(cold.events(), ["cache: miss P2-2-2"]);
        let warm = PolyCache::new(Some(dir.path().to_path_buf()));
        assert_eq!(warm.get(UniversalKind::Composite, 2, 2).unwrap(), p);
        assert_eq!(warm.events(), ["cache: hit P2-2-2"]);
        assert_eq!(p.to_string(), "e1*e3 - e4");
    }

    #[test]
    fn damaged_objects_are_recomputed() {
        let dir = tempfile::tempdir().unwrap();
        let p = PolyCache::new(Some(dir.path().to_path_buf())).get(UniversalKind::Product, 2, 0).unwrap();
        for entry in fs::read_dir(dir.path().join("objects")).unwrap() {
            fs::write(entry.unwrap().path(), "e1 + 1\n").unwrap();
        }
        let again = PolyCache::new(Some(dir.path().to_path_buf()));
        assert_eq!(again.get(UniversalKind::Product, 2, 0).unwrap(), p);
        assert_eq!(again.events(), ["cache: discarding damaged entry P-2", "cache: miss P-2"]);
    }

    #[test]
    fn objects_are_named_by_their_hash() {
        let dir = tempfile::tempdir().unwrap();
        PolyCache::new(Some(dir.path().to_path_buf())).get(UniversalKind::Product, 1, 0).unwrap();
        let hash = fs::read_to_string(dir.path().join("index").join("P-1")).unwrap();
        let text = fs::read_to_string(dir.path().join("objects").join(format!("{}.poly", hash.trim()))).unwrap();
        assert_eq!(digest(&text), hash.trim());
    }
}
