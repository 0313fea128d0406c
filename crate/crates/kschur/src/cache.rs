//! On-disk store of k-Schur expansions, one JSON file per `(k, λ)`.
//!
//! Nothing read back is trusted: an entry is accepted only if its element
//! equals its own h-expansion evaluated in `𝔸` (so it lies in `𝔹`) and its
//! Grassmannian part is exactly `u_{w_λ}`. By uniqueness that pins it to
//! `𝔰_λ`. A rejected entry is recomputed and overwritten with a warning.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use kschur_core::{BoundedPartition, HProductCache, KSchur, NilCoxeterElement};

use crate::error::{Error, Result};
use crate::json::{kschur_from_json, kschur_to_json, KSchurJson};

pub const ENV_VAR: &str = "KSCHUR_CACHE_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lookup {
    Hit,
    Miss,
    /// A file existed but failed to parse or validate.
    Replaced,
}

#[derive(Debug, Clone)]
pub struct ExpansionCache {
    dir: PathBuf,
}

impl ExpansionCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        ExpansionCache { dir: dir.into() }
    }

    /// The cache named by `KSCHUR_CACHE_DIR`, if set and non-empty.
    pub fn from_env() -> Option<Self> {
        std::env::var_os(ENV_VAR)
            .filter(|v| !v.is_empty())
            .map(Self::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, lambda: &BoundedPartition) -> PathBuf {
        let shape = if lambda.is_empty() {
            "empty".to_string()
        } else {
            lambda
                .rows()
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join("-")
        };
        self.dir
            .join(format!("k{}_{}.json", lambda.rank().k(), shape))
    }

    /// Reads and validates the entry for `λ`. `Ok(None)` when absent.
    pub fn load(
        &self,
        lambda: &BoundedPartition,
        memo: &dyn HProductCache,
    ) -> Result<Option<KSchur>> {
        let path = self.path_for(lambda);
        let bytes = match fs::read(&path) {
            Ok(bytes) => bytes,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(source) => return Err(Error::Io { path, source }),
        };
        let json: KSchurJson = serde_json::from_slice(&bytes)?;
        let entry = kschur_from_json(&json)?;
        validate(&entry, lambda, memo)?;
        Ok(Some(entry))
    }

    pub fn store(&self, entry: &KSchur) -> Result<()> {
        fs::create_dir_all(&self.dir).map_err(|source| Error::Io {
            path: self.dir.clone(),
            source,
        })?;
        let path = self.path_for(&entry.lambda);
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        let text = serde_json::to_string(&kschur_to_json(entry))?;
        let write = || -> std::io::Result<()> {
            let mut file = fs::File::create(&tmp)?;
            file.write_all(text.as_bytes())?;
            file.write_all(b"\n")?;
            file.sync_all()?;
            fs::rename(&tmp, &path)
        };
        write().map_err(|source| Error::Io {
            path: path.clone(),
            source,
        })
    }

    /// Cached entry if valid, otherwise `compute()` stored for next time.
    pub fn get_or_compute(
        &self,
        lambda: &BoundedPartition,
        memo: &dyn HProductCache,
        compute: impl FnOnce() -> Result<KSchur>,
    ) -> Result<(KSchur, Lookup)> {
        let status = match self.load(lambda, memo) {
            Ok(Some(entry)) => {
                log::debug!("cache hit for {lambda} at k = {}", lambda.rank().k());
                return Ok((entry, Lookup::Hit));
            }
            Ok(None) => Lookup::Miss,
            Err(e) => {
                log::warn!(
                    "discarding cache entry {}: {e}",
                    self.path_for(lambda).display()
                );
                Lookup::Replaced
            }
        };
        let entry = compute()?;
        if let Err(e) = self.store(&entry) {
            log::warn!("could not write cache entry: {e}");
        }
        Ok((entry, status))
    }
}

fn validate(entry: &KSchur, lambda: &BoundedPartition, memo: &dyn HProductCache) -> Result<()> {
    if &entry.lambda != lambda {
        return Err(Error::Format(format!(
            "entry is for {}, expected {lambda}",
            entry.lambda
        )));
    }
    if entry.h_expansion.to_element(memo)? != entry.element {
        return Err(Error::Format(
            "element disagrees with its h-expansion".into(),
        ));
    }
    let expected = NilCoxeterElement::basis(lambda.grassmannian_element()?);
    if entry.element.grassmannian_part() != expected {
        return Err(Error::Format("Grassmannian part is not u_{w_λ}".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use kschur_core::kschur::kschur_solve;
    use kschur_core::{NoCache, Rank};

    #[test]
    fn file_names() {
        let cache = ExpansionCache::new("/x");
        let r = Rank::new(3).unwrap();
        assert_eq!(
            cache.path_for(&BoundedPartition::empty(r)),
            PathBuf::from("/x/k3_empty.json")
        );
        let lam = BoundedPartition::new(r, vec![2, 2, 1]).unwrap();
        assert_eq!(cache.path_for(&lam), PathBuf::from("/x/k3_2-2-1.json"));
    }

    #[test]
    fn validation_rejects_wrong_content() {
        let r = Rank::new(3).unwrap();
        let lam = BoundedPartition::new(r, vec![2, 1]).unwrap();
        let other = BoundedPartition::new(r, vec![1, 1, 1]).unwrap();
        let good = kschur_solve(&lam, &NoCache).unwrap();
        assert!(validate(&good, &lam, &NoCache).is_ok());
        assert!(validate(&good, &other, &NoCache).is_err());
        let mut forged = good.clone();
        forged.lambda = other.clone();
        assert!(validate(&forged, &other, &NoCache).is_err());
        let mut tampered = good.clone();
        tampered.element = &tampered.element + &tampered.element;
        assert!(validate(&tampered, &lam, &NoCache).is_err());
    }
}
