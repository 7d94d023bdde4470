//! On-disk cache of `f_n(q)`, one JSON document per `n`.
//!
//! ```json
//! {"format_version":1,"n":3,"coefficients":["0","1","1","2","1","1"]}
//! ```
//!
//! Every entry is checked on load: coefficients must be nonnegative decimal
//! integers, the degree must not exceed `n(n+1)/2`, and the coefficients must
//! sum to `n!`.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::bigpoly::{Degree, Polynomial};
use crate::error::Error;
use crate::numth::factorial;

pub const FORMAT_VERSION: u32 = 1;
pub const CACHE_DIR_ENV: &str = "QWILSON_CACHE_DIR";

#[derive(Debug, Serialize, Deserialize)]
struct FDocument {
    format_version: u32,
    n: u64,
    coefficients: Vec<String>,
}

/// Resolves the cache directory: explicit flag, then `QWILSON_CACHE_DIR`, then
/// the per-user data directory.
pub fn resolve_cache_dir(flag: Option<&Path>) -> Option<PathBuf> {
    if let Some(dir) = flag {
        return Some(dir.to_path_buf());
    }
    if let Some(dir) = std::env::var_os(CACHE_DIR_ENV).filter(|v| !v.is_empty()) {
        return Some(PathBuf::from(dir));
    }
    dirs::data_dir().map(|d| d.join("qwilson"))
}

#[derive(Debug)]
pub struct FCache {
    dir: PathBuf,
    entries: BTreeMap<u64, Polynomial>,
}

impl FCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self {
            dir: dir.into(),
            entries: BTreeMap::new(),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, n: u64) -> PathBuf {
        self.dir.join(format!("f_{n}.json"))
    }

    /// Loads `f_n` from memory or disk. Documents written by another format
    /// version count as misses.
    pub fn load(&mut self, n: u64) -> Result<Option<Polynomial>, Error> {
        if let Some(p) = self.entries.get(&n) {
            return Ok(Some(p.clone()));
        }
        let path = self.path_for(n);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(source) => {
                return Err(Error::CacheIo {
                    path: path.display().to_string(),
                    source,
                })
            }
        };
        let doc: FDocument = serde_json::from_str(&text).map_err(|source| Error::CacheFormat {
            path: path.display().to_string(),
            source,
        })?;
        if doc.format_version != FORMAT_VERSION {
            return Ok(None);
        }
        let poly = decode(&path, n, &doc)?;
        self.entries.insert(n, poly.clone());
        Ok(Some(poly))
    }

    pub fn store(&mut self, n: u64, f: &Polynomial) -> Result<(), Error> {
        let io_err = |path: &Path, source| Error::CacheIo {
            path: path.display().to_string(),
            source,
        };
        fs::create_dir_all(&self.dir).map_err(|e| io_err(&self.dir, e))?;
        let doc = FDocument {
            format_version: FORMAT_VERSION,
            n,
            coefficients: f.coeffs().iter().map(BigInt::to_string).collect(),
        };
        let path = self.path_for(n);
        let tmp = path.with_extension("json.tmp");
        let body = serde_json::to_string(&doc).expect("cache documents always serialize");
        fs::write(&tmp, body).map_err(|e| io_err(&tmp, e))?;
        fs::rename(&tmp, &path).map_err(|e| io_err(&path, e))?;
        self.entries.insert(n, f.clone());
        Ok(())
    }

    /// Returns the cached `f_n`, or computes and stores it.
    pub fn get_or_compute(
        &mut self,
        n: u64,
        compute: impl FnOnce() -> Polynomial,
    ) -> Result<Polynomial, Error> {
        if let Some(p) = self.load(n)? {
            return Ok(p);
        }
        let p = compute();
        self.store(n, &p)?;
        Ok(p)
    }
}

fn decode(path: &Path, n: u64, doc: &FDocument) -> Result<Polynomial, Error> {
    let fail = |reason: String| Error::CacheIntegrity {
        path: path.display().to_string(),
        reason,
    };
    if doc.n != n {
        return Err(fail(format!("document holds n = {}, expected {n}", doc.n)));
    }
    let mut coeffs = Vec::with_capacity(doc.coefficients.len());
    for (i, c) in doc.coefficients.iter().enumerate() {
        let v: BigInt = c
            .parse()
            .map_err(|_| fail(format!("coefficient {i} is not an integer: {c:?}")))?;
        if v.is_negative() {
            return Err(fail(format!("coefficient {i} is negative")));
        }
        coeffs.push(v);
    }
    let poly = Polynomial::from_coeffs(coeffs);
    let max_degree = (n * (n + 1) / 2) as usize;
    if poly.degree() > Degree::Finite(max_degree) {
        return Err(fail(format!("degree {} exceeds {max_degree}", poly.degree())));
    }
    let total = poly.eval_at_one();
    if total != factorial(n) {
        return Err(fail(format!("coefficients sum to {total}, expected {n}!")));
    }
    Ok(poly)
}
