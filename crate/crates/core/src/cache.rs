//! On-disk cache of ring presentations and their graded tables.
//!
//! One JSON file per presentation, named by [`PresentationKind::cache_key`].
//! Entries written under a different [`FORMAT_VERSION`] are ignored and
//! overwritten. A cache hit returns exactly what a fresh computation would.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::chern::Monomial;
use crate::error::{Error, Result};
use crate::rings::{
    graded_table, grassmannian_presentation, isotropic_presentation, GradedRow, GradedTable, PresentationKind,
    RingPresentation,
};
use crate::FORMAT_VERSION;

/// Environment variable overriding the cache directory.
pub const CACHE_DIR_ENV: &str = "DEGLOCI_CACHE_DIR";

#[derive(Clone, Debug)]
pub struct DiskCache {
    dir: PathBuf,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    format_version: String,
    key: String,
    presentation: RingPresentation,
    up_to_degree: u32,
    rows: Vec<CachedRow>,
}

#[derive(Serialize, Deserialize)]
struct CachedRow {
    degree: u32,
    rank: u64,
    torsion: Vec<u64>,
    num_monomials: usize,
    basis: Vec<Monomial>,
}

impl DiskCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        DiskCache { dir: dir.into() }
    }

    /// The directory from [`CACHE_DIR_ENV`] if set, else `fallback`.
    pub fn resolve(fallback: Option<PathBuf>) -> Option<Self> {
        std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from).or(fallback).map(DiskCache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, kind: PresentationKind) -> PathBuf {
        self.dir.join(format!("{}.json", kind.cache_key()))
    }

    fn load(&self, kind: PresentationKind) -> Option<Entry> {
        let text = fs::read_to_string(self.path(kind)).ok()?;
        let entry: Entry = serde_json::from_str(&text).ok()?;
        (entry.format_version == FORMAT_VERSION && entry.key == kind.cache_key()).then_some(entry)
    }

    fn store(&self, pres: &RingPresentation, table: &GradedTable, up_to_degree: u32) -> Result<()> {
        fs::create_dir_all(&self.dir).map_err(|e| Error::Cache(format!("{}: {e}", self.dir.display())))?;
        let entry = Entry {
            format_version: FORMAT_VERSION.to_string(),
            key: pres.kind.cache_key(),
            presentation: pres.clone(),
            up_to_degree,
            rows: table
                .rows
                .iter()
                .map(|r| CachedRow {
                    degree: r.degree,
                    rank: r.rank,
                    torsion: r.torsion.clone(),
                    num_monomials: r.num_monomials,
                    basis: r.basis.clone(),
                })
                .collect(),
        };
        let text = serde_json::to_string(&entry).map_err(|e| Error::Cache(e.to_string()))?;
        let path = self.path(pres.kind);
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, text).map_err(|e| Error::Cache(format!("{}: {e}", tmp.display())))?;
        fs::rename(&tmp, &path).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))
    }

    /// True if a current-version entry covering `up_to_degree` exists.
    pub fn has(&self, kind: PresentationKind, up_to_degree: u32) -> bool {
        self.load(kind).is_some_and(|e| e.up_to_degree >= up_to_degree)
    }
}

pub fn presentation(kind: PresentationKind) -> Result<RingPresentation> {
    match kind {
        PresentationKind::Grassmannian { d, n } => grassmannian_presentation(d, n),
        PresentationKind::Isotropic { d, r } => isotropic_presentation(d, r),
    }
}

/// The presentation and its table up to `up_to_degree`, read from `cache`
/// when possible and written back after a miss.
pub fn cached_table(
    cache: Option<&DiskCache>,
    kind: PresentationKind,
    up_to_degree: u32,
) -> Result<(RingPresentation, GradedTable)> {
    if let Some(entry) = cache.and_then(|c| c.load(kind)) {
        if entry.up_to_degree >= up_to_degree {
            let rows = entry
                .rows
                .into_iter()
                .filter(|r| r.degree <= up_to_degree)
                .map(|r| GradedRow {
                    degree: r.degree,
                    rank: r.rank,
                    torsion: r.torsion,
                    num_monomials: r.num_monomials,
                    basis: r.basis,
                })
                .collect();
            return Ok((entry.presentation, GradedTable { kind, rows }));
        }
    }
    let pres = presentation(kind)?;
    let table = graded_table(&pres, up_to_degree)?;
    if let Some(c) = cache {
        c.store(&pres, &table, up_to_degree)?;
    }
    Ok((pres, table))
}
