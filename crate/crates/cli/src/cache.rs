//! Character-table cache with corruption recovery.
//!
//! Group enumeration and conjugacy classes are always recomputed — they are
//! cheap and serve as the ground truth a cached table must agree with.  Only
//! the character table itself is cached, inside the digest-carrying envelope
//! provided by the table serializer.  The file name encodes the construction
//! parameters plus the envelope format version, so a parameter or format
//! change can never alias an old file.
//!
//! Any defect in a cached file — unreadable, bad digest, failed
//! verification, wrong group, class mismatch — downgrades to a warning on
//! stderr followed by a recompute and an atomic rewrite.  Corruption is
//! never an error condition for the caller.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use char_engine::{
    compute_character_table, table_from_json, table_to_json, CharacterTable, GroupTag,
    CACHE_FORMAT,
};
use ff_core::{FieldTower, Side};
use group_engine::{ConjugacyClasses, GroupKind, MatrixGroup};

use crate::errors::CliError;

/// How the bundle's table was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheStatus {
    /// No cache directory configured; computed in memory.
    Disabled,
    /// Loaded from a valid cached file.
    Hit,
    /// No cached file existed; computed and stored.
    Wrote,
    /// A cached file existed but was defective; recomputed and replaced.
    Recovered,
}

impl CacheStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CacheStatus::Disabled => "disabled",
            CacheStatus::Hit => "hit",
            CacheStatus::Wrote => "wrote",
            CacheStatus::Recovered => "recovered",
        }
    }
}

/// Cache file path for one group construction.
pub fn table_path(dir: &Path, tag: &GroupTag) -> PathBuf {
    dir.join(format!("{}.v{}.table.json", tag.slug(), CACHE_FORMAT))
}

/// Builds a [`distinction::GroupBundle`], consulting the cache for the table.
pub fn load_or_compute(
    kind: GroupKind,
    n: u8,
    side: Side,
    tower: &Arc<FieldTower>,
    ceiling: Option<u64>,
    cache_dir: Option<&Path>,
) -> Result<(distinction::GroupBundle, CacheStatus), CliError> {
    let group = MatrixGroup::build(kind, n, side, Arc::clone(tower), ceiling)?;
    let classes = ConjugacyClasses::compute(&group);
    let tag = GroupTag::of(&group);

    let Some(dir) = cache_dir else {
        let table = compute_character_table(&group, &classes);
        let bundle = distinction::GroupBundle::with_table(group, classes, table)
            .map_err(CliError::usage)?;
        return Ok((bundle, CacheStatus::Disabled));
    };

    let path = table_path(dir, &tag);
    let mut status = CacheStatus::Wrote;
    if path.exists() {
        match read_cached_table(&path, &tag) {
            Ok(table) => match distinction::GroupBundle::with_table(group, classes, table) {
                Ok(bundle) => return Ok((bundle, CacheStatus::Hit)),
                Err(reason) => {
                    eprintln!(
                        "warning: cached table {} disagrees with the group ({reason}); recomputing",
                        path.display()
                    );
                    status = CacheStatus::Recovered;
                    // `with_table` consumed the fresh class data; this path is
                    // rare enough that rebuilding it is the simple fix.
                    return recompute_into_cache(kind, n, side, tower, ceiling, dir, status);
                }
            },
            Err(reason) => {
                eprintln!("warning: cache file {} is unusable ({reason}); recomputing", path.display());
                status = CacheStatus::Recovered;
            }
        }
    }

    let table = compute_character_table(&group, &classes);
    store_table(dir, &tag, &table)?;
    let bundle =
        distinction::GroupBundle::with_table(group, classes, table).map_err(CliError::usage)?;
    Ok((bundle, status))
}

fn recompute_into_cache(
    kind: GroupKind,
    n: u8,
    side: Side,
    tower: &Arc<FieldTower>,
    ceiling: Option<u64>,
    dir: &Path,
    status: CacheStatus,
) -> Result<(distinction::GroupBundle, CacheStatus), CliError> {
    let group = MatrixGroup::build(kind, n, side, Arc::clone(tower), ceiling)?;
    let classes = ConjugacyClasses::compute(&group);
    let tag = GroupTag::of(&group);
    let table = compute_character_table(&group, &classes);
    store_table(dir, &tag, &table)?;
    let bundle =
        distinction::GroupBundle::with_table(group, classes, table).map_err(CliError::usage)?;
    Ok((bundle, status))
}

fn read_cached_table(path: &Path, tag: &GroupTag) -> Result<CharacterTable, String> {
    let text = fs::read_to_string(path).map_err(|e| e.to_string())?;
    table_from_json(&text, Some(tag)).map_err(|e| e.to_string())
}

/// Atomically (write + rename) stores a table under its tagged file name.
pub fn store_table(dir: &Path, tag: &GroupTag, table: &CharacterTable) -> Result<(), CliError> {
    fs::create_dir_all(dir)
        .map_err(|e| CliError::Resource(format!("cannot create cache dir {}: {e}", dir.display())))?;
    let payload = table_to_json(table);
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .map_err(|e| CliError::Resource(format!("cannot create temp file in {}: {e}", dir.display())))?;
    tmp.write_all(payload.as_bytes())
        .map_err(|e| CliError::Resource(format!("cannot write cache entry: {e}")))?;
    let path = table_path(dir, tag);
    tmp.persist(&path)
        .map_err(|e| CliError::Resource(format!("cannot persist {}: {e}", path.display())))?;
    Ok(())
}
