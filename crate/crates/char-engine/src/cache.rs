//! Verified serialization of character tables.
//!
//! A cached table is a JSON envelope `{format, digest, table}` where the
//! digest is SHA-256 over the canonical serialization of the table alone.
//! Loading re-derives the digest, re-runs the structural validator, and
//! (when the caller knows what it wants) checks the group tag, so a stale
//! or hand-edited file is rejected rather than trusted.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::table::{CharacterTable, GroupTag};

/// Bump when the serialized layout changes incompatibly.  Public so cache
/// file names can include it and never alias across format changes.
pub const FORMAT: u32 = 1;

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cached table is not valid JSON: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("cached table has format {found}, this build reads {expected}")]
    Format { found: u32, expected: u32 },
    #[error("cached table digest mismatch (corrupted or stale file)")]
    Digest,
    #[error("cached table fails structural validation")]
    Invalid,
    #[error("cached table is for {found}, expected {expected}")]
    WrongGroup { found: String, expected: String },
    #[error("cached table was built without a passing verification report")]
    Unverified,
}

#[derive(Serialize, Deserialize)]
struct Envelope {
    format: u32,
    digest: String,
    table: CharacterTable,
}

fn digest_of(table: &CharacterTable) -> String {
    let body = serde_json::to_string(table).expect("table serialization cannot fail");
    let mut h = Sha256::new();
    h.update(body.as_bytes());
    let out = h.finalize();
    out.iter().map(|b| format!("{b:02x}")).collect()
}

/// Serializes a table into its digested envelope.
pub fn table_to_json(table: &CharacterTable) -> String {
    let env = Envelope {
        format: FORMAT,
        digest: digest_of(table),
        table: table.clone(),
    };
    serde_json::to_string(&env).expect("envelope serialization cannot fail")
}

/// Parses and fully re-checks a cached table.
pub fn table_from_json(
    json: &str,
    expected: Option<&GroupTag>,
) -> Result<CharacterTable, CacheError> {
    let env: Envelope = serde_json::from_str(json)?;
    if env.format != FORMAT {
        return Err(CacheError::Format { found: env.format, expected: FORMAT });
    }
    if digest_of(&env.table) != env.digest {
        return Err(CacheError::Digest);
    }
    if !env.table.structurally_valid() {
        return Err(CacheError::Invalid);
    }
    if !env.table.verification.all_ok() {
        return Err(CacheError::Unverified);
    }
    if let Some(tag) = expected {
        if env.table.tag != *tag {
            return Err(CacheError::WrongGroup {
                found: env.table.tag.slug(),
                expected: tag.slug(),
            });
        }
    }
    Ok(env.table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dixon::compute_character_table;
    use ff_core::{FieldTower, Side};
    use group_engine::{ConjugacyClasses, GroupKind, MatrixGroup};
    use std::sync::Arc;

    fn small_table() -> CharacterTable {
        let t = Arc::new(FieldTower::build(3, 1).unwrap());
        let g = MatrixGroup::build(GroupKind::SL, 2, Side::Base, t, None).unwrap();
        let cc = ConjugacyClasses::compute(&g);
        compute_character_table(&g, &cc)
    }

    #[test]
    fn round_trip_is_faithful() {
        let tab = small_table();
        let json = table_to_json(&tab);
        let back = table_from_json(&json, Some(&tab.tag)).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), serde_json::to_string(&tab).unwrap());
        // Serialization itself is deterministic.
        assert_eq!(table_to_json(&back), json);
    }

    #[test]
    fn tampering_is_detected() {
        let tab = small_table();
        let json = table_to_json(&tab);
        // Corrupt a degree: "degrees":[1,1,1,2... -> 3.
        let bad = json.replacen("\"degrees\":[1", "\"degrees\":[3", 1);
        assert_ne!(bad, json);
        assert!(matches!(table_from_json(&bad, None), Err(CacheError::Digest)));
        // A wrong expected tag is refused even for an intact file.
        let mut other = tab.tag.clone();
        other.n = 3;
        assert!(matches!(
            table_from_json(&json, Some(&other)),
            Err(CacheError::WrongGroup { .. })
        ));
    }
}
