//! Group/table bundles and subgroup pair contexts.
//!
//! Everything downstream works from immutable bundles: an enumerated
//! group, its conjugacy classes, and its verified character table.  A
//! `PairContext` adds the literal embedding of a subgroup and the full
//! exact restriction-multiplicity matrix between the two tables.

use std::collections::BTreeMap;
use std::sync::Arc;

use char_engine::{compute_character_table, CharacterTable};
use ff_core::{FieldTower, Side};
use group_engine::{ConjugacyClasses, Embedding, GroupError, GroupKind, MatrixGroup};

/// An enumerated group with its classes and verified character table.
pub struct GroupBundle {
    pub group: MatrixGroup,
    pub classes: ConjugacyClasses,
    pub table: CharacterTable,
}

impl GroupBundle {
    /// Enumerates the group and computes its table from scratch.
    pub fn build(
        kind: GroupKind,
        n: u8,
        side: Side,
        tower: Arc<FieldTower>,
        ceiling: Option<u64>,
    ) -> Result<GroupBundle, GroupError> {
        let group = MatrixGroup::build(kind, n, side, tower, ceiling)?;
        let classes = ConjugacyClasses::compute(&group);
        let table = compute_character_table(&group, &classes);
        Ok(GroupBundle { group, classes, table })
    }

    /// Wraps a table obtained elsewhere (e.g. a cache), after checking it
    /// against freshly computed class data; a mismatch is a hard error
    /// because every downstream number would silently be wrong.
    pub fn with_table(
        group: MatrixGroup,
        classes: ConjugacyClasses,
        table: CharacterTable,
    ) -> Result<GroupBundle, String> {
        if table.group_order != group.order() {
            return Err("cached table group order disagrees".into());
        }
        if table.k() != classes.count() {
            return Err("cached table class count disagrees".into());
        }
        for c in 0..classes.count() as u32 {
            if table.class_sizes[c as usize] != classes.size(c)
                || table.class_orders[c as usize] != classes.element_order(c)
                || table.class_rep_keys[c as usize]
                    != group.mat(classes.rep(c)).encode(group.tower())
            {
                return Err(format!("cached table class {c} disagrees with the group"));
            }
        }
        if !table.verification.all_ok() {
            return Err("cached table carries a failed verification report".into());
        }
        Ok(GroupBundle { group, classes, table })
    }

    /// Number of irreducibles.
    pub fn k(&self) -> usize {
        self.table.k()
    }
}

/// A subgroup inclusion with its exact restriction data.
pub struct PairContext {
    /// `(G-class, H-class) -> number of H-elements realizing the pair`.
    pub pair_counts: BTreeMap<(u32, u32), u64>,
    /// `restriction[i][j] = <Res chi_i, chi'_j>`, exact.
    pub restriction: Vec<Vec<u64>>,
    pub embedding: Embedding,
}

impl PairContext {
    /// Builds the embedding `h <= g` and the full restriction matrix.
    pub fn new(g: &GroupBundle, h: &GroupBundle) -> Result<PairContext, GroupError> {
        let embedding = Embedding::new(&g.group, &g.classes, &h.group)?;
        let mut pair_counts: BTreeMap<(u32, u32), u64> = BTreeMap::new();
        for hi in 0..h.group.order() as u32 {
            *pair_counts
                .entry((embedding.g_class(hi), h.classes.class_of(hi)))
                .or_insert(0) += 1;
        }
        let restriction = char_engine::restriction_matrix(&g.table, &h.table, &pair_counts);
        Ok(PairContext { pair_counts, restriction, embedding })
    }

    /// Multiplicity of the trivial character of `H` in `Res chi_i`.
    pub fn dim_trivial(&self, h: &GroupBundle, i: usize) -> u64 {
        self.restriction[i][h.table.trivial_index()]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn with_table_rejects_mismatched_class_data() {
        let t = Arc::new(FieldTower::build(3, 1).unwrap());
        let b = GroupBundle::build(GroupKind::SL, 2, Side::Base, Arc::clone(&t), None).unwrap();
        let other = MatrixGroup::build(GroupKind::GL, 2, Side::Base, t, None).unwrap();
        let other_classes = ConjugacyClasses::compute(&other);
        let err = GroupBundle::with_table(other, other_classes, b.table.clone());
        assert!(err.is_err());
    }

    #[test]
    fn pair_context_restricts_the_trivial_character_trivially() {
        let t = Arc::new(FieldTower::build(3, 1).unwrap());
        let g = GroupBundle::build(GroupKind::GL, 2, Side::Ext, Arc::clone(&t), None).unwrap();
        let h = GroupBundle::build(GroupKind::GL, 2, Side::Base, t, None).unwrap();
        let pc = PairContext::new(&g, &h).unwrap();
        let triv = g.table.trivial_index();
        assert_eq!(pc.dim_trivial(&h, triv), 1);
        assert_eq!(
            pc.restriction[triv].iter().sum::<u64>(),
            1,
            "trivial restricts to exactly the trivial"
        );
    }
}
