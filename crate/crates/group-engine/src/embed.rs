//! Identity-representation embeddings of one enumerated group in another.

use crate::classes::ConjugacyClasses;
use crate::group::MatrixGroup;
use crate::GroupError;

/// The inclusion `H <= G` realized on element indices.
///
/// Both groups must share a field tower and matrix size; every element of
/// `H` is looked up in `G` literally (same matrix entries).  The struct
/// records, for each `H`-element, its index and conjugacy class in `G`,
/// plus the total count of `H`-elements falling in each `G`-class — the
/// data needed to restrict class functions from `G` to `H`.
pub struct Embedding {
    h_to_g: Vec<u32>,
    g_class_of_h: Vec<u32>,
    class_counts: Vec<u64>,
}

impl Embedding {
    /// Builds the embedding, failing if some `H`-element is outside `G`.
    pub fn new(
        g: &MatrixGroup,
        g_classes: &ConjugacyClasses,
        h: &MatrixGroup,
    ) -> Result<Embedding, GroupError> {
        assert_eq!(g.n(), h.n(), "embedding needs equal matrix sizes");
        let mut h_to_g = Vec::with_capacity(h.order() as usize);
        let mut g_class_of_h = Vec::with_capacity(h.order() as usize);
        let mut class_counts = vec![0u64; g_classes.count()];
        for m in h.elems() {
            let gi = g.index_of_required(m)?;
            let c = g_classes.class_of(gi);
            h_to_g.push(gi);
            g_class_of_h.push(c);
            class_counts[c as usize] += 1;
        }
        Ok(Embedding {
            h_to_g,
            g_class_of_h,
            class_counts,
        })
    }

    /// Index in `G` of the `H`-element with index `hi`.
    pub fn g_index(&self, hi: u32) -> u32 {
        self.h_to_g[hi as usize]
    }

    /// `G`-class of the `H`-element with index `hi`.
    pub fn g_class(&self, hi: u32) -> u32 {
        self.g_class_of_h[hi as usize]
    }

    /// Number of `H`-elements lying in each `G`-class.
    pub fn class_counts(&self) -> &[u64] {
        &self.class_counts
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupKind;
    use ff_core::{FieldTower, Side};
    use std::sync::Arc;

    #[test]
    fn base_field_group_embeds_in_extension_group() {
        let t = Arc::new(FieldTower::build(3, 1).unwrap());
        let g = MatrixGroup::build(GroupKind::GL, 2, Side::Ext, Arc::clone(&t), None).unwrap();
        let gc = ConjugacyClasses::compute(&g);
        let h = MatrixGroup::build(GroupKind::GL, 2, Side::Base, Arc::clone(&t), None).unwrap();
        let emb = Embedding::new(&g, &gc, &h).unwrap();
        // Counts over all classes total |H|.
        assert_eq!(emb.class_counts().iter().sum::<u64>(), h.order());
        // The identity goes to the identity class.
        let id = h.identity_index();
        assert_eq!(emb.g_class(id), 0);
        // H-conjugate elements land in a common G-class.
        for hi in 0..h.order() as u32 {
            for &hg in h.generators() {
                let conj = h.mul_idx(h.mul_idx(hg, hi), h.inverse_of(hg));
                assert_eq!(emb.g_class(hi), emb.g_class(conj));
            }
        }
    }

    #[test]
    fn unitary_group_embeds_in_extension_group() {
        let t = Arc::new(FieldTower::build(3, 1).unwrap());
        let g = MatrixGroup::build(GroupKind::GL, 2, Side::Ext, Arc::clone(&t), None).unwrap();
        let gc = ConjugacyClasses::compute(&g);
        let h = MatrixGroup::build(GroupKind::U, 2, Side::Ext, Arc::clone(&t), None).unwrap();
        let emb = Embedding::new(&g, &gc, &h).unwrap();
        assert_eq!(emb.class_counts().iter().sum::<u64>(), 96);
    }
}
