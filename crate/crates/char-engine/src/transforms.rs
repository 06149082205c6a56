//! Character-level transforms: duality, Galois twist, determinant twist.
//!
//! Each transform produces the value list of the transformed character and
//! then locates it in the table; since the tables are complete, a missed
//! lookup means the caller applied a transform that does not preserve the
//! group (a bug), so the functions panic rather than return an option.

use crate::cyclo::CharValue;
use crate::table::CharacterTable;

/// Index of the contragredient (dual) of character `i`.
///
/// Computed two independent ways — complex conjugation of every value and
/// permutation of classes by `g -> g^-1` — which must agree.
pub fn dual_character(table: &CharacterTable, i: usize) -> usize {
    let via_conj: Vec<CharValue> = table.values[i].iter().map(|v| v.conj()).collect();
    let via_perm: Vec<CharValue> = (0..table.k())
        .map(|m| table.values[i][table.inverse_class[m] as usize].clone())
        .collect();
    assert_eq!(via_conj, via_perm, "conjugate and inverse-class dual disagree");
    table
        .find_char(&via_conj)
        .expect("dual character missing from table")
}

/// Index of the Galois twist of character `i` (entrywise field Frobenius
/// on the underlying matrices).  On base-side groups this is the identity.
pub fn galois_character(table: &CharacterTable, i: usize) -> usize {
    let twisted: Vec<CharValue> = (0..table.k())
        .map(|m| table.values[i][table.galois_class[m] as usize].clone())
        .collect();
    table
        .find_char(&twisted)
        .expect("Galois twist missing from table")
}

/// Index of `chi_i . (mu o det)`, where `mu_at_det[m]` is the value
/// `(order, exponent)` of the twisting character at the determinant of
/// the representative of class `m` (as produced from `class_det_scan`).
pub fn det_twist(table: &CharacterTable, i: usize, mu_at_det: &[(u32, u32)]) -> usize {
    assert_eq!(mu_at_det.len(), table.k());
    let twisted: Vec<CharValue> = (0..table.k())
        .map(|m| {
            let (o, e) = mu_at_det[m];
            table.values[i][m].times_root(o, e)
        })
        .collect();
    table
        .find_char(&twisted)
        .expect("determinant twist missing from table")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dixon::compute_character_table;
    use ff_core::{FFElem, FieldTower, MultCharacter, Side};
    use group_engine::{ConjugacyClasses, GroupKind, MatrixGroup};
    use std::sync::Arc;

    fn table_for(p: u32, kind: GroupKind, side: Side) -> (Arc<FieldTower>, CharacterTable) {
        let t = Arc::new(FieldTower::build(p, 1).unwrap());
        let g = MatrixGroup::build(kind, 2, side, Arc::clone(&t), None).unwrap();
        let cc = ConjugacyClasses::compute(&g);
        let tab = compute_character_table(&g, &cc);
        (t, tab)
    }

    #[test]
    fn duality_is_an_involution() {
        let (_, tab) = table_for(3, GroupKind::GL, Side::Base);
        for i in 0..tab.k() {
            let d = dual_character(&tab, i);
            assert_eq!(dual_character(&tab, d), i);
            assert_eq!(tab.degrees[d], tab.degrees[i]);
        }
    }

    #[test]
    fn galois_twist_trivial_on_base_and_involutive_on_extension() {
        let (_, tab) = table_for(3, GroupKind::GL, Side::Base);
        for i in 0..tab.k() {
            assert_eq!(galois_character(&tab, i), i);
        }
        let (_, utab) = table_for(3, GroupKind::U, Side::Ext);
        for i in 0..utab.k() {
            let s = galois_character(&utab, i);
            assert_eq!(galois_character(&utab, s), i);
        }
    }

    #[test]
    fn det_twists_act_simply_on_linear_characters() {
        let (t, tab) = table_for(3, GroupKind::GL, Side::Base);
        let mus = MultCharacter::all(&t, Side::Base);
        assert_eq!(mus.len(), 2);
        let triv = tab.trivial_index();
        let mut images = std::collections::BTreeSet::new();
        for mu in &mus {
            let vals: Vec<(u32, u32)> = tab
                .class_det_scan
                .iter()
                .map(|&s| mu.value(&t, FFElem::from_scan_index(s)).unwrap())
                .collect();
            let j = det_twist(&tab, triv, &vals);
            assert_eq!(tab.degrees[j], 1);
            images.insert(j);
            // Twisting any character twice by an order-two mu returns it.
            for i in 0..tab.k() {
                let once = det_twist(&tab, i, &vals);
                assert_eq!(det_twist(&tab, once, &vals), i);
            }
        }
        // The two twists of the trivial character are exactly the linear
        // characters of the group.
        let linear: std::collections::BTreeSet<usize> =
            tab.linear_indices().into_iter().collect();
        assert_eq!(images, linear);
    }
}
