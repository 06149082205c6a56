//! Whittaker (generic) multiplicities against the unipotent radical.
//!
//! For a rank-two group `G` with upper unitriangular subgroup `N`, the
//! multiplicity `<Res_N chi, psi_a>` lives in `Z[zeta_p]` before dividing
//! by `|N|`, because unipotent elements have order `p`.  The sums are
//! therefore accumulated exactly as dense integer vectors indexed by the
//! `p`-th roots of unity; integrality (all non-constant coefficients
//! equal after reduction) and divisibility by `|N|` are hard assertions,
//! so the result is exact with no modular reconstruction at all.

use ff_core::{AddCharacter, FFElem, Side};
use group_engine::{unitriangular_elements, ConjugacyClasses, MatrixGroup};

use crate::table::CharacterTable;

/// Exact Whittaker multiplicities for every character and every additive
/// parameter `a` in the units of the entry field.
pub struct WhittakerReport {
    /// Field characteristic: the order of the additive characters.
    pub char_p: u32,
    /// Size of the unipotent subgroup.
    pub n_order: u64,
    /// Index of the unipotent subgroup, which every row must resum to.
    pub index: u64,
    /// Scan index of the base point `delta`: `psi_a(x) = zeta_p^Tr(delta a x)`.
    pub delta_scan: u32,
    /// Unit parameters `a`, ascending by scan index.
    pub a_scans: Vec<u32>,
    /// `mults[a][character]`.
    pub mults: Vec<Vec<u64>>,
    /// Whether every multiplicity is at most one.
    pub multiplicity_free: bool,
}

impl WhittakerReport {
    /// Position of parameter `a` (by scan index).
    pub fn a_position(&self, a_scan: u32) -> usize {
        self.a_scans
            .iter()
            .position(|&s| s == a_scan)
            .expect("parameter is not a unit of the entry field")
    }
}

/// Computes `<Res_N chi, psi_a>` for all characters of the table and all
/// unit parameters `a`.
///
/// The base point is the canonical relative-trace-zero `delta` on the
/// extension side (so `psi_1` is trivial on the base field), and `1/2` on
/// the base side (so `psi_1` is the canonical character of the base field).
pub fn whittaker_multiplicities(
    group: &MatrixGroup,
    classes: &ConjugacyClasses,
    table: &CharacterTable,
) -> WhittakerReport {
    assert_eq!(group.n(), 2, "Whittaker multiplicities are for rank two");
    let tower = group.tower();
    let p = tower.p();
    let side = group.side();
    assert!(
        side == Side::Ext || p > 2,
        "base-side additive characters need odd characteristic"
    );

    let delta = match side {
        Side::Ext => AddCharacter::canonical(tower).delta,
        Side::Base => tower.inv(tower.add(FFElem::ONE, FFElem::ONE)),
    };

    // The unipotent subgroup, with each element's class and above-diagonal
    // entry; base-side groups keep only base-entry matrices.
    let mut members: Vec<(u32, FFElem)> = Vec::new();
    for m in unitriangular_elements(tower, 2) {
        let x = m.get(0, 1);
        if side == Side::Base && !tower.in_base(x) {
            continue;
        }
        let idx = group
            .index_of(&m)
            .expect("unipotent subgroup not contained in the group");
        members.push((classes.class_of(idx), x));
    }
    let n_order = members.len() as u64;
    assert_eq!(group.order() % n_order, 0);
    let index = group.order() / n_order;

    let units: Vec<FFElem> = match side {
        Side::Ext => tower.units().collect(),
        Side::Base => tower.units().filter(|&u| tower.in_base(u)).collect(),
    };

    let k = table.k();
    let mut mults: Vec<Vec<u64>> = Vec::with_capacity(units.len());
    for &a in &units {
        let da = tower.mul(delta, a);
        let mut row = Vec::with_capacity(k);
        for i in 0..k {
            // acc[t] = coefficient of zeta_p^t in sum_u chi(u) psi_a(u)^-1.
            let mut acc = vec![0i64; p as usize];
            for &(c, x) in &members {
                let t = tower.abs_trace(tower.mul(da, x));
                let v = &table.values[i][c as usize];
                assert!(v.order() == 1 || v.order() == p, "unipotent value outside Z[zeta_p]");
                for &(exp, mult) in v.pairs() {
                    let slot = if v.order() == 1 { 0 } else { exp };
                    let rotated = ((slot + p - t) % p) as usize;
                    acc[rotated] += i64::from(mult);
                }
            }
            // Integrality in Z[zeta_p]: all non-constant coefficients equal.
            assert!(
                acc[1..].windows(2).all(|w| w[0] == w[1]),
                "Whittaker sum is not a rational integer"
            );
            let val = acc[0] - acc[(p - 1) as usize];
            assert!(val >= 0 && val % n_order as i64 == 0, "inner product not divisible by |N|");
            row.push((val / n_order as i64) as u64);
        }
        // Frobenius reciprocity for the induced space: the multiplicities
        // weighted by degrees exhaust the index exactly.
        let total: u64 = (0..k).map(|i| row[i] * table.degrees[i]).sum();
        assert_eq!(total, index, "generic multiplicities do not resum to [G:N]");
        mults.push(row);
    }

    let multiplicity_free = mults.iter().flatten().all(|&m| m <= 1);
    WhittakerReport {
        char_p: p,
        n_order,
        index,
        delta_scan: delta.scan_index(),
        a_scans: units.iter().map(|u| u.scan_index()).collect(),
        mults,
        multiplicity_free,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dixon::compute_character_table;
    use ff_core::FieldTower;
    use group_engine::GroupKind;
    use std::sync::Arc;

    fn report(p: u32, kind: GroupKind, side: Side) -> (CharacterTable, WhittakerReport) {
        let t = Arc::new(FieldTower::build(p, 1).unwrap());
        let g = MatrixGroup::build(kind, 2, side, t, None).unwrap();
        let cc = ConjugacyClasses::compute(&g);
        let tab = compute_character_table(&g, &cc);
        let rep = whittaker_multiplicities(&g, &cc, &tab);
        (tab, rep)
    }

    #[test]
    fn base_general_linear_generics_are_the_nonlinear_characters() {
        let (tab, rep) = report(3, GroupKind::GL, Side::Base);
        assert_eq!((rep.n_order, rep.index), (3, 16));
        assert_eq!(rep.a_scans.len(), 2);
        assert!(rep.multiplicity_free);
        for row in &rep.mults {
            for i in 0..tab.k() {
                assert_eq!(row[i], u64::from(tab.degrees[i] > 1));
            }
        }
    }

    #[test]
    fn extension_general_linear_generics() {
        let (tab, rep) = report(3, GroupKind::GL, Side::Ext);
        assert_eq!((rep.n_order, rep.index), (9, 640));
        assert_eq!(rep.a_scans.len(), 8);
        assert!(rep.multiplicity_free);
        for row in &rep.mults {
            for i in 0..tab.k() {
                assert_eq!(row[i], u64::from(tab.degrees[i] > 1));
            }
        }
        // The base point is trivial on the base subfield.
        let t = FieldTower::build(3, 1).unwrap();
        let d = FFElem::from_scan_index(rep.delta_scan);
        assert!(t.rel_trace(d).is_zero());
    }

    #[test]
    fn special_linear_rows_are_multiplicity_free() {
        let (_, rep) = report(3, GroupKind::SL, Side::Base);
        assert_eq!(rep.index, 8);
        assert!(rep.multiplicity_free);
    }
}
