//! Whole-pair scans: per-irreducible distinction dimensions plus the
//! criterion checks (multiplicity one, duality/Galois laws, base-change
//! detection, multiplicity-freeness of the full restriction).

use serde::{Deserialize, Serialize};

use char_engine::{dual_character, galois_character};

use crate::homdim::elementwise_dims;
use crate::lab::{GroupBundle, PairContext};

/// Which checks a scan should run (beyond the dimensions themselves).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Criterion {
    /// Every `dim Hom_H(pi, 1)` is at most one.
    Gelfand,
    /// `dim != 0  <=>  galois twist == dual` (base-field inner form).
    GowSigmaDual,
    /// `dim != 0  <=>  galois twist == self` (unitary inner form).
    Shintani,
    /// Every entry of the full restriction matrix is at most one.
    TadicMultFree,
    /// Alias for the multiplicity-one bound in the determinant-one pair.
    Thm11Bound,
}

/// One row per irreducible of the big group.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScanRow {
    pub char_id: usize,
    pub degree: u64,
    /// `dim Hom_H(pi, 1)` via class-weighted inner products.
    pub dim_trivial: u64,
    /// The same dimension recomputed element-by-element over `H`.
    pub dim_oracle: u64,
    /// Dimensions against every linear character of `H` (trivial first).
    pub linear_dims: Vec<u64>,
    /// Galois twist equals dual (present when requested).
    pub sigma_eq_dual: Option<bool>,
    /// Galois twist equals self (present when requested).
    pub sigma_fixed: Option<bool>,
}

/// Scan outcome for one (G, H) pair.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DistinctionReport {
    pub pair: String,
    pub group_order: u64,
    pub subgroup_order: u64,
    pub rows: Vec<ScanRow>,
    pub max_dim: u64,
    /// Oracle agreement holds for every row (always computed).
    pub oracle_ok: bool,
    pub gelfand_ok: Option<bool>,
    /// Distinguished <=> sigma-self-dual, as a global verdict.
    pub gow_ok: Option<bool>,
    /// Distinguished <=> Galois-fixed (base-change image), global verdict.
    pub shintani_ok: Option<bool>,
    /// Full restriction matrix multiplicity-free, global verdict.
    pub tadic_multfree_ok: Option<bool>,
}

impl DistinctionReport {
    /// True when every requested criterion that was run passed.
    pub fn verdict(&self) -> bool {
        self.oracle_ok
            && self.gelfand_ok.unwrap_or(true)
            && self.gow_ok.unwrap_or(true)
            && self.shintani_ok.unwrap_or(true)
            && self.tadic_multfree_ok.unwrap_or(true)
    }
}

/// Runs the scan.  The trivial-target dimension of every irreducible is
/// always computed twice (bucketed and element-by-element) and must agree.
pub fn pair_scan(
    g: &GroupBundle,
    h: &GroupBundle,
    pc: &PairContext,
    criteria: &[Criterion],
) -> DistinctionReport {
    let kg = g.k();
    let triv = h.table.trivial_index();
    let linear = h.table.linear_indices();
    let oracle = elementwise_dims(g, h, &pc.embedding, triv);

    let want = |c: Criterion| criteria.contains(&c);
    let mut rows = Vec::with_capacity(kg);
    let mut oracle_ok = true;
    for i in 0..kg {
        let dim = pc.restriction[i][triv];
        if oracle[i] != dim {
            oracle_ok = false;
        }
        let sigma_eq_dual = (want(Criterion::GowSigmaDual)).then(|| {
            dual_character(&g.table, i) == galois_character(&g.table, i)
        });
        let sigma_fixed =
            (want(Criterion::Shintani)).then(|| galois_character(&g.table, i) == i);
        rows.push(ScanRow {
            char_id: i,
            degree: g.table.degrees[i],
            dim_trivial: dim,
            dim_oracle: oracle[i],
            linear_dims: linear.iter().map(|&j| pc.restriction[i][j]).collect(),
            sigma_eq_dual,
            sigma_fixed,
        });
    }

    let max_dim = rows.iter().map(|r| r.dim_trivial).max().unwrap_or(0);
    let gelfand_ok = (want(Criterion::Gelfand) || want(Criterion::Thm11Bound))
        .then(|| max_dim <= 1);
    let gow_ok = want(Criterion::GowSigmaDual)
        .then(|| rows.iter().all(|r| (r.dim_trivial != 0) == r.sigma_eq_dual.unwrap()));
    let shintani_ok = want(Criterion::Shintani)
        .then(|| rows.iter().all(|r| (r.dim_trivial != 0) == r.sigma_fixed.unwrap()));
    let tadic_multfree_ok = want(Criterion::TadicMultFree)
        .then(|| pc.restriction.iter().flatten().all(|&m| m <= 1));

    DistinctionReport {
        pair: format!("{}|{}", g.table.tag.slug(), h.table.tag.slug()),
        group_order: g.group.order(),
        subgroup_order: h.group.order(),
        rows,
        max_dim,
        oracle_ok,
        gelfand_ok,
        gow_ok,
        shintani_ok,
        tadic_multfree_ok,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ff_core::{FieldTower, Side};
    use group_engine::GroupKind;
    use std::sync::Arc;

    #[test]
    fn base_field_pair_is_gelfand_and_gow_characterized() {
        let t = Arc::new(FieldTower::build(3, 1).unwrap());
        let g = GroupBundle::build(GroupKind::GL, 2, Side::Ext, Arc::clone(&t), None).unwrap();
        let h = GroupBundle::build(GroupKind::GL, 2, Side::Base, t, None).unwrap();
        let pc = PairContext::new(&g, &h).unwrap();
        let report = pair_scan(
            &g,
            &h,
            &pc,
            &[Criterion::Gelfand, Criterion::GowSigmaDual],
        );
        assert_eq!(report.rows.len(), 80);
        assert!(report.oracle_ok);
        assert_eq!(report.gelfand_ok, Some(true));
        assert_eq!(report.gow_ok, Some(true));
        // The distinguished count: one irreducible per sigma-self-dual class.
        let distinguished = report.rows.iter().filter(|r| r.dim_trivial != 0).count();
        assert!(distinguished > 1);
        assert_eq!(
            distinguished,
            report.rows.iter().filter(|r| r.sigma_eq_dual.unwrap()).count()
        );
    }

    #[test]
    fn unitary_pair_matches_base_change_detection() {
        let t = Arc::new(FieldTower::build(3, 1).unwrap());
        let g = GroupBundle::build(GroupKind::GL, 2, Side::Ext, Arc::clone(&t), None).unwrap();
        let h = GroupBundle::build(GroupKind::U, 2, Side::Ext, t, None).unwrap();
        let pc = PairContext::new(&g, &h).unwrap();
        let report = pair_scan(&g, &h, &pc, &[Criterion::Gelfand, Criterion::Shintani]);
        assert!(report.oracle_ok);
        assert_eq!(report.gelfand_ok, Some(true));
        assert_eq!(report.shintani_ok, Some(true));
        // Galois-fixed irreducibles are counted by Galois-stable classes:
        // two central, two quasi-central, four split semisimple, and no
        // elliptic ones (the eigenvalue pair {t, t^9} can never be
        // Frobenius-stable because mu_6 meets F_81 only in mu_2).
        let fixed = report.rows.iter().filter(|r| r.sigma_fixed.unwrap()).count();
        assert_eq!(fixed, 8);
    }

    #[test]
    fn cross_kind_pair_honestly_fails_multiplicity_one() {
        // GL over the extension restricted to the tiny determinant-one
        // base subgroup is NOT a Gelfand pair; the scan must say so.
        let t = Arc::new(FieldTower::build(3, 1).unwrap());
        let g = GroupBundle::build(GroupKind::GL, 2, Side::Ext, Arc::clone(&t), None).unwrap();
        let h = GroupBundle::build(GroupKind::SL, 2, Side::Base, t, None).unwrap();
        let pc = PairContext::new(&g, &h).unwrap();
        let report = pair_scan(&g, &h, &pc, &[Criterion::Gelfand]);
        assert!(report.oracle_ok);
        assert_eq!(report.gelfand_ok, Some(false));
        assert!(report.max_dim >= 2, "expected a genuine multiplicity failure");
    }
}
