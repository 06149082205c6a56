//! Packet decomposition: restricting one irreducible of the extension
//! general linear group to the determinant-restricted subgroup and to the
//! special linear subgroup, labelling constituents by genericity, and
//! checking the Clifford-theoretic bookkeeping that the q invariant rests
//! on.

use serde::{Deserialize, Serialize};
use std::sync::Arc;

use char_engine::{whittaker_multiplicities, WhittakerReport};
use ff_core::{FFElem, FieldTower, MultCharacter, Side};
use group_engine::GroupKind;

use crate::homdim::resolve_linear_target;
use crate::lab::{GroupBundle, PairContext};
use crate::twist::{q_value, twist_sets, QValue, TwistSets};
use crate::DistinctionError;

/// One constituent of the restriction to the special linear subgroup.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SlConstituent {
    pub sl_char: usize,
    pub degree: u64,
    /// `dim Hom(constituent, 1)` against the small-field special linear
    /// subgroup.
    pub hom_dim_small_sl: u64,
    /// Unit parameters `a` (scan indices) for which the constituent is
    /// `psi_a`-generic.
    pub generic_a_scans: Vec<u32>,
}

/// One constituent of the restriction to the determinant-restricted
/// subgroup.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PlusConstituent {
    pub plus_char: usize,
    pub degree: u64,
    /// Whittaker dimension with respect to the reference character psi.
    pub psi_whittaker_dim: u64,
    /// Positions (into `sl_constituents`) of its special linear pieces.
    pub sl_members: Vec<usize>,
}

/// Full packet picture for one irreducible of the extension group.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PacketReport {
    pub char_id: usize,
    pub degree: u64,
    pub twists: TwistSets,
    pub q: QValue,
    pub sl_constituents: Vec<SlConstituent>,
    pub plus_constituents: Vec<PlusConstituent>,
    /// Position (into `plus_constituents`) of the unique psi-generic
    /// constituent; absent exactly for the one-dimensional characters.
    pub generic_plus: Option<usize>,
    /// `dim Hom(pi, 1)` against the small-field special linear subgroup.
    pub hom_dim_small_sl_total: u64,
    /// Distinction dimensions against every character of the small field
    /// composed with the determinant, ascending by exponent.
    pub linear_dims_small_gl: Vec<u64>,
    /// Both restrictions to the intermediate subgroups are
    /// multiplicity-free (the abort path fires otherwise).
    pub restriction_multiplicity_free: bool,
    /// Sum over chi of the linear dims equals |X| equals the special
    /// linear total, with every summand at most one.
    pub clifford_ok: bool,
    /// Constituents of each fixed determinant-restricted piece have the
    /// same distinction dimension.
    pub prop42_ok: bool,
    /// q equals the summed distinction dimensions over the special linear
    /// pieces of the generic constituent (generic irreducibles only).
    pub q_oracle_ok: Option<bool>,
}

/// The five groups and six restriction matrices a packet needs.
pub struct PacketLab {
    pub g: GroupBundle,
    pub gp: GroupBundle,
    pub sl: GroupBundle,
    pub h_gl: GroupBundle,
    pub h_sl: GroupBundle,
    pub pc_g_gp: PairContext,
    pub pc_g_sl: PairContext,
    pub pc_gp_sl: PairContext,
    pub pc_g_hgl: PairContext,
    pub pc_g_hsl: PairContext,
    pub pc_sl_hsl: PairContext,
    pub wh_gp: WhittakerReport,
    pub wh_sl: WhittakerReport,
}

fn mat_mul(a: &[Vec<u64>], b: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let cols = b[0].len();
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| row.iter().zip(b).map(|(&m, brow)| m * brow[j]).sum())
                .collect()
        })
        .collect()
}

/// Asserts the first restriction to be multiplicity-free, with the pair
/// name in the diagnostic.
fn require_multiplicity_free(pair: &str, m: &[Vec<u64>]) -> Result<(), DistinctionError> {
    for (i, row) in m.iter().enumerate() {
        for (j, &mult) in row.iter().enumerate() {
            if mult > 1 {
                return Err(DistinctionError::Multiplicity {
                    pair: pair.to_string(),
                    char_id: i,
                    constituent: j,
                    mult,
                });
            }
        }
    }
    Ok(())
}

/// Checks that Whittaker rows are constant on square classes of the
/// parameter (conjugation by diagonal elements of the group).
fn assert_square_class_constancy(wh: &WhittakerReport) {
    let pos_of = |parity: u32| -> Vec<usize> {
        wh.a_scans
            .iter()
            .enumerate()
            .filter(|(_, &s)| FFElem::from_scan_index(s).log().unwrap() % 2 == parity)
            .map(|(pos, _)| pos)
            .collect()
    };
    for parity in 0..2 {
        let ps = pos_of(parity);
        for w in ps.windows(2) {
            assert_eq!(
                wh.mults[w[0]], wh.mults[w[1]],
                "Whittaker rows must be constant on square classes"
            );
        }
    }
}

impl PacketLab {
    /// Builds the five bundles from scratch.
    pub fn build(
        tower: &Arc<FieldTower>,
        ceiling: Option<u64>,
    ) -> Result<PacketLab, DistinctionError> {
        let g = GroupBundle::build(GroupKind::GL, 2, Side::Ext, Arc::clone(tower), ceiling)?;
        let gp = GroupBundle::build(GroupKind::GLplus, 2, Side::Ext, Arc::clone(tower), ceiling)?;
        let sl = GroupBundle::build(GroupKind::SL, 2, Side::Ext, Arc::clone(tower), ceiling)?;
        let h_gl = GroupBundle::build(GroupKind::GL, 2, Side::Base, Arc::clone(tower), ceiling)?;
        let h_sl = GroupBundle::build(GroupKind::SL, 2, Side::Base, Arc::clone(tower), ceiling)?;
        PacketLab::from_bundles(g, gp, sl, h_gl, h_sl)
    }

    /// Assembles the lab from prebuilt bundles (possibly loaded from
    /// cache), computing the restriction matrices and Whittaker data and
    /// enforcing the multiplicity-free invariant.
    pub fn from_bundles(
        g: GroupBundle,
        gp: GroupBundle,
        sl: GroupBundle,
        h_gl: GroupBundle,
        h_sl: GroupBundle,
    ) -> Result<PacketLab, DistinctionError> {
        let shape = [
            (&g, GroupKind::GL, Side::Ext),
            (&gp, GroupKind::GLplus, Side::Ext),
            (&sl, GroupKind::SL, Side::Ext),
            (&h_gl, GroupKind::GL, Side::Base),
            (&h_sl, GroupKind::SL, Side::Base),
        ];
        for (b, kind, side) in shape {
            if b.group.kind() != kind || b.group.side() != side || b.group.n() != 2 {
                return Err(DistinctionError::Bundle(format!(
                    "packet lab expects rank-two {} on side {:?}, got {}",
                    kind.name(),
                    side,
                    b.table.tag.slug()
                )));
            }
            if b.group.tower().p() != g.group.tower().p()
                || b.group.tower().f() != g.group.tower().f()
            {
                return Err(DistinctionError::Bundle(
                    "packet lab bundles live over different towers".into(),
                ));
            }
        }

        let pc_g_gp = PairContext::new(&g, &gp)?;
        let pc_g_sl = PairContext::new(&g, &sl)?;
        let pc_gp_sl = PairContext::new(&gp, &sl)?;
        let pc_g_hgl = PairContext::new(&g, &h_gl)?;
        let pc_g_hsl = PairContext::new(&g, &h_sl)?;
        let pc_sl_hsl = PairContext::new(&sl, &h_sl)?;

        require_multiplicity_free("g|gp", &pc_g_gp.restriction)?;
        require_multiplicity_free("g|sl", &pc_g_sl.restriction)?;
        require_multiplicity_free("gp|sl", &pc_gp_sl.restriction)?;

        // Restriction in stages must agree with direct restriction.
        assert_eq!(
            pc_g_sl.restriction,
            mat_mul(&pc_g_gp.restriction, &pc_gp_sl.restriction),
            "stagewise restriction through the determinant-restricted subgroup"
        );
        assert_eq!(
            pc_g_hsl.restriction,
            mat_mul(&pc_g_sl.restriction, &pc_sl_hsl.restriction),
            "stagewise restriction through the extension special linear group"
        );

        let wh_gp = whittaker_multiplicities(&gp.group, &gp.classes, &gp.table);
        let wh_sl = whittaker_multiplicities(&sl.group, &sl.classes, &sl.table);
        assert!(wh_gp.multiplicity_free && wh_sl.multiplicity_free);
        assert_square_class_constancy(&wh_gp);
        assert_square_class_constancy(&wh_sl);

        Ok(PacketLab {
            g,
            gp,
            sl,
            h_gl,
            h_sl,
            pc_g_gp,
            pc_g_sl,
            pc_gp_sl,
            pc_g_hgl,
            pc_g_hsl,
            pc_sl_hsl,
            wh_gp,
            wh_sl,
        })
    }

    /// Decomposes irreducible `i` and runs the packet checks.
    pub fn packet(&self, i: usize) -> Result<PacketReport, DistinctionError> {
        let k = self.g.k();
        if i >= k {
            return Err(DistinctionError::BadCharacter { id: i, k });
        }
        let t = self.g.group.tower();
        let degree = self.g.table.degrees[i];
        let generic = degree > 1;

        let twists = twist_sets(&self.g, &self.h_gl, &self.pc_g_hgl, i);
        let q = q_value(&self.g, &twists);

        // Constituents over the extension special linear subgroup.
        let triv_hsl = self.h_sl.table.trivial_index();
        let mut sl_constituents = Vec::new();
        for j in 0..self.sl.k() {
            if self.pc_g_sl.restriction[i][j] == 0 {
                continue;
            }
            let generic_a_scans: Vec<u32> = self
                .wh_sl
                .a_scans
                .iter()
                .enumerate()
                .filter(|&(pos, _)| self.wh_sl.mults[pos][j] == 1)
                .map(|(_, &s)| s)
                .collect();
            sl_constituents.push(SlConstituent {
                sl_char: j,
                degree: self.sl.table.degrees[j],
                hom_dim_small_sl: self.pc_sl_hsl.restriction[j][triv_hsl],
                generic_a_scans,
            });
        }
        assert_eq!(
            sl_constituents.len(),
            twists.z.len(),
            "constituent count over the special linear subgroup must equal |Z|"
        );
        let d_sl = sl_constituents[0].degree;
        assert!(sl_constituents.iter().all(|c| c.degree == d_sl));
        assert_eq!(sl_constituents.len() as u64 * d_sl, degree);

        // Restriction additivity for the small special linear target.
        let hom_dim_small_sl_total = self.pc_g_hsl.restriction[i][triv_hsl];
        assert_eq!(
            sl_constituents.iter().map(|c| c.hom_dim_small_sl).sum::<u64>(),
            hom_dim_small_sl_total
        );

        // Each reference parameter is generic in exactly one constituent
        // of a generic irreducible, and in none of a linear one.
        let mut covered: Vec<u32> = sl_constituents
            .iter()
            .flat_map(|c| c.generic_a_scans.iter().copied())
            .collect();
        covered.sort_unstable();
        if generic {
            let mut all: Vec<u32> = self.wh_sl.a_scans.clone();
            all.sort_unstable();
            assert_eq!(covered, all, "generic parameters must partition the units");
            assert!(sl_constituents.iter().all(|c| !c.generic_a_scans.is_empty()));
        } else {
            assert!(covered.is_empty());
        }

        // Constituents over the determinant-restricted subgroup.
        let psi_pos = self.wh_gp.a_position(FFElem::ONE.scan_index());
        let mut plus_constituents = Vec::new();
        for rho in 0..self.gp.k() {
            if self.pc_g_gp.restriction[i][rho] == 0 {
                continue;
            }
            let sl_members: Vec<usize> = sl_constituents
                .iter()
                .enumerate()
                .filter(|(_, c)| self.pc_gp_sl.restriction[rho][c.sl_char] == 1)
                .map(|(pos, _)| pos)
                .collect();
            assert!(!sl_members.is_empty());
            plus_constituents.push(PlusConstituent {
                plus_char: rho,
                degree: self.gp.table.degrees[rho],
                psi_whittaker_dim: self.wh_gp.mults[psi_pos][rho],
                sl_members,
            });
        }
        assert_eq!(
            plus_constituents.len(),
            twists.y.len(),
            "constituent count over the determinant-restricted subgroup must equal |Y|"
        );
        let d_gp = plus_constituents[0].degree;
        assert!(plus_constituents.iter().all(|c| c.degree == d_gp));
        assert_eq!(plus_constituents.len() as u64 * d_gp, degree);

        // The stagewise identity makes the membership lists a partition.
        let mut member_count = vec![0u32; sl_constituents.len()];
        for c in &plus_constituents {
            for &m in &c.sl_members {
                member_count[m] += 1;
            }
        }
        assert!(member_count.iter().all(|&c| c == 1));

        // Exactly one psi-generic constituent for generic irreducibles.
        let generic_positions: Vec<usize> = plus_constituents
            .iter()
            .enumerate()
            .filter(|(_, c)| c.psi_whittaker_dim == 1)
            .map(|(pos, _)| pos)
            .collect();
        assert_eq!(generic_positions.len(), usize::from(generic));
        let generic_plus = generic_positions.first().copied();

        // Prop-4.2-style equidistribution within each constituent.
        let prop42_ok = plus_constituents.iter().all(|c| {
            let dims: Vec<u64> = c
                .sl_members
                .iter()
                .map(|&m| sl_constituents[m].hom_dim_small_sl)
                .collect();
            dims.windows(2).all(|w| w[0] == w[1])
        });

        // Clifford identity through the small general linear subgroup.
        let linear_dims_small_gl: Vec<u64> = MultCharacter::all(t, Side::Base)
            .iter()
            .map(|chi| self.pc_g_hgl.restriction[i][resolve_linear_target(&self.h_gl, chi)])
            .collect();
        let linear_sum: u64 = linear_dims_small_gl.iter().sum();
        let clifford_ok = linear_dims_small_gl.iter().all(|&d| d <= 1)
            && linear_sum == twists.x.len() as u64
            && linear_sum == hom_dim_small_sl_total;

        // The q invariant against its brute-force meaning.
        let q_oracle_ok = generic.then(|| {
            let sum: u64 = plus_constituents[generic_plus.unwrap()]
                .sl_members
                .iter()
                .map(|&m| sl_constituents[m].hom_dim_small_sl)
                .sum();
            q.integer() == Some(sum)
        });

        Ok(PacketReport {
            char_id: i,
            degree,
            twists,
            q,
            sl_constituents,
            plus_constituents,
            generic_plus,
            hom_dim_small_sl_total,
            linear_dims_small_gl,
            restriction_multiplicity_free: true,
            clifford_ok,
            prop42_ok,
            q_oracle_ok,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lab() -> PacketLab {
        let t = Arc::new(FieldTower::build(3, 1).unwrap());
        PacketLab::build(&t, None).unwrap()
    }

    #[test]
    fn steinberg_packet_is_a_generic_singleton() {
        let lab = lab();
        // The nine-dimensional characters restrict irreducibly; pick the
        // distinguished one (Steinberg itself).
        let st = (0..lab.g.k())
            .find(|&i| {
                lab.g.table.degrees[i] == 9
                    && lab.pc_g_hgl.restriction[i][lab.h_gl.table.trivial_index()] == 1
            })
            .unwrap();
        let report = lab.packet(st).unwrap();
        assert_eq!(report.sl_constituents.len(), 1);
        assert_eq!(report.plus_constituents.len(), 1);
        assert_eq!(report.generic_plus, Some(0));
        assert!(report.clifford_ok && report.prop42_ok);
        assert_eq!(report.q_oracle_ok, Some(true));
        // A singleton generic constituent is generic for every parameter.
        assert_eq!(report.sl_constituents[0].generic_a_scans.len(), 8);
    }

    #[test]
    fn split_packets_have_two_halves_with_split_genericity() {
        let lab = lab();
        let mut split = 0;
        for i in 0..lab.g.k() {
            let report = lab.packet(i).unwrap();
            if report.twists.z.len() != 2 {
                continue;
            }
            split += 1;
            assert_eq!(report.sl_constituents.len(), 2);
            assert_eq!(report.plus_constituents.len(), 2);
            // Each half is generic for exactly one square class.
            for c in &report.sl_constituents {
                assert_eq!(c.generic_a_scans.len(), 4);
                let parities: Vec<u32> = c
                    .generic_a_scans
                    .iter()
                    .map(|&s| FFElem::from_scan_index(s).log().unwrap() % 2)
                    .collect();
                assert!(parities.windows(2).all(|w| w[0] == w[1]));
            }
        }
        assert_eq!(split, 8);
    }

    #[test]
    fn every_packet_passes_the_bookkeeping_checks() {
        let lab = lab();
        for i in 0..lab.g.k() {
            let report = lab.packet(i).unwrap();
            assert!(report.clifford_ok, "Clifford identity failed at {i}");
            assert!(report.prop42_ok, "equidistribution failed at {i}");
            assert!(report.q_oracle_ok.unwrap_or(true), "q oracle failed at {i}");
            assert!(report.restriction_multiplicity_free);
        }
    }

    #[test]
    fn bad_character_index_is_rejected() {
        let lab = lab();
        match lab.packet(999) {
            Err(DistinctionError::BadCharacter { id: 999, k: 80 }) => {}
            other => panic!("expected a bad-character error, got {other:?}"),
        }
    }
}
