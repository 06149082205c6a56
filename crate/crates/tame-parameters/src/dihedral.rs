//! Dihedral parameters: two-dimensional monomial data given by a character
//! of a quadratic extension, together with base change between floors of the
//! lattice and the self-twist / distinction twist sets attached to them.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::chars::TameChar;
use crate::norms::{compose_with_norm, galois_conj, restrict};
use crate::tower::{FieldLabel, TameTower};
use crate::TameError;

/// A dihedral parameter over `base`, induced from a character `eta` of the
/// quadratic extension `inducing`.  `regular` records whether `eta` differs
/// from its conjugate over `base`; only regular parameters correspond to
/// irreducible two-dimensional data.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DihedralParameter {
    pub base: FieldLabel,
    pub inducing: FieldLabel,
    pub eta: TameChar,
    pub regular: bool,
}

impl DihedralParameter {
    pub fn new(
        tower: &TameTower,
        base: FieldLabel,
        inducing: FieldLabel,
        eta: TameChar,
    ) -> Result<DihedralParameter, TameError> {
        tower.relation(inducing, base)?;
        if eta.field != inducing {
            return Err(TameError::WrongField(format!(
                "inducing character lives on {:?}, expected {:?}",
                eta.field, inducing
            )));
        }
        let regular = galois_conj(tower, &eta, base)? != eta;
        Ok(DihedralParameter { base, inducing, eta, regular })
    }

    /// Twist by a character of the base floor: `eta` picks up the norm
    /// pullback of `chi`.
    pub fn twist(&self, tower: &TameTower, chi: &TameChar) -> Result<DihedralParameter, TameError> {
        if chi.field != self.base {
            return Err(TameError::WrongField(format!(
                "twisting character lives on {:?}, expected {:?}",
                chi.field, self.base
            )));
        }
        let pulled = compose_with_norm(tower, chi, self.inducing)?;
        DihedralParameter::new(tower, self.base, self.inducing, self.eta.mul(tower, &pulled))
    }
}

/// Base-change a dihedral parameter over the bottom floor to one of the two
/// quadratic extensions.  The parameter must be induced from the *other*
/// quadratic extension; the result is induced from the compositum.
pub fn base_change_param(
    tower: &TameTower,
    rho: &DihedralParameter,
    to: FieldLabel,
) -> Result<DihedralParameter, TameError> {
    if rho.base != FieldLabel::F {
        return Err(TameError::WrongField(format!(
            "base change starts from the bottom floor, got {:?}",
            rho.base
        )));
    }
    if to == rho.inducing || !matches!(to, FieldLabel::E | FieldLabel::K) {
        return Err(TameError::WrongField(format!(
            "base change target {to:?} must be the quadratic floor other than {:?}",
            rho.inducing
        )));
    }
    let eta_up = compose_with_norm(tower, &rho.eta, FieldLabel::L)?;
    DihedralParameter::new(tower, to, FieldLabel::L, eta_up)
}

/// The three twist sets of a regular dihedral parameter over `E`.
///
/// `z` is the self-twist group: characters `μ` of `E*` with
/// `η · (μ ∘ N) ∈ {η, η^γ}`.  `y` cuts `z` down to the characters trivial on
/// the bottom floor, and `yprime` to the characters that factor through the
/// norm from `E` to the bottom floor.
#[derive(Clone, Debug, Serialize)]
pub struct DihedralTwistSets {
    pub z: Vec<TameChar>,
    pub y: Vec<TameChar>,
    pub yprime: Vec<TameChar>,
}

pub fn dihedral_twist_sets(
    tower: &TameTower,
    rho: &DihedralParameter,
) -> Result<DihedralTwistSets, TameError> {
    if rho.base != FieldLabel::E {
        return Err(TameError::WrongField(format!(
            "twist sets are computed over E, got {:?}",
            rho.base
        )));
    }
    if !rho.regular {
        return Err(TameError::NotRegular);
    }
    let eta = rho.eta;
    let eta_conj = galois_conj(tower, &eta, rho.base)?;
    let delta = eta_conj.mul(tower, &eta.inverse(tower));
    assert!(!delta.is_trivial(), "regular parameter with trivial conjugate ratio");

    let norm_image: BTreeSet<TameChar> = TameChar::all(tower, FieldLabel::F)
        .into_iter()
        .map(|chi| compose_with_norm(tower, &chi, FieldLabel::E).unwrap())
        .collect();

    let mut z = Vec::new();
    let mut y = Vec::new();
    let mut yprime = Vec::new();
    for mu in TameChar::all(tower, FieldLabel::E) {
        let pulled = compose_with_norm(tower, &mu, rho.inducing)?;
        if !(pulled.is_trivial() || pulled == delta) {
            continue;
        }
        // Self-twists of two-dimensional data are quadratic: the determinant
        // of the parameter forces it.
        assert!(mu.mul(tower, &mu).is_trivial(), "self-twist of order > 2");
        z.push(mu);
        if restrict(tower, &mu, FieldLabel::F)?.is_trivial() {
            y.push(mu);
        }
        if norm_image.contains(&mu) {
            yprime.push(mu);
        }
    }
    for set in [&z, &y, &yprime] {
        assert!(set.contains(&TameChar::trivial(FieldLabel::E)));
        for a in set.iter() {
            for b in set.iter() {
                assert!(z.contains(&a.mul(tower, b)), "twist set not closed");
            }
        }
    }
    Ok(DihedralTwistSets { z, y, yprime })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norms::omega;
    use crate::tower::Orientation;

    fn q11() -> TameTower {
        TameTower::build(11, None, Orientation::default()).unwrap()
    }

    #[test]
    fn the_rank_one_example_chain_reproduces_the_worked_numbers() {
        let t = q11();
        let eta = TameChar::new(&t, FieldLabel::K, 0, 10);
        let rho = DihedralParameter::new(&t, FieldLabel::F, FieldLabel::K, eta).unwrap();
        assert!(rho.regular);
        assert_eq!(eta.order(&t), 12);

        let bc = base_change_param(&t, &rho, FieldLabel::E).unwrap();
        assert_eq!(bc.eta, TameChar::new(&t, FieldLabel::L, 0, 20));
        assert!(bc.regular);

        let sets = dihedral_twist_sets(&t, &bc).unwrap();
        let w = omega(&t, FieldLabel::L, FieldLabel::E).unwrap();
        assert_eq!(w, TameChar::new(&t, FieldLabel::E, 60, 0));
        assert_eq!(sets.z, vec![TameChar::trivial(FieldLabel::E), w]);
        assert_eq!(sets.y, sets.z);
        assert_eq!(sets.yprime, sets.z);
        // The nontrivial element of yprime really is a norm pullback.
        let witness = TameChar::new(&t, FieldLabel::F, 0, 5);
        assert_eq!(compose_with_norm(&t, &witness, FieldLabel::E).unwrap(), w);
    }

    #[test]
    fn a_trivial_inducing_character_base_changes_to_an_irregular_parameter() {
        let t = q11();
        let eta = TameChar::trivial(FieldLabel::K);
        let rho = DihedralParameter::new(&t, FieldLabel::F, FieldLabel::K, eta).unwrap();
        assert!(!rho.regular);
        let bc = base_change_param(&t, &rho, FieldLabel::E).unwrap();
        assert!(bc.eta.is_trivial());
        assert!(!bc.regular);
        assert!(matches!(dihedral_twist_sets(&t, &bc), Err(TameError::NotRegular)));
    }

    #[test]
    fn base_change_commutes_with_galois_conjugation() {
        let t = q11();
        for eta in TameChar::all(&t, FieldLabel::K).into_iter().step_by(13) {
            let rho = DihedralParameter::new(&t, FieldLabel::F, FieldLabel::K, eta).unwrap();
            let conj_first = DihedralParameter::new(
                &t,
                FieldLabel::F,
                FieldLabel::K,
                galois_conj(&t, &eta, FieldLabel::F).unwrap(),
            )
            .unwrap();
            let lhs = base_change_param(&t, &conj_first, FieldLabel::E).unwrap().eta;
            let rhs = galois_conj(
                &t,
                &base_change_param(&t, &rho, FieldLabel::E).unwrap().eta,
                FieldLabel::E,
            );
            // The Frobenius lift acting on the compositum restricts to the
            // conjugation downstairs, so the two orders of operation agree.
            assert_eq!(lhs, rhs.unwrap(), "conjugation does not commute at {eta:?}");
        }
    }

    #[test]
    fn base_change_turns_base_twists_into_norm_twists() {
        let t = q11();
        let eta = TameChar::new(&t, FieldLabel::K, 7, 10);
        let rho = DihedralParameter::new(&t, FieldLabel::F, FieldLabel::K, eta).unwrap();
        for chi in TameChar::all(&t, FieldLabel::F).into_iter().step_by(19) {
            let lhs = base_change_param(&t, &rho.twist(&t, &chi).unwrap(), FieldLabel::E)
                .unwrap()
                .eta;
            let bc = base_change_param(&t, &rho, FieldLabel::E).unwrap();
            let pulled = compose_with_norm(&t, &chi, FieldLabel::E).unwrap();
            let rhs = bc
                .eta
                .mul(&t, &compose_with_norm(&t, &pulled, FieldLabel::L).unwrap());
            assert_eq!(lhs, rhs, "twist compatibility fails at {chi:?}");
        }
    }

    #[test]
    fn mismatched_floors_are_rejected() {
        let t = q11();
        let eta = TameChar::new(&t, FieldLabel::K, 0, 10);
        assert!(DihedralParameter::new(&t, FieldLabel::F, FieldLabel::E, eta).is_err());
        let rho = DihedralParameter::new(&t, FieldLabel::F, FieldLabel::K, eta).unwrap();
        assert!(base_change_param(&t, &rho, FieldLabel::K).is_err());
        assert!(base_change_param(&t, &rho, FieldLabel::L).is_err());
        assert!(rho.twist(&t, &TameChar::trivial(FieldLabel::E)).is_err());
    }
}
