//! Norm, restriction, and Galois transfer maps on tame characters, together
//! with the quadratic class characters attached to each step of the lattice.
//!
//! Conventions, fixed once for the whole crate: in an unramified quadratic
//! step the two floors share a uniformizer, the norm sends it to its square,
//! and the Galois action is the residue Frobenius.  In a ramified quadratic
//! step the upper uniformizer squares to the lower one, the norm sends it to
//! minus the lower uniformizer, the two floors share Teichmüller units, and
//! the Galois action negates the uniformizer.  The class character `omega`
//! of a step is always the character of the lower floor cutting out the norm
//! subgroup; in the ramified case this forces a sign on the uniformizer
//! whenever `(R - 1) / 2` is odd.

use crate::chars::TameChar;
use crate::tower::{FieldLabel, Relation, TameTower};
use crate::TameError;

/// Pull a character of `lower` up to `upper` through the norm map,
/// `χ ↦ χ ∘ N`.
pub fn compose_with_norm(
    tower: &TameTower,
    chi: &TameChar,
    upper: FieldLabel,
) -> Result<TameChar, TameError> {
    let lower = chi.field;
    let rel = tower.relation(upper, lower)?;
    let m = tower.modulus();
    let r_low = tower.residue(lower);
    match rel {
        Relation::Unramified => Ok(TameChar::new(
            tower,
            upper,
            2 * chi.u,
            chi.r * (r_low + 1),
        )),
        Relation::Ramified => Ok(TameChar::new(
            tower,
            upper,
            chi.u + (chi.r % 2) * (m / 2),
            2 * chi.r,
        )),
    }
}

/// Restrict a character of `upper` down to `lower`.
pub fn restrict(
    tower: &TameTower,
    chi: &TameChar,
    lower: FieldLabel,
) -> Result<TameChar, TameError> {
    let upper = chi.field;
    let rel = tower.relation(upper, lower)?;
    match rel {
        Relation::Unramified => Ok(TameChar::new(tower, lower, chi.u, chi.r)),
        Relation::Ramified => Ok(TameChar::new(tower, lower, 2 * chi.u, chi.r)),
    }
}

/// Apply the nontrivial element of the Galois group of `upper` over `lower`.
pub fn galois_conj(
    tower: &TameTower,
    chi: &TameChar,
    lower: FieldLabel,
) -> Result<TameChar, TameError> {
    let upper = chi.field;
    let rel = tower.relation(upper, lower)?;
    let m = tower.modulus();
    let r_low = tower.residue(lower);
    match rel {
        Relation::Unramified => Ok(TameChar::new(tower, upper, chi.u, chi.r * r_low)),
        Relation::Ramified => Ok(TameChar::new(
            tower,
            upper,
            chi.u + (chi.r % 2) * (m / 2),
            chi.r,
        )),
    }
}

/// The quadratic class character of the step `upper/lower`: the character of
/// the lower floor whose kernel is exactly the norm subgroup.
pub fn omega(
    tower: &TameTower,
    upper: FieldLabel,
    lower: FieldLabel,
) -> Result<TameChar, TameError> {
    let rel = tower.relation(upper, lower)?;
    let m = tower.modulus();
    match rel {
        Relation::Unramified => Ok(TameChar::new(tower, lower, m / 2, 0)),
        Relation::Ramified => {
            let half = (tower.residue(lower) - 1) / 2;
            Ok(TameChar::new(tower, lower, (half % 2) * (m / 2), half))
        }
    }
}

/// Pull a character of the base `F` all the way up to `top` through norms.
/// For `top = L` the route through `E` is taken; the route through `K` gives
/// the same answer (norm transitivity), which the tests pin down.
pub fn norm_to_base(
    tower: &TameTower,
    chi: &TameChar,
    top: FieldLabel,
) -> Result<TameChar, TameError> {
    assert_eq!(chi.field, FieldLabel::F, "norm_to_base starts from the base floor");
    match top {
        FieldLabel::F => Ok(*chi),
        FieldLabel::E | FieldLabel::K => compose_with_norm(tower, chi, top),
        FieldLabel::L => {
            let via_e = compose_with_norm(tower, chi, FieldLabel::E)?;
            compose_with_norm(tower, &via_e, FieldLabel::L)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tower::Orientation;

    fn q11() -> TameTower {
        TameTower::build(11, None, Orientation::default()).unwrap()
    }

    #[test]
    fn norm_transfer_is_a_homomorphism_on_every_step() {
        let t = q11();
        for (upper, lower) in t.steps() {
            let all = TameChar::all(&t, lower);
            for (i, a) in all.iter().enumerate().step_by(17) {
                for b in all.iter().skip(i % 5).step_by(23) {
                    let lhs = compose_with_norm(&t, &a.mul(&t, b), upper).unwrap();
                    let rhs = compose_with_norm(&t, a, upper)
                        .unwrap()
                        .mul(&t, &compose_with_norm(&t, b, upper).unwrap());
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn pulling_to_the_compositum_is_path_independent() {
        let t = q11();
        for chi in TameChar::all(&t, FieldLabel::F) {
            let via_e = compose_with_norm(
                &t,
                &compose_with_norm(&t, &chi, FieldLabel::E).unwrap(),
                FieldLabel::L,
            )
            .unwrap();
            let via_k = compose_with_norm(
                &t,
                &compose_with_norm(&t, &chi, FieldLabel::K).unwrap(),
                FieldLabel::L,
            )
            .unwrap();
            assert_eq!(via_e, via_k, "norm routes disagree at {chi:?}");
            assert_eq!(via_e, norm_to_base(&t, &chi, FieldLabel::L).unwrap());
        }
    }

    #[test]
    fn restriction_to_the_base_is_path_independent() {
        let t = q11();
        for chi in TameChar::all(&t, FieldLabel::L).into_iter().step_by(7) {
            let via_e = restrict(&t, &restrict(&t, &chi, FieldLabel::E).unwrap(), FieldLabel::F)
                .unwrap();
            let via_k = restrict(&t, &restrict(&t, &chi, FieldLabel::K).unwrap(), FieldLabel::F)
                .unwrap();
            assert_eq!(via_e, via_k, "restriction routes disagree at {chi:?}");
        }
    }

    #[test]
    fn the_kernel_of_norm_transfer_is_the_class_character_pair() {
        for orientation in [Orientation::RamifiedE, Orientation::UnramifiedE] {
            let t = TameTower::build(11, None, orientation).unwrap();
            for (upper, lower) in [(FieldLabel::E, FieldLabel::F), (FieldLabel::K, FieldLabel::F)] {
                let w = omega(&t, upper, lower).unwrap();
                assert!(!w.is_trivial());
                assert!(w.mul(&t, &w).is_trivial());
                let kernel: Vec<TameChar> = TameChar::all(&t, lower)
                    .into_iter()
                    .filter(|chi| compose_with_norm(&t, chi, upper).unwrap().is_trivial())
                    .collect();
                assert_eq!(kernel, {
                    let mut expect = vec![TameChar::trivial(lower), w];
                    expect.sort();
                    expect
                });
            }
        }
    }

    #[test]
    fn norm_transfer_is_injective_on_odd_order_characters() {
        let t = q11();
        for chi in TameChar::all(&t, FieldLabel::F) {
            if chi.order(&t) % 2 == 1 && !chi.is_trivial() {
                assert!(!compose_with_norm(&t, &chi, FieldLabel::E).unwrap().is_trivial());
                assert!(!compose_with_norm(&t, &chi, FieldLabel::K).unwrap().is_trivial());
            }
        }
    }

    #[test]
    fn galois_action_fixes_exactly_the_norm_pullbacks_on_quadratic_steps() {
        let t = q11();
        for (upper, lower) in t.steps() {
            let mut fixed = 0u64;
            for chi in TameChar::all(&t, upper) {
                let conj = galois_conj(&t, &chi, lower).unwrap();
                // The conjugation is an involution and commutes with the
                // transfer structure: norm pullbacks are fixed, and
                // restriction cannot see the conjugation.
                assert_eq!(galois_conj(&t, &conj, lower).unwrap(), chi);
                assert_eq!(
                    restrict(&t, &conj, lower).unwrap(),
                    restrict(&t, &chi, lower).unwrap()
                );
                if conj == chi {
                    fixed += 1;
                }
            }
            for chi in TameChar::all(&t, lower).into_iter().step_by(11) {
                let up = compose_with_norm(&t, &chi, upper).unwrap();
                assert_eq!(galois_conj(&t, &up, lower).unwrap(), up);
            }
            // Size bookkeeping for the fixed subgroup against the norm
            // image: they agree on a ramified step, while on an unramified
            // step the characters with odd uniformizer exponent are
            // Frobenius-fixed without being pullbacks, doubling the count.
            let image: std::collections::BTreeSet<TameChar> = TameChar::all(&t, lower)
                .into_iter()
                .map(|chi| compose_with_norm(&t, &chi, upper).unwrap())
                .collect();
            let expected = match t.relation(upper, lower).unwrap() {
                crate::tower::Relation::Ramified => image.len() as u64,
                crate::tower::Relation::Unramified => 2 * image.len() as u64,
            };
            assert_eq!(fixed, expected, "fixed-group count off on {upper:?}/{lower:?}");
        }
    }
}
