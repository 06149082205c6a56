//! Twisting data for one irreducible of the extension group: the sets
//! X (distinguishing characters of the small field), Z (determinant
//! twists fixing the irreducible), Y and Y' (the subgroups of Z trivial
//! on the embedded small field and on the norm-one circle), the rational
//! invariant q = |X|·|Y|/|Z|, and the weak/strong equivalence classes.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

use char_engine::det_twist;
use ff_core::{FFElem, MultCharacter, Side};

use crate::homdim::resolve_linear_target;
use crate::lab::{GroupBundle, PairContext};

/// Character sets attached to one irreducible, stored as sorted exponents
/// (base-side exponents for `x`, extension-side for the rest).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TwistSets {
    pub char_id: usize,
    pub x: Vec<u32>,
    pub z: Vec<u32>,
    pub y: Vec<u32>,
    pub yprime: Vec<u32>,
}

/// Twists the irreducible `i` of `g` by `mu` on the determinant and
/// returns the index of the resulting irreducible.
pub fn det_twist_by(g: &GroupBundle, i: usize, mu: &MultCharacter) -> usize {
    let t = g.group.tower();
    let vals: Vec<(u32, u32)> = g
        .table
        .class_det_scan
        .iter()
        .map(|&s| mu.value(t, FFElem::from_scan_index(s)).expect("unit determinant"))
        .collect();
    det_twist(&g.table, i, &vals)
}

/// Computes X, Z, Y, Y' for irreducible `i` of the extension group `g`.
/// `pc_gl` must be the pair context against the small-field general
/// linear subgroup (it supplies the distinction dimensions for X).
pub fn twist_sets(
    g: &GroupBundle,
    hgl: &GroupBundle,
    pc_gl: &PairContext,
    i: usize,
) -> TwistSets {
    let t = g.group.tower();
    let n = u32::from(g.group.n());

    let x: Vec<u32> = MultCharacter::all(t, Side::Base)
        .iter()
        .filter(|chi| pc_gl.restriction[i][resolve_linear_target(hgl, chi)] != 0)
        .map(|chi| chi.exponent)
        .collect();

    let mut z = Vec::new();
    let mut y = Vec::new();
    let mut yprime = Vec::new();
    for mu in MultCharacter::all(t, Side::Ext) {
        if det_twist_by(g, i, &mu) != i {
            continue;
        }
        // Comparing central characters of the twist identity forces the
        // n-th power of every fixing twist to vanish.
        assert!(n % mu.order(t) == 0, "twist in Z with order not dividing n");
        z.push(mu.exponent);
        if mu.trivial_on_base(t) {
            y.push(mu.exponent);
        }
        if mu.trivial_on_norm_one(t) {
            yprime.push(mu.exponent);
        }
    }
    TwistSets { char_id: i, x, z, y, yprime }
}

/// The invariant q = |X|·|Y|/|Z| together with the supporting action
/// checks that make its integrality a theorem rather than an accident.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QValue {
    pub x_size: u64,
    pub y_size: u64,
    pub z_size: u64,
    /// Z/Y maps X into itself under chi -> chi·(mu restricted).
    pub action_closed: bool,
    /// Nontrivial cosets of Y move every point of X.
    pub action_free: bool,
    /// Orbit count of the action on X (equals q when the checks hold).
    pub orbits: u64,
    pub numerator: u64,
    pub denominator: u64,
}

impl QValue {
    /// The invariant as an exact integer, when it is one.
    pub fn integer(&self) -> Option<u64> {
        (self.numerator % self.denominator == 0).then(|| self.numerator / self.denominator)
    }
}

/// Evaluates q for a computed twist-set record.
pub fn q_value(g: &GroupBundle, ts: &TwistSets) -> QValue {
    let t = g.group.tower();
    let x_set: BTreeSet<u32> = ts.x.iter().copied().collect();
    let mut action_closed = true;
    let mut action_free = true;

    // Restriction of each fixing twist to the embedded small field,
    // acting on X by multiplication.
    let mut shifts = BTreeSet::new();
    for &ze in &ts.z {
        let mu = MultCharacter::new(t, Side::Ext, ze);
        let shift = mu.restrict_to_base(t);
        if !ts.y.contains(&ze) && shift.is_trivial() {
            action_free = false;
        }
        shifts.insert(shift.exponent);
    }
    for &xe in &x_set {
        let chi = MultCharacter::new(t, Side::Base, xe);
        for &se in &shifts {
            let moved = chi.mul(t, &MultCharacter::new(t, Side::Base, se));
            if !x_set.contains(&moved.exponent) {
                action_closed = false;
            }
        }
    }

    // Orbits of X under the shift subgroup.
    let mut seen = BTreeSet::new();
    let mut orbits = 0u64;
    for &xe in &x_set {
        if seen.contains(&xe) {
            continue;
        }
        orbits += 1;
        let chi = MultCharacter::new(t, Side::Base, xe);
        for &se in &shifts {
            let moved = chi.mul(t, &MultCharacter::new(t, Side::Base, se));
            seen.insert(moved.exponent);
        }
    }

    let q = QValue {
        x_size: ts.x.len() as u64,
        y_size: ts.y.len() as u64,
        z_size: ts.z.len() as u64,
        action_closed,
        action_free,
        orbits,
        numerator: ts.x.len() as u64 * ts.y.len() as u64,
        denominator: ts.z.len() as u64,
    };
    if action_closed && action_free {
        assert_eq!(
            q.integer(),
            Some(orbits),
            "free action should force q = orbit count"
        );
    }
    q
}

/// Weak and strong equivalence of determinant twists.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub char_id: usize,
    /// Distinct irreducibles in the weak class (all determinant twists).
    pub weak_class_size: u64,
    /// Distinguished members of the weak class.
    pub distinguished_twists: Vec<usize>,
    /// Strong classes (twisting only by characters trivial on the small
    /// field) among the distinguished members.
    pub strong_class_count: u64,
}

/// Enumerates the weak class of irreducible `i`, finds its distinguished
/// members, counts the strong classes among them, and checks the count
/// against the q invariant.
pub fn equivalence_classes(
    g: &GroupBundle,
    hgl: &GroupBundle,
    pc_gl: &PairContext,
    i: usize,
) -> EquivalenceReport {
    let t = g.group.tower();
    let triv = hgl.table.trivial_index();
    let all_ext = MultCharacter::all(t, Side::Ext);

    let weak: BTreeSet<usize> = all_ext.iter().map(|mu| det_twist_by(g, i, mu)).collect();
    let distinguished: BTreeSet<usize> = weak
        .iter()
        .copied()
        .filter(|&j| pc_gl.restriction[j][triv] != 0)
        .collect();

    // Strong orbits: twist by the characters trivial on the small field.
    let small_trivial: Vec<&MultCharacter> =
        all_ext.iter().filter(|mu| mu.trivial_on_base(t)).collect();
    let mut seen = BTreeSet::new();
    let mut strong = 0u64;
    for &j in &distinguished {
        if seen.contains(&j) {
            continue;
        }
        strong += 1;
        for mu in &small_trivial {
            let moved = det_twist_by(g, j, mu);
            assert!(
                distinguished.contains(&moved),
                "small-field-trivial twist must preserve distinction"
            );
            seen.insert(moved);
        }
    }

    let ts = twist_sets(g, hgl, pc_gl, i);
    let q = q_value(g, &ts);
    assert_eq!(
        Some(strong),
        q.integer(),
        "strong-class count must equal the q invariant"
    );

    EquivalenceReport {
        char_id: i,
        weak_class_size: weak.len() as u64,
        distinguished_twists: distinguished.into_iter().collect(),
        strong_class_count: strong,
    }
}
