//! The lattice of tamely ramified quadratic extensions over a base local
//! field, modelled through residue fields and uniformizer bookkeeping only.
//!
//! Four fields appear: the base `F`, two quadratic extensions `E` and `K`
//! (one ramified, one unramified), and their compositum `L`.  Everything any
//! computation needs is captured by the residue field size of each floor and
//! by which of the two quadratic steps is ramified; elements of the fields
//! themselves never have to be represented.

use serde::Serialize;

use crate::TameError;

/// Labels for the four fields in the quadratic lattice `F ⊂ E, K ⊂ L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FieldLabel {
    F,
    E,
    K,
    L,
}

impl FieldLabel {
    pub const ALL: [FieldLabel; 4] = [FieldLabel::F, FieldLabel::E, FieldLabel::K, FieldLabel::L];

    pub fn name(self) -> &'static str {
        match self {
            FieldLabel::F => "F",
            FieldLabel::E => "E",
            FieldLabel::K => "K",
            FieldLabel::L => "L",
        }
    }
}

/// Which of the two quadratic extensions of the base carries the label `E`.
///
/// The lattice always contains one ramified and one unramified quadratic
/// extension; the two orientations differ only in how the labels `E` and `K`
/// are attached to them.  `RamifiedE` is the default.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Orientation {
    /// `E/F` ramified, `K/F` unramified (so `L/E` is unramified).
    RamifiedE,
    /// `E/F` unramified, `K/F` ramified (so `L/E` is ramified).
    UnramifiedE,
}

impl Default for Orientation {
    fn default() -> Self {
        Orientation::RamifiedE
    }
}

/// How one field of the lattice sits over an adjacent smaller one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    Unramified,
    Ramified,
}

/// One floor of the lattice: its residue field size and its ramification
/// index over the base `F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TameLocalField {
    pub label: FieldLabel,
    pub residue: u64,
    pub ram_index: u64,
}

/// The full quadratic lattice, together with the modulus used for
/// uniformizer-valued character components.
///
/// A tame character of any floor is determined by its value on a fixed
/// uniformizer (a root of unity of order dividing `modulus`) and on the
/// Teichmüller units (a character of the cyclic group of size `residue - 1`).
/// The modulus is shared across floors so that norm and restriction maps act
/// by integer formulas; it must be divisible by `lcm(q - 1, q^2 - 1, 2)`.
#[derive(Clone, Debug)]
pub struct TameTower {
    q: u64,
    modulus: u64,
    orientation: Orientation,
    fields: [TameLocalField; 4],
}

fn is_odd_prime_power(q: u64) -> bool {
    if q < 3 || q % 2 == 0 {
        return false;
    }
    let mut p = 3;
    while p * p <= q {
        if q % p == 0 {
            break;
        }
        p += 2;
    }
    if p * p > q {
        return true; // q itself is an odd prime
    }
    let mut rest = q;
    while rest % p == 0 {
        rest /= p;
    }
    rest == 1
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl TameTower {
    /// Build the lattice over a base with residue field of odd size `q`.
    ///
    /// `modulus` defaults to `q^2 - 1`, the smallest legal value; any
    /// multiple may be supplied instead.
    pub fn build(
        q: u64,
        modulus: Option<u64>,
        orientation: Orientation,
    ) -> Result<TameTower, TameError> {
        if !is_odd_prime_power(q) {
            return Err(TameError::BadModulus(format!(
                "residue size {q} is not an odd prime power"
            )));
        }
        let least = lcm(lcm(q - 1, q * q - 1), 2);
        let m = modulus.unwrap_or(least);
        if m == 0 || m % least != 0 {
            return Err(TameError::BadModulus(format!(
                "modulus {m} is not a multiple of {least}"
            )));
        }
        let (res_e, res_k) = match orientation {
            Orientation::RamifiedE => (q, q * q),
            Orientation::UnramifiedE => (q * q, q),
        };
        let ram = |residue: u64| if residue == q { 2 } else { 1 };
        let fields = [
            TameLocalField { label: FieldLabel::F, residue: q, ram_index: 1 },
            TameLocalField { label: FieldLabel::E, residue: res_e, ram_index: ram(res_e) },
            TameLocalField { label: FieldLabel::K, residue: res_k, ram_index: ram(res_k) },
            TameLocalField { label: FieldLabel::L, residue: q * q, ram_index: 2 },
        ];
        Ok(TameTower { q, modulus: m, orientation, fields })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn field(&self, label: FieldLabel) -> &TameLocalField {
        &self.fields[label as usize]
    }

    pub fn residue(&self, label: FieldLabel) -> u64 {
        self.field(label).residue
    }

    /// The four quadratic steps of the lattice, as `(upper, lower)` pairs.
    pub fn steps(&self) -> [(FieldLabel, FieldLabel); 4] {
        [
            (FieldLabel::E, FieldLabel::F),
            (FieldLabel::K, FieldLabel::F),
            (FieldLabel::L, FieldLabel::E),
            (FieldLabel::L, FieldLabel::K),
        ]
    }

    /// Whether the quadratic step from `lower` up to `upper` is ramified or
    /// unramified.  Only the four adjacent pairs are accepted; in particular
    /// `L/F` is quartic and `E`, `K` are incomparable.
    pub fn relation(&self, upper: FieldLabel, lower: FieldLabel) -> Result<Relation, TameError> {
        if !self.steps().contains(&(upper, lower)) {
            return Err(TameError::NotAdjacent(upper, lower));
        }
        if self.residue(upper) == self.residue(lower) {
            Ok(Relation::Ramified)
        } else {
            Ok(Relation::Unramified)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn the_default_lattice_over_q_eleven_has_the_expected_floors() {
        let t = TameTower::build(11, None, Orientation::default()).unwrap();
        assert_eq!(t.modulus(), 120);
        assert_eq!(t.residue(FieldLabel::F), 11);
        assert_eq!(t.residue(FieldLabel::E), 11);
        assert_eq!(t.residue(FieldLabel::K), 121);
        assert_eq!(t.residue(FieldLabel::L), 121);
        assert_eq!(t.field(FieldLabel::E).ram_index, 2);
        assert_eq!(t.field(FieldLabel::K).ram_index, 1);
        assert_eq!(t.relation(FieldLabel::E, FieldLabel::F).unwrap(), Relation::Ramified);
        assert_eq!(t.relation(FieldLabel::K, FieldLabel::F).unwrap(), Relation::Unramified);
        assert_eq!(t.relation(FieldLabel::L, FieldLabel::E).unwrap(), Relation::Unramified);
        assert_eq!(t.relation(FieldLabel::L, FieldLabel::K).unwrap(), Relation::Ramified);
    }

    #[test]
    fn the_mirror_orientation_swaps_the_two_quadratic_steps() {
        let t = TameTower::build(11, None, Orientation::UnramifiedE).unwrap();
        assert_eq!(t.residue(FieldLabel::E), 121);
        assert_eq!(t.residue(FieldLabel::K), 11);
        assert_eq!(t.relation(FieldLabel::E, FieldLabel::F).unwrap(), Relation::Unramified);
        assert_eq!(t.relation(FieldLabel::L, FieldLabel::E).unwrap(), Relation::Ramified);
    }

    #[test]
    fn non_adjacent_pairs_are_rejected() {
        let t = TameTower::build(11, None, Orientation::default()).unwrap();
        assert!(t.relation(FieldLabel::L, FieldLabel::F).is_err());
        assert!(t.relation(FieldLabel::E, FieldLabel::K).is_err());
        assert!(t.relation(FieldLabel::F, FieldLabel::E).is_err());
    }

    #[test]
    fn bad_residue_sizes_and_moduli_are_rejected() {
        assert!(TameTower::build(8, None, Orientation::default()).is_err());
        assert!(TameTower::build(15, None, Orientation::default()).is_err());
        assert!(TameTower::build(11, Some(60), Orientation::default()).is_err());
        assert!(TameTower::build(11, Some(240), Orientation::default()).is_ok());
        assert!(TameTower::build(9, None, Orientation::default()).is_ok());
        assert_eq!(TameTower::build(9, None, Orientation::default()).unwrap().modulus(), 80);
    }
}
