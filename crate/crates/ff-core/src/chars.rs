//! Multiplicative and additive characters of the tower fields.
//!
//! A multiplicative character is an exponent modulo the cyclic group order:
//! on E* = ⟨gen⟩ of order q²−1, the character with exponent m sends
//! gen^k ↦ ζ_{q²−1}^{km}; on F_q* = ⟨base_gen⟩ the same with order q−1.
//! Values are returned as exact root-of-unity exponents (order, exponent) —
//! no floating point.
//!
//! The additive character ψ_δ(x) = ζ_p^(Tr_{E/F_p}(δx)) is trivial on F_q
//! exactly when Tr_{E/F}(δ) = 0, since Tr_{E/F_p}(δx) = Tr_{F/F_p}(x·Tr_{E/F}(δ))
//! for x ∈ F_q.

use crate::tower::{FFElem, FieldTower};
use crate::TowerError;

/// Which multiplicative group a character lives on.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Side {
    /// Characters of F_q*.
    Base,
    /// Characters of E* = F_{q²}*.
    Ext,
}

/// A character of F_q* or E*, stored as an exponent modulo the group order.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct MultCharacter {
    pub side: Side,
    pub exponent: u32,
}

impl MultCharacter {
    pub fn new(tower: &FieldTower, side: Side, exponent: u32) -> MultCharacter {
        let m = group_order(tower, side);
        MultCharacter { side, exponent: exponent % m }
    }

    pub fn trivial(side: Side) -> MultCharacter {
        MultCharacter { side, exponent: 0 }
    }

    pub fn is_trivial(&self) -> bool {
        self.exponent == 0
    }

    /// Order of the character in the dual group.
    pub fn order(&self, tower: &FieldTower) -> u32 {
        let m = group_order(tower, self.side) as u64;
        (m / crate::tower::gcd_u64(m, self.exponent as u64)) as u32
    }

    /// Value at a unit, as (root order, exponent): the value is ζ_order^exp.
    pub fn value(&self, tower: &FieldTower, a: FFElem) -> Result<(u32, u32), TowerError> {
        let k = a.log().ok_or(TowerError::CharAtZero)?;
        let m = group_order(tower, self.side) as u64;
        let kk = match self.side {
            Side::Ext => k as u64,
            Side::Base => tower.base_log(a)? as u64,
        };
        Ok((m as u32, ((kk % m) * (self.exponent as u64) % m) as u32))
    }

    /// Pointwise product.
    pub fn mul(&self, tower: &FieldTower, other: &MultCharacter) -> MultCharacter {
        assert_eq!(self.side, other.side, "character product across sides");
        MultCharacter::new(tower, self.side, self.exponent + other.exponent)
    }

    pub fn inverse(&self, tower: &FieldTower) -> MultCharacter {
        let m = group_order(tower, self.side);
        MultCharacter { side: self.side, exponent: (m - self.exponent % m) % m }
    }

    /// For a base character χ: the pullback χ∘N_{E/F}, a character of E*.
    /// χ∘N is trivial iff χ is (the norm is surjective).
    pub fn compose_with_norm(&self, tower: &FieldTower) -> MultCharacter {
        assert_eq!(self.side, Side::Base);
        let m = tower.group_order() as u64;
        let e = self.exponent as u64 * (tower.q() as u64 + 1) % m;
        MultCharacter { side: Side::Ext, exponent: e as u32 }
    }

    /// For an ext character μ: the restriction μ|_{F_q*}.
    pub fn restrict_to_base(&self, tower: &FieldTower) -> MultCharacter {
        assert_eq!(self.side, Side::Ext);
        MultCharacter { side: Side::Base, exponent: self.exponent % (tower.q() - 1).max(1) }
    }

    /// μ trivial on the embedded F_q*.
    pub fn trivial_on_base(&self, tower: &FieldTower) -> bool {
        assert_eq!(self.side, Side::Ext);
        self.exponent % (tower.q() - 1).max(1) == 0
    }

    /// μ trivial on the norm-one subgroup E¹ (⟺ μ factors through N_{E/F}).
    pub fn trivial_on_norm_one(&self, tower: &FieldTower) -> bool {
        assert_eq!(self.side, Side::Ext);
        self.exponent % (tower.q() + 1) == 0
    }

    /// All characters of the given side, in exponent order.
    pub fn all(tower: &FieldTower, side: Side) -> Vec<MultCharacter> {
        let m = group_order(tower, side);
        (0..m).map(|e| MultCharacter { side, exponent: e }).collect()
    }
}

fn group_order(tower: &FieldTower, side: Side) -> u32 {
    match side {
        Side::Base => (tower.q() - 1).max(1),
        Side::Ext => tower.group_order(),
    }
}

/// The additive character ψ_δ(x) = ζ_p^(Tr_{E/F_p}(δx)), δ trace-zero, which
/// is trivial on F_q and nontrivial on E.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct AddCharacter {
    pub delta: FFElem,
}

impl AddCharacter {
    /// The canonical choice: least-log trace-zero δ.
    pub fn canonical(tower: &FieldTower) -> AddCharacter {
        AddCharacter { delta: tower.canonical_trace_zero_delta() }
    }

    /// ψ_δ scaled: x ↦ ψ_δ(a·x), used for the Whittaker characters ψ_a.
    pub fn scaled(&self, tower: &FieldTower, a: FFElem) -> AddCharacter {
        AddCharacter { delta: tower.mul(self.delta, a) }
    }

    pub fn is_trivial_on_base(&self, tower: &FieldTower) -> bool {
        tower.rel_trace(self.delta).is_zero()
    }

    /// Value at x as (order p, exponent).
    pub fn value(&self, tower: &FieldTower, x: FFElem) -> (u32, u32) {
        (tower.p(), tower.abs_trace(tower.mul(self.delta, x)))
    }
}
