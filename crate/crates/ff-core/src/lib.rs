//! Exact arithmetic for the quadratic extension tower F_q ⊂ F_{q²}.
//!
//! Everything downstream (matrix groups, character tables, distinction
//! criteria) works over one fixed model of the pair E/F = F_{q²}/F_q:
//!
//! * E* is cyclic of order q²−1; a nonzero element is stored as its discrete
//!   logarithm with respect to a fixed generator `gen`, zero as a sentinel.
//! * `gen` is the residue class of x modulo the lexicographically least
//!   primitive polynomial of degree 2f over F_p (q = p^f), so the whole model
//!   is reproducible from (p, f) alone.
//! * Addition is done through a Zech logarithm table:
//!   gen^a + gen^b = gen^(b + Z(a−b)) where gen^Z(k) = 1 + gen^k.
//! * F = F_q sits inside E as {0} ∪ ⟨gen^(q+1)⟩, the Frobenius is
//!   log ↦ q·log, the norm is log ↦ (q+1)·log, and the norm-one subgroup
//!   E¹ = ker(N_{E/F}) is ⟨gen^(q−1)⟩ of order q+1.
//!
//! Multiplicative characters are exponents modulo the relevant group order;
//! additive characters are parameterized by a trace-zero δ so that
//! ψ_δ(x) = ζ_p^(Tr_{E/F_p}(δx)) is trivial on F. No floating point anywhere:
//! character values are returned as exact root-of-unity exponents.

mod chars;
mod tower;

pub use chars::{AddCharacter, MultCharacter, Side};
pub use tower::{FFElem, FieldTower, SubgroupSpec, ZERO_LOG};

use thiserror::Error;

/// Errors raised while constructing or using a field tower.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum TowerError {
    #[error("p = {0} is not prime")]
    NotPrime(u32),
    #[error("extension degree f must be ≥ 1")]
    BadDegree,
    #[error("table size p^(2f) = {0} exceeds the configured budget {1}")]
    TooLarge(u64, u64),
    #[error("no primitive polynomial found (internal error)")]
    NoPrimitive,
    #[error("character evaluated at zero")]
    CharAtZero,
    #[error("element is not in the base field F_q")]
    NotInBase,
}
