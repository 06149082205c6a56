//! Matrix groups over a quadratic field tower.
//!
//! Builds the finite groups `GL_n`, `SL_n`, the unitary group `U_n` (identity
//! Hermitian form), and the index-two subgroup `GLplus` for `n <= 3`, over
//! either the base field or its quadratic extension.  Enumeration is always
//! row-by-row and rank-respecting, so the work is proportional to the group
//! order rather than to the number of all square matrices.
//!
//! On top of the raw element lists the crate computes conjugacy classes
//! (orbit search under a certified generating set), inverse / Galois / power
//! maps on classes, subgroup embeddings, and double-coset decompositions
//! `H \ G / H` together with the structural checks that identify double
//! cosets with twisted-conjugation orbits.  For the one pair whose ambient
//! group is too large to enumerate, a streamed path scans matrix space
//! directly for the twisted involutions and certifies conjugacy through
//! rational-canonical-form invariants.

mod classes;
mod cosets;
mod embed;
mod group;
mod matrix;
mod par;
mod sset;

pub use classes::ConjugacyClasses;
pub use cosets::{enumerated_double_cosets, CosetMethod, DoubleCosetReport};
pub use embed::Embedding;
pub use group::{order_formula, unitriangular_elements, GroupKind, MatrixGroup, DEFAULT_CEILING};
pub use matrix::Mat;
pub use par::par_map_ranges;
pub use sset::streamed_double_cosets;

use thiserror::Error;

/// Errors raised while building or combining matrix groups.
#[derive(Debug, Error)]
pub enum GroupError {
    /// The requested size is outside the supported range.
    #[error("matrix size {0} not supported (need 1 <= n <= 3)")]
    BadSize(u8),
    /// The projected group order exceeds the enumeration ceiling.
    #[error("projected group order {projected} exceeds ceiling {ceiling}")]
    ExceedsCeiling { projected: u64, ceiling: u64 },
    /// A group kind is incompatible with the requested field side.
    #[error("group kind {0} requires the quadratic extension side")]
    NeedsExtension(&'static str),
    /// An element expected to lie in a group was not found there.
    #[error("element is not a member of the group")]
    NotMember,
}
