//! Distinction theory for the symmetric pairs built from a quadratic
//! extension of finite fields: restriction dimensions with elementwise
//! oracles, per-pair scans (multiplicity one, duality and base-change
//! laws), twisting invariants (the sets X, Y, Y', Z and the rational
//! invariant q), packet decompositions with genericity labels, the
//! distinction-multiplicity formula, and the unitary-versus-split
//! comparison.
//!
//! Every headline dimension is computed twice: once through class-weighted
//! inner products and once by literal summation over the subgroup.

mod homdim;
mod lab;
mod packet;
mod scan;
mod theorem43;
mod twist;
mod unitary;

use group_engine::GroupError;
use thiserror::Error;

/// Errors surfaced by the distinction laboratory.
#[derive(Debug, Error)]
pub enum DistinctionError {
    #[error("group construction failed: {0}")]
    Group(#[from] GroupError),
    #[error("bundle mismatch: {0}")]
    Bundle(String),
    #[error(
        "restriction {pair} of character {char_id} hits constituent {constituent} \
         with multiplicity {mult}; the decomposition bookkeeping needs \
         multiplicity-free restrictions"
    )]
    Multiplicity {
        pair: String,
        char_id: usize,
        constituent: usize,
        mult: u64,
    },
    #[error("character index {id} is out of range (the table has {k} irreducibles)")]
    BadCharacter { id: usize, k: usize },
}

pub use homdim::{elementwise_dims, hom_dim, resolve_linear_target};
pub use lab::{GroupBundle, PairContext};
pub use packet::{PacketLab, PacketReport, PlusConstituent, SlConstituent};
pub use scan::{pair_scan, Criterion, DistinctionReport, ScanRow};
pub use theorem43::{theorem43_check, PairingValue, Theorem43Record, Theorem43Row};
pub use twist::{
    det_twist_by, equivalence_classes, q_value, twist_sets, EquivalenceReport, QValue, TwistSets,
};
pub use unitary::{central_character, unitary_relation, UnitaryRecord};
