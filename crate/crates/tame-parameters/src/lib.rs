//! Symbolic arithmetic of tamely ramified quadratic extensions of a local
//! field: the lattice of two quadratic extensions and their compositum,
//! tame characters with norm / restriction / Galois transfer, dihedral
//! parameters with base change and their self-twist sets, and the
//! multiplicity-bound bookkeeping for distinction of base-changed
//! representations.
//!
//! Everything is exact integer arithmetic on character exponents; no field
//! elements and no floating point appear anywhere.

mod chars;
mod dihedral;
mod norms;
mod section5;
mod thm11;
mod tower;

use thiserror::Error;

pub use chars::TameChar;
pub use dihedral::{
    base_change_param, dihedral_twist_sets, DihedralParameter, DihedralTwistSets,
};
pub use norms::{compose_with_norm, galois_conj, norm_to_base, omega, restrict};
pub use section5::{section5_example, Section5Checks, Section5Report};
pub use thm11::{random_regular_inputs, thm11_machinery, thm11_random_suite, Thm11Record};
pub use tower::{FieldLabel, Orientation, Relation, TameLocalField, TameTower};

#[derive(Debug, Error)]
pub enum TameError {
    #[error("bad tower data: {0}")]
    BadModulus(String),
    #[error("{0:?} is not a quadratic step over {1:?}")]
    NotAdjacent(FieldLabel, FieldLabel),
    #[error("parameter is not regular")]
    NotRegular,
    #[error("wrong field: {0}")]
    WrongField(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}
