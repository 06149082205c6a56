//! Exact character tables for the matrix groups enumerated by
//! `group-engine`, together with the operations on them that the rest of
//! the workspace consumes: duality and Galois transforms, determinant
//! twists, restriction multiplicities, Whittaker (generic) multiplicities,
//! and a verified serialization format for caching.
//!
//! Values are stored exactly as multisets of roots of unity
//! ([`CharValue`]); every inner product used downstream is a rational
//! integer recovered from modular residues under an explicit archimedean
//! bound, so nothing in the crate depends on floating point.

mod cache;
mod cyclo;
mod dixon;
mod inner;
mod modular;
mod table;
mod transforms;
mod whittaker;

pub use cache::{table_from_json, table_to_json, CacheError, FORMAT as CACHE_FORMAT};
pub use cyclo::CharValue;
pub use dixon::compute_character_table;
pub use inner::{restriction_matrix, self_inner_products};
pub use modular::{choose_ell, primes_one_mod};
pub use table::{kind_from_name, CharacterTable, GroupTag, VerificationReport};
pub use transforms::{det_twist, dual_character, galois_character};
pub use whittaker::{whittaker_multiplicities, WhittakerReport};
