//! The character table container and its verification.

use serde::{Deserialize, Serialize};

use ff_core::Side;
use group_engine::{GroupKind, MatrixGroup};

use crate::cyclo::CharValue;

/// Identifies the group a table belongs to (also the cache key).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GroupTag {
    pub kind: String,
    pub n: u8,
    pub p: u32,
    pub f: u32,
    pub side: String,
}

impl GroupTag {
    pub fn of(group: &MatrixGroup) -> GroupTag {
        GroupTag {
            kind: group.kind().name().to_string(),
            n: group.n(),
            p: group.tower().p(),
            f: group.tower().f(),
            side: match group.side() {
                Side::Base => "base".to_string(),
                Side::Ext => "ext".to_string(),
            },
        }
    }

    /// Filesystem-safe identifier, e.g. `gl-n2-p3-f1-ext`.
    pub fn slug(&self) -> String {
        format!("{}-n{}-p{}-f{}-{}", self.kind, self.n, self.p, self.f, self.side)
    }
}

/// What was verified when the table was built, and how.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    /// Squared degrees sum to the group order.
    pub sum_of_squares_ok: bool,
    /// For every u coprime to the exponent, the value at the class of g^u
    /// is the Galois twist (zeta -> zeta^u) of the value at the class of g.
    /// This closure property makes every orthogonality sum a rational
    /// integer, which is what licenses exact reconstruction from residues.
    pub power_galois_ok: bool,
    /// Weighted row orthogonality `sum_m |C_m| chi_i conj(chi_j) =
    /// |G| delta_ij`, reconstructed exactly from enough prime residues.
    pub row_orthogonality_ok: bool,
    /// Column orthogonality, verified modulo the same primes (it is an
    /// algebraic consequence of row orthogonality for a square table).
    pub column_orthogonality_ok: bool,
    /// For groups of order at most 5000: the same inner products were
    /// re-accumulated literally element by element and compared.
    pub elementwise_ok: Option<bool>,
    /// Identity column equals the degree list.
    pub identity_column_ok: bool,
}

impl VerificationReport {
    pub fn all_ok(&self) -> bool {
        self.sum_of_squares_ok
            && self.power_galois_ok
            && self.row_orthogonality_ok
            && self.column_orthogonality_ok
            && self.elementwise_ok.unwrap_or(true)
            && self.identity_column_ok
    }
}

/// A complete exact character table plus the class data needed to use it
/// without the parent group in memory.
///
/// Characters are sorted by (degree, value list); classes follow the parent
/// group's class order (identity class first, then by least member index).
#[derive(Clone, Serialize, Deserialize)]
pub struct CharacterTable {
    pub tag: GroupTag,
    pub group_order: u64,
    pub exponent: u64,
    pub ell: u64,
    pub class_sizes: Vec<u64>,
    pub class_orders: Vec<u64>,
    pub class_rep_keys: Vec<u64>,
    /// Scan index (in the tower) of the determinant of each class rep.
    pub class_det_scan: Vec<u32>,
    pub inverse_class: Vec<u32>,
    pub galois_class: Vec<u32>,
    pub degrees: Vec<u64>,
    /// `values[character][class]`.
    pub values: Vec<Vec<CharValue>>,
    pub verification: VerificationReport,
}

impl CharacterTable {
    /// Number of irreducible characters (= number of classes).
    pub fn k(&self) -> usize {
        self.degrees.len()
    }

    pub fn value(&self, chr: usize, class: usize) -> &CharValue {
        &self.values[chr][class]
    }

    pub fn degree(&self, chr: usize) -> u64 {
        self.degrees[chr]
    }

    /// Index of a character given its full value list, if present.
    pub fn find_char(&self, values: &[CharValue]) -> Option<usize> {
        self.values.iter().position(|v| v.as_slice() == values)
    }

    /// Index of the trivial character (always 0 in canonical order).
    pub fn trivial_index(&self) -> usize {
        0
    }

    /// Indices of the one-dimensional characters.
    pub fn linear_indices(&self) -> Vec<usize> {
        (0..self.k()).filter(|&i| self.degrees[i] == 1).collect()
    }

    /// Degrees with multiplicities as a sorted list.
    pub fn degree_multiset(&self) -> Vec<u64> {
        let mut d = self.degrees.clone();
        d.sort_unstable();
        d
    }

    /// Structural consistency of the container itself (shape, degree
    /// consistency, canonical sort).  Used on cache reads; the heavy
    /// verification lives in the build-time report.
    pub fn structurally_valid(&self) -> bool {
        let k = self.k();
        let shape_ok = self.values.len() == k
            && self.values.iter().all(|row| row.len() == k)
            && self.class_sizes.len() == k
            && self.class_orders.len() == k
            && self.class_rep_keys.len() == k
            && self.class_det_scan.len() == k
            && self.inverse_class.len() == k
            && self.galois_class.len() == k;
        if !shape_ok {
            return false;
        }
        let sizes_ok = self.class_sizes.iter().sum::<u64>() == self.group_order;
        let squares_ok = self
            .degrees
            .iter()
            .map(|&d| d as u128 * d as u128)
            .sum::<u128>()
            == self.group_order as u128;
        let identity_ok = (0..k).all(|i| {
            self.values[i][0].is_integer(
                u32::try_from(self.degrees[i]).expect("degree exceeds u32"),
            )
        });
        let mult_ok = (0..k)
            .all(|i| (0..k).all(|m| self.values[i][m].total_mult() == self.degrees[i]));
        let sorted_ok = (1..k).all(|i| {
            (self.degrees[i - 1], &self.values[i - 1]) <= (self.degrees[i], &self.values[i])
        });
        let trivial_ok = self.values[0].iter().all(|v| v.is_integer(1));
        sizes_ok && squares_ok && identity_ok && mult_ok && sorted_ok && trivial_ok
    }
}

/// Tag pairing for kinds, used by builders and the cache.
pub fn kind_from_name(name: &str) -> Option<GroupKind> {
    match name {
        "gl" => Some(GroupKind::GL),
        "sl" => Some(GroupKind::SL),
        "u" => Some(GroupKind::U),
        "glplus" => Some(GroupKind::GLplus),
        _ => None,
    }
}
