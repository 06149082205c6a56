//! Group construction: row-by-row enumeration, membership index, generators.

use std::sync::Arc;

use ff_core::{FFElem, FieldTower, Side, SubgroupSpec};

use crate::matrix::Mat;
use crate::GroupError;

/// Default ceiling on the order of a group that may be held in memory.
pub const DEFAULT_CEILING: u64 = 10_000_000;

/// The families of matrix groups supported by the engine.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum GroupKind {
    /// All invertible matrices.
    GL,
    /// Determinant one.
    SL,
    /// Unitary group for the identity Hermitian form: `sigma(g)^T g = I`.
    U,
    /// Determinant in the index-two subgroup generated by base-field scalars
    /// and squares of the extension's multiplicative group.
    GLplus,
}

impl GroupKind {
    /// Short lowercase name used in reports and cache keys.
    pub fn name(self) -> &'static str {
        match self {
            GroupKind::GL => "gl",
            GroupKind::SL => "sl",
            GroupKind::U => "u",
            GroupKind::GLplus => "glplus",
        }
    }
}

/// A fully enumerated matrix group with constant-time index lookups.
///
/// Elements are stored in enumeration order (row-by-row, each row running
/// through entry vectors in counter order), which is deterministic for a
/// fixed tower.  A sorted key table provides membership tests, and a greedy
/// certified generating set (each generator is the least element outside the
/// subgroup generated so far, until the closure is the whole group) supports
/// orbit computations elsewhere.
pub struct MatrixGroup {
    kind: GroupKind,
    side: Side,
    n: u8,
    tower: Arc<FieldTower>,
    elems: Vec<Mat>,
    sorted_keys: Vec<(u64, u32)>,
    inverse_index: Vec<u32>,
    identity: u32,
    generators: Vec<u32>,
}

impl MatrixGroup {
    /// Enumerates the group, checking the order against its closed form.
    pub fn build(
        kind: GroupKind,
        n: u8,
        side: Side,
        tower: Arc<FieldTower>,
        ceiling: Option<u64>,
    ) -> Result<MatrixGroup, GroupError> {
        if !(1..=3).contains(&n) {
            return Err(GroupError::BadSize(n));
        }
        if side == Side::Base && matches!(kind, GroupKind::U | GroupKind::GLplus) {
            return Err(GroupError::NeedsExtension(match kind {
                GroupKind::U => "unitary",
                _ => "GL-plus",
            }));
        }
        let ceiling = ceiling.unwrap_or(DEFAULT_CEILING);
        let projected = order_formula(kind, n, side, &tower);
        if projected > ceiling {
            return Err(GroupError::ExceedsCeiling { projected, ceiling });
        }

        let elems = enumerate(kind, n, side, &tower);
        assert_eq!(
            elems.len() as u64,
            projected,
            "enumerated order disagrees with the closed-form count"
        );

        let mut sorted_keys: Vec<(u64, u32)> = elems
            .iter()
            .enumerate()
            .map(|(i, m)| (m.encode(&tower), i as u32))
            .collect();
        sorted_keys.sort_unstable();

        let lookup = |m: &Mat| -> u32 {
            let key = m.encode(&tower);
            let pos = sorted_keys
                .binary_search_by_key(&key, |&(k, _)| k)
                .expect("product left the group during construction");
            sorted_keys[pos].1
        };

        let identity = lookup(&Mat::identity(n));
        let inverse_index: Vec<u32> = elems.iter().map(|m| lookup(&m.inv(&tower))).collect();
        let generators = certified_generators(&tower, &elems, &sorted_keys, identity);

        Ok(MatrixGroup {
            kind,
            side,
            n,
            tower,
            elems,
            sorted_keys,
            inverse_index,
            identity,
            generators,
        })
    }

    /// Group order.
    pub fn order(&self) -> u64 {
        self.elems.len() as u64
    }

    /// Matrix size.
    pub fn n(&self) -> u8 {
        self.n
    }

    /// Group family.
    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    /// Field side the entries live on.
    pub fn side(&self) -> Side {
        self.side
    }

    /// The underlying field tower.
    pub fn tower(&self) -> &Arc<FieldTower> {
        &self.tower
    }

    /// Element by index.
    pub fn mat(&self, idx: u32) -> &Mat {
        &self.elems[idx as usize]
    }

    /// All elements in enumeration order.
    pub fn elems(&self) -> &[Mat] {
        &self.elems
    }

    /// Index of a matrix if it belongs to the group.
    pub fn index_of(&self, m: &Mat) -> Option<u32> {
        let key = m.encode(&self.tower);
        self.sorted_keys
            .binary_search_by_key(&key, |&(k, _)| k)
            .ok()
            .map(|pos| self.sorted_keys[pos].1)
    }

    /// Index of a matrix that must belong to the group.
    pub fn index_of_required(&self, m: &Mat) -> Result<u32, GroupError> {
        self.index_of(m).ok_or(GroupError::NotMember)
    }

    /// Index of the identity element.
    pub fn identity_index(&self) -> u32 {
        self.identity
    }

    /// Index of the inverse of the element at `idx`.
    pub fn inverse_of(&self, idx: u32) -> u32 {
        self.inverse_index[idx as usize]
    }

    /// Certified generating set (indices, ascending).
    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    /// Index of the product of two elements.
    pub fn mul_idx(&self, a: u32, b: u32) -> u32 {
        let m = self.elems[a as usize].mul(&self.tower, &self.elems[b as usize]);
        self.index_of(&m).expect("group not closed under product")
    }

    /// Multiplicative order of the element at `idx`.
    pub fn element_order(&self, idx: u32) -> u64 {
        let mut cur = idx;
        let mut k = 1u64;
        while cur != self.identity {
            cur = self.mul_idx(cur, idx);
            k += 1;
        }
        k
    }
}

/// Closed-form order of the group before enumeration.
pub fn order_formula(kind: GroupKind, n: u8, side: Side, tower: &FieldTower) -> u64 {
    let s = match side {
        Side::Base => tower.q() as u128,
        Side::Ext => tower.qq() as u128,
    };
    let nn = n as u32;
    let gl: u128 = (0..nn).map(|i| s.pow(nn) - s.pow(i)).product();
    let val: u128 = match kind {
        GroupKind::GL => gl,
        GroupKind::SL => gl / (s - 1),
        GroupKind::U => {
            let q = tower.q() as i128;
            let mut acc: i128 = q.pow(nn * (nn - 1) / 2);
            for i in 1..=nn {
                acc *= q.pow(i) - if i % 2 == 1 { -1 } else { 1 };
            }
            acc as u128
        }
        GroupKind::GLplus => {
            let index = tower.subgroup_index(SubgroupSpec::BaseTimesPowers(2)) as u128;
            gl / index
        }
    };
    u64::try_from(val).expect("group order overflows u64")
}

/// Entry domain for one side, in canonical element order (zero, then by log).
fn entry_domain(side: Side, tower: &FieldTower) -> Vec<FFElem> {
    match side {
        Side::Ext => tower.elements().collect(),
        Side::Base => tower.elements().filter(|&x| tower.in_base(x)).collect(),
    }
}

/// All row vectors of length `n` over the domain, in counter order
/// (rightmost entry fastest).
fn row_vectors(n: u8, dom: &[FFElem]) -> Vec<[FFElem; 3]> {
    let s = dom.len();
    let total = s.pow(n as u32);
    let mut out = Vec::with_capacity(total);
    for mut c in 0..total {
        let mut row = [FFElem::ZERO; 3];
        for j in (0..n).rev() {
            row[j as usize] = dom[c % s];
            c /= s;
        }
        out.push(row);
    }
    out
}

fn row_is_zero(r: &[FFElem; 3], n: u8) -> bool {
    (0..n).all(|j| r[j as usize].is_zero())
}

/// Row-by-row rank-respecting enumeration with the kind filter applied to
/// each completed candidate.
fn enumerate(kind: GroupKind, n: u8, side: Side, t: &FieldTower) -> Vec<Mat> {
    let dom = entry_domain(side, t);
    let rows = row_vectors(n, &dom);
    let mut out = Vec::new();
    let keep = |m: &Mat| -> bool {
        match kind {
            GroupKind::GL => true,
            GroupKind::SL => m.det(t) == FFElem::ONE,
            GroupKind::U => m.conj_transpose(t).mul(t, m) == Mat::identity(n),
            GroupKind::GLplus => t.subgroup_contains(SubgroupSpec::BaseTimesPowers(2), m.det(t)),
        }
    };
    match n {
        1 => {
            for r in &rows {
                if row_is_zero(r, 1) {
                    continue;
                }
                let m = Mat::from_rows(&[&r[..1]]);
                if keep(&m) {
                    out.push(m);
                }
            }
        }
        2 => {
            for r1 in &rows {
                if row_is_zero(r1, 2) {
                    continue;
                }
                for r2 in &rows {
                    // Independence of two rows == nonzero 2x2 determinant.
                    let d = t.sub(t.mul(r1[0], r2[1]), t.mul(r1[1], r2[0]));
                    if d.is_zero() {
                        continue;
                    }
                    let m = Mat::from_rows(&[&r1[..2], &r2[..2]]);
                    if keep(&m) {
                        out.push(m);
                    }
                }
            }
        }
        3 => {
            for r1 in &rows {
                if row_is_zero(r1, 3) {
                    continue;
                }
                for r2 in &rows {
                    // Cofactors of the (missing) third row; the first two
                    // rows are independent exactly when some 2x2 minor, i.e.
                    // some cofactor, is nonzero.  The determinant of the
                    // completed matrix is then the dot product with row 3.
                    let c0 = t.sub(t.mul(r1[1], r2[2]), t.mul(r1[2], r2[1]));
                    let c1 = t.sub(t.mul(r1[2], r2[0]), t.mul(r1[0], r2[2]));
                    let c2 = t.sub(t.mul(r1[0], r2[1]), t.mul(r1[1], r2[0]));
                    if c0.is_zero() && c1.is_zero() && c2.is_zero() {
                        continue;
                    }
                    for r3 in &rows {
                        let det = t.add(
                            t.add(t.mul(c0, r3[0]), t.mul(c1, r3[1])),
                            t.mul(c2, r3[2]),
                        );
                        if det.is_zero() {
                            continue;
                        }
                        let m = Mat::from_rows(&[&r1[..3], &r2[..3], &r3[..3]]);
                        if keep(&m) {
                            out.push(m);
                        }
                    }
                }
            }
        }
        _ => unreachable!(),
    }
    out
}

/// Greedy generating set: repeatedly adjoin the least element outside the
/// subgroup generated so far; the final closure check certifies the result.
fn certified_generators(
    t: &FieldTower,
    elems: &[Mat],
    sorted_keys: &[(u64, u32)],
    identity: u32,
) -> Vec<u32> {
    let lookup = |m: &Mat| -> u32 {
        let key = m.encode(t);
        let pos = sorted_keys
            .binary_search_by_key(&key, |&(k, _)| k)
            .expect("closure left the group");
        sorted_keys[pos].1
    };
    let order = elems.len();
    let mut gens: Vec<u32> = Vec::new();
    let mut reached = vec![false; order];
    let mut reached_count = closure(t, elems, &lookup, identity, &gens, &mut reached);
    let mut scan_from = 0usize;
    while reached_count < order {
        let next = (scan_from..order)
            .find(|&i| !reached[i])
            .expect("closure smaller than group but no element missing") as u32;
        scan_from = next as usize + 1;
        gens.push(next);
        reached_count = closure(t, elems, &lookup, identity, &gens, &mut reached);
    }
    gens
}

/// Breadth-first closure of `gens` from the identity under right products.
/// Returns the closure size; `reached` is overwritten.
fn closure(
    t: &FieldTower,
    elems: &[Mat],
    lookup: &dyn Fn(&Mat) -> u32,
    identity: u32,
    gens: &[u32],
    reached: &mut [bool],
) -> usize {
    for r in reached.iter_mut() {
        *r = false;
    }
    reached[identity as usize] = true;
    let mut frontier = vec![identity];
    let mut count = 1usize;
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = lookup(&elems[x as usize].mul(t, &elems[g as usize]));
            if !reached[y as usize] {
                reached[y as usize] = true;
                count += 1;
                frontier.push(y);
            }
        }
    }
    count
}

/// Upper unitriangular matrices over the extension field, in counter order
/// of the above-diagonal entries.
pub fn unitriangular_elements(tower: &FieldTower, n: u8) -> Vec<Mat> {
    assert!((2..=3).contains(&n), "unitriangular subgroup needs n in 2..=3");
    let dom: Vec<FFElem> = tower.elements().collect();
    let slots: &[(u8, u8)] = match n {
        2 => &[(0, 1)],
        _ => &[(0, 1), (0, 2), (1, 2)],
    };
    let s = dom.len();
    let total = s.pow(slots.len() as u32);
    let mut out = Vec::with_capacity(total);
    for mut c in 0..total {
        let mut m = Mat::identity(n);
        for &(i, j) in slots.iter().rev() {
            m.set(i, j, dom[c % s]);
            c /= s;
        }
        out.push(m);
    }
    out
}
