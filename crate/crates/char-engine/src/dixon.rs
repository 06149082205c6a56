//! Character table computation: modular eigenvector method plus exact lift.
//!
//! The table is found in three stages.
//!
//! 1. Modulo a prime `l = 1 (mod e)` (with `e` the group exponent and
//!    `l > 2 sqrt(|G|)`), the central characters are the common
//!    eigenvectors of the class multiplication matrices.  Starting from
//!    the full space of class functions, blocks are repeatedly split into
//!    eigenspaces of class matrices until every block is a line.
//!
//! 2. Degrees follow from the orthogonality relation
//!    `d^2 = |G| / sum_m w_m w_{m*} / |C_m|` (all modulo `l`); the true
//!    degree is the unique square root below `l/2`.
//!
//! 3. Exact values are recovered by inverse discrete Fourier transform
//!    over each cyclic group generated by a class representative: the
//!    eigenvalue multiplicities of a character on `g` are integers in
//!    `[0, degree]`, hence readable from their residues.  One transform
//!    per power-closure anchor propagates to every class in the orbit
//!    by exponent rotation; agreement of overlapping propagations and a
//!    final whole-table reduction check close the loop.

use group_engine::{ConjugacyClasses, MatrixGroup};

use crate::cyclo::CharValue;
use crate::modular::{
    charpoly_of_hessenberg, choose_ell, fits_delayed, hessenberg_kernel, mod_inv, mod_pow, mul,
    poly_roots, primes_one_mod, root_of_unity, submul, ModMatrix,
};
use crate::table::{CharacterTable, GroupTag, VerificationReport};

/// Computes the full exact character table of an enumerated group.
pub fn compute_character_table(
    group: &MatrixGroup,
    classes: &ConjugacyClasses,
) -> CharacterTable {
    let k = classes.count();
    let order = group.order();
    let e = classes.exponent();
    let ell = choose_ell(order, e);
    let z = root_of_unity(ell, e);

    let w = central_character_vectors(group, classes, ell);
    assert_eq!(w.len(), k, "expected one eigenvector per class");

    // Degrees from the orthogonality relation, then unique square roots.
    let sizes: Vec<u64> = (0..k as u32).map(|c| classes.size(c)).collect();
    let inv_sizes: Vec<u64> = sizes.iter().map(|&h| mod_inv(h % ell, ell)).collect();
    let degrees: Vec<u64> = w
        .iter()
        .map(|wv| {
            let mut t = 0u64;
            for m in 0..k {
                let m_inv = classes.inverse_class(m as u32) as usize;
                t = (t + mul(mul(wv[m], wv[m_inv], ell), inv_sizes[m], ell)) % ell;
            }
            let dsq = mul(order % ell, mod_inv(t, ell), ell);
            let d = (1..ell.div_ceil(2))
                .find(|&r| mul(r, r, ell) == dsq)
                .expect("no degree square root below l/2");
            d
        })
        .collect();
    let total: u128 = degrees.iter().map(|&d| d as u128 * d as u128).sum();
    assert_eq!(total, order as u128, "squared degrees must sum to the group order");

    // Character values modulo l.
    let chi_ell: Vec<Vec<u64>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|m| mul(mul(degrees[i] % ell, w[i][m], ell), inv_sizes[m], ell))
                .collect()
        })
        .collect();

    let values = lift_values(group, classes, &degrees, &chi_ell, e, ell, z);

    // Whole-table consistency: every exact value reduces to its residue.
    for i in 0..k {
        for m in 0..k {
            assert_eq!(
                values[i][m].eval_mod(ell, z, e),
                chi_ell[i][m],
                "lifted value disagrees with its modular residue"
            );
        }
    }

    // Canonical character order: by degree, then value list.
    let mut perm: Vec<usize> = (0..k).collect();
    perm.sort_by(|&a, &b| {
        (degrees[a], &values[a]).cmp(&(degrees[b], &values[b]))
    });
    let degrees: Vec<u64> = perm.iter().map(|&i| degrees[i]).collect();
    let values: Vec<Vec<CharValue>> = perm.iter().map(|&i| values[i].clone()).collect();

    let tower = group.tower();
    let class_rep_keys: Vec<u64> = (0..k as u32)
        .map(|c| group.mat(classes.rep(c)).encode(tower))
        .collect();
    let class_det_scan: Vec<u32> = (0..k as u32)
        .map(|c| group.mat(classes.rep(c)).det(tower).scan_index())
        .collect();

    let mut table = CharacterTable {
        tag: GroupTag::of(group),
        group_order: order,
        exponent: e,
        ell,
        class_sizes: sizes,
        class_orders: (0..k as u32).map(|c| classes.element_order(c)).collect(),
        class_rep_keys,
        class_det_scan,
        inverse_class: (0..k as u32).map(|c| classes.inverse_class(c)).collect(),
        galois_class: (0..k as u32).map(|c| classes.galois_class(c)).collect(),
        degrees,
        values,
        verification: VerificationReport {
            sum_of_squares_ok: false,
            power_galois_ok: false,
            row_orthogonality_ok: false,
            column_orthogonality_ok: false,
            elementwise_ok: None,
            identity_column_ok: false,
        },
    };
    table.verification = verify_table(&table, group, classes);
    table
}

/// One reduced-echelon invariant subspace during splitting.
struct Block {
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Block {
    fn from_vectors(vecs: Vec<Vec<u64>>, p: u64) -> Block {
        let width = vecs[0].len();
        let mut rows: Vec<Vec<u64>> = Vec::new();
        let mut pivots: Vec<usize> = Vec::new();
        for mut v in vecs {
            for (r, row) in rows.iter().enumerate() {
                let c = v[pivots[r]];
                if c != 0 {
                    for j in 0..width {
                        v[j] = submul(v[j], c, row[j], p);
                    }
                }
            }
            if let Some(pc) = (0..width).find(|&j| v[j] != 0) {
                let inv = mod_inv(v[pc], p);
                for x in v.iter_mut() {
                    *x = mul(*x, inv, p);
                }
                // Clear this pivot from existing rows to keep them reduced.
                for row in rows.iter_mut() {
                    let c = row[pc];
                    if c != 0 {
                        for j in 0..width {
                            row[j] = submul(row[j], c, v[j], p);
                        }
                    }
                }
                rows.push(v);
                pivots.push(pc);
            }
        }
        Block { rows, pivots }
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }

    fn coords_of(&self, v: &[u64], p: u64) -> Vec<u64> {
        let mut coords = vec![0u64; self.rows.len()];
        if fits_delayed(self.rows.len(), p) {
            // Keep the working vector unreduced; each stored entry stays
            // below dim * p^2 and only the pivot reads need a residue.
            let mut w = v.to_vec();
            for (r, row) in self.rows.iter().enumerate() {
                let c = w[self.pivots[r]] % p;
                coords[r] = c;
                if c != 0 {
                    let neg = p - c;
                    for (slot, &x) in w.iter_mut().zip(row) {
                        *slot += neg * x;
                    }
                }
            }
            assert!(
                w.iter().all(|&x| x % p == 0),
                "vector left its invariant subspace during splitting"
            );
            return coords;
        }
        let mut v = v.to_vec();
        for (r, row) in self.rows.iter().enumerate() {
            let c = v[self.pivots[r]];
            coords[r] = c;
            if c != 0 {
                for j in 0..v.len() {
                    v[j] = submul(v[j], c, row[j], p);
                }
            }
        }
        assert!(
            v.iter().all(|&x| x == 0),
            "vector left its invariant subspace during splitting"
        );
        coords
    }
}

/// The class multiplication matrix `B_i` modulo `l`:
/// `(B_i)[j][m] = #! {x in C_i : x^-1 g_m in C_j}`, so that central
/// character vectors satisfy `B_i w = w_i w`.
fn class_matrix(group: &MatrixGroup, classes: &ConjugacyClasses, i: u32, ell: u64) -> ModMatrix {
    let k = classes.count();
    let mut b = ModMatrix::zero(k, ell);
    let x_invs: Vec<u32> = classes
        .members(i)
        .iter()
        .map(|&x| group.inverse_of(x))
        .collect();
    for m in 0..k as u32 {
        let gm = classes.rep(m);
        for &xi in &x_invs {
            let j = classes.class_of(group.mul_idx(xi, gm));
            let cur = b.get(j as usize, m as usize);
            b.set(j as usize, m as usize, (cur + 1) % ell);
        }
    }
    b
}

/// Splits the space of class functions into the common eigenlines of the
/// class matrices; returns the normalized central character vectors.
fn central_character_vectors(
    group: &MatrixGroup,
    classes: &ConjugacyClasses,
    ell: u64,
) -> Vec<Vec<u64>> {
    let k = classes.count();
    let full = Block::from_vectors(
        (0..k)
            .map(|j| {
                let mut v = vec![0u64; k];
                v[j] = 1;
                v
            })
            .collect(),
        ell,
    );
    let mut blocks = vec![full];

    // Classes of equal size usually lie in one geometric family and carry
    // parallel information: a block their matrices all act on by a scalar
    // stays unsplit however many of them are tried.  Round-robin across
    // the size families (descending element order within each, which
    // favours the most regular representatives) so that complementary
    // families are probed early.
    let mut families: std::collections::BTreeMap<u64, Vec<u32>> = Default::default();
    for c in 1..k as u32 {
        families.entry(classes.size(c)).or_default().push(c);
    }
    let mut lists: Vec<Vec<u32>> = families.into_values().rev().collect();
    for list in lists.iter_mut() {
        list.sort_by_key(|&c| (u64::MAX - classes.element_order(c), c));
    }
    let mut try_order: Vec<u32> = Vec::with_capacity(k - 1);
    for round in 0.. {
        let before = try_order.len();
        for list in &lists {
            if let Some(&c) = list.get(round) {
                try_order.push(c);
            }
        }
        if try_order.len() == before {
            break;
        }
    }

    for &i in &try_order {
        if blocks.iter().all(|b| b.dim() == 1) {
            break;
        }
        let bmat = class_matrix(group, classes, i, ell);
        let mut next: Vec<Block> = Vec::new();
        for block in blocks {
            if block.dim() == 1 {
                next.push(block);
                continue;
            }
            next.extend(split_block(block, &bmat, ell));
        }
        blocks = next;
    }
    assert!(
        blocks.iter().all(|b| b.dim() == 1),
        "class matrices failed to separate all characters"
    );

    blocks
        .iter()
        .map(|b| {
            let v = &b.rows[0];
            assert_ne!(v[0], 0, "central character vanishes on the identity class");
            let inv = mod_inv(v[0], ell);
            v.iter().map(|&x| mul(x, inv, ell)).collect()
        })
        .collect()
}

fn split_block(block: Block, bmat: &ModMatrix, ell: u64) -> Vec<Block> {
    let d = block.dim();
    let mut action = ModMatrix::zero(d, ell);
    for (c, row) in block.rows.iter().enumerate() {
        let image = bmat.matvec(row);
        let coords = block.coords_of(&image, ell);
        for (r, &x) in coords.iter().enumerate() {
            action.set(r, c, x);
        }
    }
    // One Hessenberg reduction serves both the characteristic polynomial
    // and every eigenspace: the kernel of a shifted Hessenberg matrix is
    // quadratic in the dimension, so splitting costs one cubic reduction
    // per block rather than one per eigenvalue.
    let (hess, back) = action.hessenberg_similarity();
    let roots = poly_roots(&charpoly_of_hessenberg(&hess), ell);
    let width = block.rows[0].len();
    let delayed = fits_delayed(d, ell);
    let mut out: Vec<Block> = Vec::new();
    let mut covered = 0usize;
    for lam in roots {
        let kernel = hessenberg_kernel(&hess, lam);
        if kernel.is_empty() {
            continue;
        }
        covered += kernel.len();
        let vecs: Vec<Vec<u64>> = kernel
            .iter()
            .map(|kv| {
                let coefs = back.matvec(kv);
                let mut v = vec![0u64; width];
                if delayed {
                    for (c, &coef) in coefs.iter().enumerate() {
                        if coef != 0 {
                            for (slot, &x) in v.iter_mut().zip(&block.rows[c]) {
                                *slot += coef * x;
                            }
                        }
                    }
                    for slot in v.iter_mut() {
                        *slot %= ell;
                    }
                } else {
                    for (c, &coef) in coefs.iter().enumerate() {
                        if coef != 0 {
                            for (j, &x) in block.rows[c].iter().enumerate() {
                                v[j] = (v[j] + mul(coef, x, ell)) % ell;
                            }
                        }
                    }
                }
                v
            })
            .collect();
        out.push(Block::from_vectors(vecs, ell));
    }
    assert_eq!(
        covered, d,
        "class matrix restriction is not diagonalizable (eigenspaces too small)"
    );
    out
}

/// Lifts modular values to exact root-of-unity multisets.
fn lift_values(
    group: &MatrixGroup,
    classes: &ConjugacyClasses,
    degrees: &[u64],
    chi_ell: &[Vec<u64>],
    e: u64,
    ell: u64,
    z: u64,
) -> Vec<Vec<CharValue>> {
    let k = classes.count();
    let mut values: Vec<Vec<Option<CharValue>>> = vec![vec![None; k]; k];

    // Anchors: descending element order so each transform covers as many
    // classes as possible through the power orbit.
    let mut anchor_order: Vec<u32> = (0..k as u32).collect();
    anchor_order.sort_by_key(|&c| (u64::MAX - classes.element_order(c), c));

    for &anchor in &anchor_order {
        if values[0][anchor as usize].is_some() {
            continue;
        }
        let o = classes.element_order(anchor) as usize;
        // Power sequence: class of rep^s for s = 0..o.
        let rep = classes.rep(anchor);
        let mut ps = Vec::with_capacity(o);
        let mut cur = group.identity_index();
        for _ in 0..o {
            ps.push(classes.class_of(cur) as usize);
            cur = group.mul_idx(cur, rep);
        }
        assert_eq!(cur, group.identity_index());

        let zo = mod_pow(z, e / o as u64, ell);
        let mut zo_pows = vec![1u64; o];
        for j in 1..o {
            zo_pows[j] = mul(zo_pows[j - 1], zo, ell);
        }
        let inv_o = mod_inv(o as u64 % ell, ell);

        let delayed = fits_delayed(o, ell);
        for chr in 0..k {
            // Inverse transform: multiplicity of zeta_o^t among the
            // eigenvalues on the anchor element.
            let cvals: Vec<u64> = ps.iter().map(|&c| chi_ell[chr][c]).collect();
            let mut mults = vec![0u32; o];
            let mut mult_total = 0u64;
            for (t, slot) in mults.iter_mut().enumerate() {
                // The root index steps down by t modulo o as s advances.
                let mut acc = 0u64;
                let mut idx = 0usize;
                if delayed {
                    for &cv in &cvals {
                        acc += cv * zo_pows[idx];
                        idx = if idx < t { idx + o - t } else { idx - t };
                    }
                    acc %= ell;
                } else {
                    for &cv in &cvals {
                        acc = (acc + mul(cv, zo_pows[idx], ell)) % ell;
                        idx = if idx < t { idx + o - t } else { idx - t };
                    }
                }
                let m = mul(acc, inv_o, ell);
                assert!(
                    m <= degrees[chr],
                    "eigenvalue multiplicity exceeds the degree"
                );
                *slot = m as u32;
                mult_total += m;
            }
            assert_eq!(mult_total, degrees[chr], "multiplicities must sum to the degree");

            // Propagate to the whole power orbit by exponent rotation:
            // on rep^s the eigenvalue zeta_o^t becomes zeta_o^(t s).
            for s in 0..o {
                let c = ps[s];
                let value = CharValue::new(
                    o as u32,
                    mults
                        .iter()
                        .enumerate()
                        .map(|(t, &m)| ((((t * s) % o) as u32), m)),
                );
                match &values[chr][c] {
                    None => values[chr][c] = Some(value),
                    Some(prev) => assert_eq!(
                        prev, &value,
                        "inconsistent propagation across the power orbit"
                    ),
                }
            }
        }
    }

    values
        .into_iter()
        .map(|row| row.into_iter().map(|v| v.expect("unlifted class")).collect())
        .collect()
}

/// Generating set of the unit group modulo `e` (one generator per cyclic
/// factor of each prime-power component, lifted by the remainder theorem).
fn unit_group_generators(e: u64) -> Vec<u64> {
    if e <= 2 {
        return vec![1];
    }
    let mut comps: Vec<u64> = Vec::new();
    let mut rest = e;
    for p in crate::modular::prime_factors(e) {
        let mut pe = 1u64;
        while rest % p == 0 {
            rest /= p;
            pe *= p;
        }
        comps.push(pe);
    }
    let mut gens: Vec<u64> = Vec::new();
    for &m in &comps {
        let others = e / m;
        // Generators of the unit group mod m.
        let local: Vec<u64> = if m % 2 == 0 && m >= 8 {
            vec![m - 1, 5 % m]
        } else if m == 4 {
            vec![3]
        } else if m == 2 {
            vec![1]
        } else {
            // Odd prime power: cyclic; brute-force a generator.
            let phi = m - m / crate::modular::prime_factors(m)[0];
            let g = (2..m)
                .find(|&g| {
                    g % crate::modular::prime_factors(m)[0] != 0
                        && crate::modular::prime_factors(phi)
                            .iter()
                            .all(|&r| mod_pow(g, phi / r, m) != 1)
                })
                .expect("no generator of an odd prime power unit group");
            vec![g]
        };
        for g in local {
            // u = g mod m, u = 1 mod (e/m).
            let u = (0..)
                .map(|t| g + t * m)
                .find(|&u| u % others == 1 % others.max(1))
                .expect("remainder lift failed");
            gens.push(u % e);
        }
    }
    gens
}

/// Build-time verification; see [`VerificationReport`] for the meaning of
/// each field.
fn verify_table(
    table: &CharacterTable,
    group: &MatrixGroup,
    classes: &ConjugacyClasses,
) -> VerificationReport {
    let k = table.k();
    let e = table.exponent;
    let order = table.group_order;

    let sum_of_squares_ok = table
        .degrees
        .iter()
        .map(|&d| d as u128 * d as u128)
        .sum::<u128>()
        == order as u128;

    let identity_column_ok = (0..k).all(|i| {
        table.values[i][0].is_integer(u32::try_from(table.degrees[i]).unwrap())
    });

    // Power-Galois closure over generators of the units modulo e; closure
    // under composition extends it to every residue coprime to e.
    let mut power_galois_ok = true;
    'outer: for &u in &unit_group_generators(e) {
        for m in 0..k as u32 {
            let pc = classes.power_class(group, m, u) as usize;
            if table.class_sizes[pc] != table.class_sizes[m as usize] {
                power_galois_ok = false;
                break 'outer;
            }
            for i in 0..k {
                if table.values[i][pc] != table.values[i][m as usize].galois(u) {
                    power_galois_ok = false;
                    break 'outer;
                }
            }
        }
    }

    // Residue systems for the orthogonality sums: enough primes that the
    // archimedean bound |sum| <= |G| d_max^2 leaves a unique integer.
    let dmax = *table.degrees.iter().max().unwrap();
    let bound = order as u128 * (dmax as u128) * (dmax as u128);
    let mut primes: Vec<u64> = vec![table.ell];
    while primes.iter().map(|&p| p as u128).product::<u128>() <= 2 * bound + order as u128 {
        let last = *primes.last().unwrap();
        primes.push(primes_one_mod(e, last, 1)[0]);
    }

    let mut row_orthogonality_ok = true;
    let mut column_orthogonality_ok = true;
    let small = order <= 5000;
    let mut elementwise_ok = if small { Some(true) } else { None };

    for &p in &primes {
        let z = root_of_unity(p, e);
        let zinv = mod_inv(z, p);
        // a[i][m] = chi_i(m) mod p; c[i][m] = conj(chi_i(m)) mod p.
        let mut a = ModMatrix::zero(k, p);
        let mut c = ModMatrix::zero(k, p);
        for i in 0..k {
            for m in 0..k {
                a.set(i, m, table.values[i][m].eval_mod(p, z, e));
                c.set(i, m, table.values[i][m].eval_mod(p, zinv, e));
            }
        }
        // Row orthogonality: A * diag(h) * C^T == |G| I.
        let mut hc = ModMatrix::zero(k, p);
        for j in 0..k {
            let h = table.class_sizes[j] % p;
            for i in 0..k {
                hc.set(j, i, mul(h, c.get(i, j), p));
            }
        }
        let gram = a.matmul(&hc);
        for i in 0..k {
            for j in 0..k {
                let want = if i == j { order % p } else { 0 };
                if gram.get(i, j) != want {
                    row_orthogonality_ok = false;
                }
            }
        }
        // Column orthogonality: C^T' A' ... = diag(|G| / h_m); verify
        // sum_i conj(chi_i(m)) chi_i(m') directly.
        let mut ct = ModMatrix::zero(k, p);
        for m in 0..k {
            for i in 0..k {
                ct.set(m, i, c.get(i, m));
            }
        }
        let col = ct.matmul(&a);
        for m in 0..k {
            for m2 in 0..k {
                let want = if m == m2 { (order / table.class_sizes[m]) % p } else { 0 };
                if col.get(m, m2) != want {
                    column_orthogonality_ok = false;
                }
            }
        }
        // Literal element-by-element accumulation for small groups.
        if small {
            let class_of: Vec<usize> = (0..group.order() as u32)
                .map(|g| classes.class_of(g) as usize)
                .collect();
            for i in 0..k {
                for j in 0..k {
                    let mut acc = 0u64;
                    for &cm in &class_of {
                        acc = (acc + mul(a.get(i, cm), c.get(j, cm), p)) % p;
                    }
                    if acc != gram.get(i, j) {
                        elementwise_ok = Some(false);
                    }
                }
            }
        }
    }

    VerificationReport {
        sum_of_squares_ok,
        power_galois_ok,
        row_orthogonality_ok,
        column_orthogonality_ok,
        elementwise_ok,
        identity_column_ok,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ff_core::{FieldTower, Side};
    use group_engine::GroupKind;
    use std::sync::Arc;

    fn table_for(p: u32, kind: GroupKind, n: u8, side: Side) -> CharacterTable {
        let t = Arc::new(FieldTower::build(p, 1).unwrap());
        let g = MatrixGroup::build(kind, n, side, t, None).unwrap();
        let cc = ConjugacyClasses::compute(&g);
        compute_character_table(&g, &cc)
    }

    #[test]
    fn unit_group_generators_generate() {
        for e in [12u64, 24, 84, 120, 240, 420, 3120] {
            let gens = unit_group_generators(e);
            // Close under multiplication and count the subgroup.
            let mut reached = std::collections::BTreeSet::new();
            reached.insert(1u64);
            let mut frontier = vec![1u64];
            while let Some(x) = frontier.pop() {
                for &g in &gens {
                    let y = x * g % e;
                    if reached.insert(y) {
                        frontier.push(y);
                    }
                }
            }
            let phi = (1..=e).filter(|&u| crate::cyclo::gcd(u as u32, e as u32) == 1).count();
            assert_eq!(reached.len(), phi, "generators fail for modulus {e}");
        }
    }

    #[test]
    fn smallest_general_linear_table() {
        let t = table_for(3, GroupKind::GL, 2, Side::Base);
        assert_eq!(t.k(), 8);
        assert_eq!(t.degree_multiset(), vec![1, 1, 2, 2, 2, 3, 3, 4]);
        assert!(t.verification.all_ok(), "verification failed: {:?}", t.verification);
        assert_eq!(t.ell, 73);
        assert_eq!(t.exponent, 24);
        // Canonical order puts the trivial character first.
        assert!(t.values[0].iter().all(|v| v.is_integer(1)));
    }

    #[test]
    fn special_linear_table_over_three_elements() {
        let t = table_for(3, GroupKind::SL, 2, Side::Base);
        assert_eq!(t.k(), 7);
        assert_eq!(t.degree_multiset(), vec![1, 1, 1, 2, 2, 2, 3]);
        assert!(t.verification.all_ok());
        assert_eq!((t.exponent, t.ell), (12, 13));
    }

    #[test]
    fn unitary_table() {
        let t = table_for(3, GroupKind::U, 2, Side::Ext);
        assert_eq!(t.group_order, 96);
        assert!(t.verification.all_ok());
        // Contains order-8 elements such as [[0,1],[z,0]] with z of order 4
        // (the square is the scalar z), so the exponent is 24.
        assert_eq!((t.exponent, t.ell), (24, 73));
        assert!(t.class_orders.iter().all(|&o| 24 % o == 0));
        assert!(t.class_orders.contains(&8));
    }

    #[test]
    fn extension_general_linear_table_degree_structure() {
        let t = table_for(3, GroupKind::GL, 2, Side::Ext);
        assert_eq!(t.k(), 80);
        let mut expected = vec![];
        expected.extend(std::iter::repeat(1u64).take(8));
        expected.extend(std::iter::repeat(8).take(36));
        expected.extend(std::iter::repeat(9).take(8));
        expected.extend(std::iter::repeat(10).take(28));
        expected.sort_unstable();
        assert_eq!(t.degree_multiset(), expected);
        assert!(t.verification.all_ok());
        assert!(t.verification.elementwise_ok.is_none(), "5760 exceeds the literal-scan bound");
    }

    #[test]
    fn general_linear_five_table() {
        let t = table_for(5, GroupKind::GL, 2, Side::Base);
        assert_eq!(t.k(), 24);
        let mut expected: Vec<u64> = vec![];
        expected.extend(std::iter::repeat(1u64).take(4));
        expected.extend(std::iter::repeat(4).take(10));
        expected.extend(std::iter::repeat(5).take(4));
        expected.extend(std::iter::repeat(6).take(6));
        expected.sort_unstable();
        assert_eq!(t.degree_multiset(), expected);
        assert!(t.verification.all_ok());
        assert_eq!(t.verification.elementwise_ok, Some(true));
    }

    #[test]
    fn dual_classes_carry_conjugate_values() {
        // chi(g^-1) = conj(chi(g)) for every character: a table-level
        // identity that exercises inverse_class and conj together.
        let t = table_for(3, GroupKind::GL, 2, Side::Base);
        for i in 0..t.k() {
            for m in 0..t.k() {
                let minv = t.inverse_class[m] as usize;
                assert_eq!(t.values[i][minv], t.values[i][m].conj());
            }
        }
    }
}
