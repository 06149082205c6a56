//! Streamed double-coset decomposition for an ambient group too large to
//! enumerate.
//!
//! The twisted involutions `S = { s : s * sigma(s) = 1 }` number only
//! `|G| / |H|`, so they can be found by scanning all of matrix space with
//! tight lookup tables and an early-exit product test, without ever holding
//! `G`.  `H`-orbits on `S` are then computed exactly as in the enumerated
//! path.  What cannot be read off directly is `G`-conjugacy inside `S`;
//! for that the scan certifies conjugacy through the rational canonical
//! form: for matrices of size at most three, the pair (characteristic
//! polynomial, minimal polynomial) determines the full invariant-factor
//! chain, hence the conjugacy class.  The same invariant is cross-checked
//! against literal conjugacy on a pair small enough to enumerate (see the
//! integration tests).

use std::collections::BTreeMap;
use std::sync::Arc;

use ff_core::{FFElem, FieldTower, Side};

use crate::cosets::{CosetMethod, DoubleCosetReport};
use crate::group::{order_formula, GroupKind, MatrixGroup};
use crate::matrix::Mat;
use crate::par::par_map_ranges;

/// Conjugacy invariant for `n <= 3`: ascending coefficient lists (as entry
/// scan indices) of the characteristic and minimal polynomials.
///
/// Why this is complete for `n <= 3`: the invariant factors
/// `d_1 | d_2 | ... | d_k` satisfy `d_k = ` minimal polynomial and
/// `prod d_i = ` characteristic polynomial.  With total degree at most 3,
/// the degree split is forced: if `deg d_k = 3` there is one factor; if
/// `deg d_k = 2` the remaining degree-1 factor is the quotient; if
/// `deg d_k = 1` the matrix is scalar and all factors equal it.
pub fn rcf_key(t: &FieldTower, m: &Mat) -> (Vec<u32>, Vec<u32>) {
    (charpoly(t, m), minpoly(t, m))
}

/// Ascending coefficients of `det(xI - m)` as scan indices.
fn charpoly(t: &FieldTower, m: &Mat) -> Vec<u32> {
    let tr = m.trace(t);
    match m.n() {
        1 => vec![t.neg(m.get(0, 0)).scan_index(), FFElem::ONE.scan_index()],
        2 => vec![
            m.det(t).scan_index(),
            t.neg(tr).scan_index(),
            FFElem::ONE.scan_index(),
        ],
        3 => {
            // Sum of principal 2x2 minors.
            let mut c1 = FFElem::ZERO;
            for (i, j) in [(0u8, 1u8), (0, 2), (1, 2)] {
                let minor = t.sub(
                    t.mul(m.get(i, i), m.get(j, j)),
                    t.mul(m.get(i, j), m.get(j, i)),
                );
                c1 = t.add(c1, minor);
            }
            vec![
                t.neg(m.det(t)).scan_index(),
                c1.scan_index(),
                t.neg(tr).scan_index(),
                FFElem::ONE.scan_index(),
            ]
        }
        _ => unreachable!(),
    }
}

/// Ascending coefficients of the monic minimal polynomial, found by exact
/// Gaussian elimination on the flattened powers `I, m, m^2, ...`.
fn minpoly(t: &FieldTower, m: &Mat) -> Vec<u32> {
    let n = m.n() as usize;
    let dim = n * n;
    let mut basis: Vec<(Vec<FFElem>, Vec<FFElem>)> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    let mut power = Mat::identity(m.n());
    for k in 0..=n {
        let mut v: Vec<FFElem> = (0..dim)
            .map(|i| power.get((i / n) as u8, (i % n) as u8))
            .collect();
        let mut coeff = vec![FFElem::ZERO; k + 1];
        coeff[k] = FFElem::ONE;
        for (b, (bv, bc)) in basis.iter().enumerate() {
            let p = pivots[b];
            if v[p].is_zero() {
                continue;
            }
            let factor = t.mul(v[p], t.inv(bv[p]));
            for i in 0..dim {
                v[i] = t.sub(v[i], t.mul(factor, bv[i]));
            }
            for (i, &c) in bc.iter().enumerate() {
                coeff[i] = t.sub(coeff[i], t.mul(factor, c));
            }
        }
        match (0..dim).find(|&i| !v[i].is_zero()) {
            Some(p) => {
                pivots.push(p);
                basis.push((v, coeff));
                power = power.mul(t, m);
            }
            // First linear dependency: the relation coefficients are the
            // minimal polynomial (monic since index k was never touched).
            None => return coeff.iter().map(|c| c.scan_index()).collect(),
        }
    }
    unreachable!("a matrix of size n satisfies a polynomial of degree <= n")
}

/// Scans all matrices over the extension field for twisted involutions,
/// returning their packed keys in ascending order.  Pure table lookups on
/// entry scan indices with an early-exit product test.
fn scan_twisted_involutions(t: &FieldTower, n: u8, threads: usize) -> Vec<u64> {
    let s = t.qq() as usize;
    let mut mul_t = vec![0u8; s * s];
    let mut add_t = vec![0u8; s * s];
    let mut sigma_t = vec![0u8; s];
    for a in 0..s {
        let ea = FFElem::from_scan_index(a as u32);
        sigma_t[a] = t.frobenius(ea).scan_index() as u8;
        for b in 0..s {
            let eb = FFElem::from_scan_index(b as u32);
            mul_t[a * s + b] = t.mul(ea, eb).scan_index() as u8;
            add_t[a * s + b] = t.add(ea, eb).scan_index() as u8;
        }
    }
    let nn = (n as usize) * (n as usize);
    let total = (s as u64).pow(nn as u32);
    let chunks = par_map_ranges(total, threads, |lo, hi| {
        let mut hits: Vec<u64> = Vec::new();
        let mut d = [0u8; 9];
        let mut rem = lo;
        for slot in d.iter_mut().take(nn) {
            *slot = (rem % s as u64) as u8;
            rem /= s as u64;
        }
        for key in lo..hi {
            if product_with_twist_is_identity(&mul_t, &add_t, &sigma_t, s, n as usize, &d) {
                hits.push(key);
            }
            let mut i = 0;
            loop {
                d[i] += 1;
                if (d[i] as usize) < s {
                    break;
                }
                d[i] = 0;
                i += 1;
                if i == nn {
                    break;
                }
            }
        }
        hits
    });
    chunks.concat()
}

/// Tests `g * sigma(g) == I` on packed digits (`d[i*n+j]` is entry (i,j)).
#[inline]
fn product_with_twist_is_identity(
    mul_t: &[u8],
    add_t: &[u8],
    sigma_t: &[u8],
    s: usize,
    n: usize,
    d: &[u8; 9],
) -> bool {
    // Scan indices: 0 encodes the zero entry, 1 encodes one.
    for i in 0..n {
        for j in 0..n {
            let mut acc = 0usize;
            for k in 0..n {
                let a = d[i * n + k] as usize;
                let b = sigma_t[d[k * n + j] as usize] as usize;
                acc = add_t[acc * s + mul_t[a * s + b] as usize] as usize;
            }
            let want = usize::from(i == j);
            if acc != want {
                return false;
            }
        }
    }
    true
}

/// Decomposes `H \ GL_n(extension) / H` without enumerating the ambient
/// group.  `h` must be the base-side `GL_n` over the same tower.
pub fn streamed_double_cosets(
    tower: &Arc<FieldTower>,
    n: u8,
    h: &MatrixGroup,
    threads: usize,
) -> DoubleCosetReport {
    assert!((2..=3).contains(&n), "streamed path supports n in 2..=3");
    assert_eq!(h.kind(), GroupKind::GL, "streamed path decomposes GL pairs");
    assert_eq!(h.side(), Side::Base, "subgroup must live on the base side");
    assert_eq!(h.n(), n);
    assert_eq!(
        (h.tower().p(), h.tower().f()),
        (tower.p(), tower.f()),
        "tower mismatch between G and H"
    );
    let t = tower.as_ref();
    let g_order = order_formula(GroupKind::GL, n, Side::Ext, t);
    let h_order = h.order();

    let s_keys = scan_twisted_involutions(t, n, threads);
    let s_mats: Vec<Mat> = s_keys.iter().map(|&k| Mat::decode(t, n, k)).collect();
    let s_size = s_keys.len() as u64;
    let s_matches_index = g_order % h_order == 0 && s_size == g_order / h_order;
    let locate = |m: &Mat| -> Option<u32> {
        let key = m.encode(t);
        s_keys.binary_search(&key).ok().map(|p| p as u32)
    };

    // H-conjugation orbits on S (H generators act as explicit matrices).
    let h_gen_mats: Vec<(Mat, Mat)> = h
        .generators()
        .iter()
        .map(|&gi| {
            let m = *h.mat(gi);
            (m, m.inv(t))
        })
        .collect();
    let mut orbit_of = vec![u32::MAX; s_mats.len()];
    let mut orbit_members: Vec<Vec<u32>> = Vec::new();
    for pos in 0..s_mats.len() as u32 {
        if orbit_of[pos as usize] != u32::MAX {
            continue;
        }
        let oid = orbit_members.len() as u32;
        orbit_of[pos as usize] = oid;
        let mut members = vec![pos];
        let mut frontier = vec![pos];
        while let Some(x) = frontier.pop() {
            for (hm, hminv) in &h_gen_mats {
                let y = hm.mul(t, &s_mats[x as usize]).mul(t, hminv);
                let ypos = locate(&y).expect("H-conjugation left the twisted involutions");
                if orbit_of[ypos as usize] == u32::MAX {
                    orbit_of[ypos as usize] = oid;
                    members.push(ypos);
                    frontier.push(ypos);
                }
            }
        }
        members.sort_unstable();
        orbit_members.push(members);
    }
    let num_cosets = orbit_members.len();

    // G-conjugacy inside S via the rational-canonical-form invariant: each
    // invariant bucket must be a single H-orbit.
    let mut bucket_orbit: BTreeMap<(Vec<u32>, Vec<u32>), u32> = BTreeMap::new();
    let mut g_conj_implies_h_conj = true;
    for (pos, sm) in s_mats.iter().enumerate() {
        let key = rcf_key(t, sm);
        let o = orbit_of[pos];
        match bucket_orbit.get(&key) {
            None => {
                bucket_orbit.insert(key, o);
            }
            Some(&prev) => {
                if prev != o {
                    g_conj_implies_h_conj = false;
                }
            }
        }
    }

    // Constructive coset representative for each orbit: solve
    // g = s * sigma(c) + c with invertible g, which forces tau(g) = s.
    let mut rep_keys: Vec<u64> = Vec::with_capacity(num_cosets);
    let mut rep_mats: Vec<Mat> = Vec::with_capacity(num_cosets);
    let mut tau_fibers_ok = true;
    for members in &orbit_members {
        let s_rep = &s_mats[members[0] as usize];
        let mut found = None;
        for c_key in 0..(t.qq() as u64).pow((n as u32) * (n as u32)) {
            let c = Mat::decode(t, n, c_key);
            let g = s_rep.mul(t, &c.frobenius(t)).add(t, &c);
            if !g.det(t).is_zero() {
                found = Some(g);
                break;
            }
        }
        match found {
            Some(g) => {
                // tau(g) = g * sigma(g)^{-1} must recover the seed.
                let tau_g = g.mul(t, &g.frobenius(t).inv(t));
                assert_eq!(&tau_g, s_rep, "constructed representative has wrong tau");
                rep_keys.push(g.encode(t));
                rep_mats.push(g);
            }
            None => {
                tau_fibers_ok = false;
                rep_keys.push(0);
                rep_mats.push(Mat::identity(n));
            }
        }
    }

    // Theta-stability through the orbit correspondence:
    // H theta(g) H = H g H  iff  tau(theta(g)) lies in the orbit of tau(g).
    let mut all_theta_stable = true;
    for (oid, g) in rep_mats.iter().enumerate() {
        let t2 = g.frobenius(t).inv(t).mul(t, g);
        let pos = locate(&t2).expect("tau of theta-image missed the twisted involutions");
        all_theta_stable &= orbit_of[pos as usize] == oid as u32;
    }

    let coset_sizes: Vec<u64> = orbit_members
        .iter()
        .map(|m| m.len() as u64 * h_order)
        .collect();
    let sizes_sum_to_g = coset_sizes.iter().map(|&x| x as u128).sum::<u128>() == g_order as u128;
    let orbit_bijection_ok = tau_fibers_ok && s_matches_index;

    DoubleCosetReport {
        method: CosetMethod::Streamed,
        g_order,
        h_order,
        num_cosets,
        coset_sizes,
        rep_keys,
        s_size,
        s_matches_index,
        tau_fibers_ok,
        orbit_bijection_ok,
        g_conj_implies_h_conj,
        all_theta_stable,
        sizes_sum_to_g,
    }
}
