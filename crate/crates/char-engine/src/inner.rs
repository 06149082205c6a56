//! Exact inner products between characters across a subgroup inclusion.
//!
//! The multiplicity of an `H`-irreducible in the restriction of a
//! `G`-irreducible is `(1/|H|) sum_h chi(h) conj(chi'(h))`.  The sum is a
//! rational integer (both tables carry power-Galois certificates, and the
//! `u`-power maps permute `H`), bounded in absolute value by
//! `|H| d d'`, so it is determined exactly by its residues modulo enough
//! primes `= 1 (mod e_G)`.  Element iteration enters through the pair
//! counts: how many `h in H` fall in each (`G`-class, `H`-class) pair.

use std::collections::BTreeMap;

use crate::modular::{mod_inv, mod_pow, mul, primes_one_mod, root_of_unity};
use crate::table::CharacterTable;

/// Reconstruct an integer in `[0, bound]` from residues `(r_p, p)`.
fn crt(residues: &[(u64, u64)], bound: u128) -> u128 {
    let mut x: u128 = 0;
    let mut m: u128 = 1;
    for &(r, p) in residues {
        let xm = (x % p as u128) as u64;
        let diff = (r + p - xm) % p;
        let minv = mod_inv((m % p as u128) as u64, p);
        let t = mul(diff, minv, p);
        x += m * t as u128;
        m *= p as u128;
    }
    assert!(m > 2 * bound, "not enough residues for the claimed bound");
    assert!(x <= bound, "inner product outside its archimedean bound");
    x
}

/// Primes `= 1 (mod e)` whose product exceeds `2 * bound`, starting with
/// a table's own working prime when it qualifies.
fn prime_pool(e: u64, seed: u64, bound: u128) -> Vec<u64> {
    let mut primes = if seed % e == 1 { vec![seed] } else { primes_one_mod(e, e, 1) };
    while primes.iter().map(|&p| p as u128).product::<u128>() <= 2 * bound {
        let last = *primes.last().unwrap();
        primes.push(primes_one_mod(e, last, 1)[0]);
    }
    primes
}

/// Restriction multiplicity matrix `m[i][j] = <Res chi_i, chi'_j>_H`.
///
/// `pair_counts` maps `(G-class, H-class)` to the number of `H`-elements
/// realizing the pair; counts must total `|H|`.
pub fn restriction_matrix(
    gt: &CharacterTable,
    ht: &CharacterTable,
    pair_counts: &BTreeMap<(u32, u32), u64>,
) -> Vec<Vec<u64>> {
    let kg = gt.k();
    let kh = ht.k();
    let h_order = ht.group_order;
    assert_eq!(
        pair_counts.values().sum::<u64>(),
        h_order,
        "pair counts must cover the subgroup exactly once"
    );
    assert_eq!(gt.exponent % ht.exponent, 0, "subgroup exponent must divide");

    let dmax_g = *gt.degrees.iter().max().unwrap() as u128;
    let dmax_h = *ht.degrees.iter().max().unwrap() as u128;
    let bound = h_order as u128 * dmax_g * dmax_h;
    let primes = prime_pool(gt.exponent, gt.ell, bound);

    // residues[i][j] per prime
    let mut residues: Vec<Vec<Vec<(u64, u64)>>> = vec![vec![Vec::new(); kh]; kg];
    for &p in &primes {
        let zg = root_of_unity(p, gt.exponent);
        // The subgroup's root must be the compatible power of the group's,
        // so both value systems reduce under the same embedding.
        let zh_inv = mod_inv(mod_pow(zg, gt.exponent / ht.exponent, p), p);
        let ag: Vec<Vec<u64>> = (0..kg)
            .map(|i| (0..kg).map(|m| gt.values[i][m].eval_mod(p, zg, gt.exponent)).collect())
            .collect();
        let ch: Vec<Vec<u64>> = (0..kh)
            .map(|j| {
                (0..kh)
                    .map(|m| ht.values[j][m].eval_mod(p, zh_inv, ht.exponent))
                    .collect()
            })
            .collect();
        let mut sums = vec![vec![0u64; kh]; kg];
        for (&(gc, hc), &count) in pair_counts {
            let cnt = count % p;
            for i in 0..kg {
                let a = mul(ag[i][gc as usize], cnt, p);
                if a == 0 {
                    continue;
                }
                let row = &mut sums[i];
                for j in 0..kh {
                    row[j] = (row[j] + mul(a, ch[j][hc as usize], p)) % p;
                }
            }
        }
        for i in 0..kg {
            for j in 0..kh {
                residues[i][j].push((sums[i][j], p));
            }
        }
    }

    let out: Vec<Vec<u64>> = (0..kg)
        .map(|i| {
            (0..kh)
                .map(|j| {
                    let s = crt(&residues[i][j], bound);
                    assert_eq!(s % h_order as u128, 0, "inner product sum not divisible by |H|");
                    u64::try_from(s / h_order as u128).unwrap()
                })
                .collect()
        })
        .collect();

    // Degrees must be preserved: sum_j m[i][j] d'_j = d_i.
    for i in 0..kg {
        let total: u128 = (0..kh)
            .map(|j| out[i][j] as u128 * ht.degrees[j] as u128)
            .sum();
        assert_eq!(total, gt.degrees[i] as u128, "restriction loses dimension");
    }
    out
}

/// `<chi_i, chi_j>_G` for all pairs, through the same residue machinery
/// (the expected answer is the identity matrix; callers assert it).
pub fn self_inner_products(t: &CharacterTable) -> Vec<Vec<u64>> {
    let counts: BTreeMap<(u32, u32), u64> = (0..t.k() as u32)
        .map(|c| ((c, c), t.class_sizes[c as usize]))
        .collect();
    restriction_matrix(t, t, &counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dixon::compute_character_table;
    use ff_core::{FieldTower, Side};
    use group_engine::{ConjugacyClasses, Embedding, GroupKind, MatrixGroup};
    use std::sync::Arc;

    #[test]
    fn self_inner_products_give_the_identity() {
        let t = Arc::new(FieldTower::build(3, 1).unwrap());
        for kind in [GroupKind::GL, GroupKind::SL] {
            let g = MatrixGroup::build(kind, 2, Side::Base, Arc::clone(&t), None).unwrap();
            let cc = ConjugacyClasses::compute(&g);
            let tab = compute_character_table(&g, &cc);
            let m = self_inner_products(&tab);
            for i in 0..tab.k() {
                for j in 0..tab.k() {
                    assert_eq!(m[i][j], u64::from(i == j));
                }
            }
        }
    }

    #[test]
    fn special_linear_restriction_from_the_full_group() {
        let t = Arc::new(FieldTower::build(3, 1).unwrap());
        let g = MatrixGroup::build(GroupKind::GL, 2, Side::Base, Arc::clone(&t), None).unwrap();
        let gcc = ConjugacyClasses::compute(&g);
        let gt = compute_character_table(&g, &gcc);
        let h = MatrixGroup::build(GroupKind::SL, 2, Side::Base, Arc::clone(&t), None).unwrap();
        let hcc = ConjugacyClasses::compute(&h);
        let ht = compute_character_table(&h, &hcc);

        let emb = Embedding::new(&g, &gcc, &h).unwrap();
        let mut counts: BTreeMap<(u32, u32), u64> = BTreeMap::new();
        for hi in 0..h.order() as u32 {
            *counts.entry((emb.g_class(hi), hcc.class_of(hi))).or_insert(0) += 1;
        }
        let m = restriction_matrix(&gt, &ht, &counts);

        // Column identity: sum_i d_i m[i][j] = [G:H] d'_j.
        let index = g.order() / h.order();
        for j in 0..ht.k() {
            let col: u64 = (0..gt.k()).map(|i| gt.degrees[i] * m[i][j]).sum();
            assert_eq!(col, index * ht.degrees[j]);
        }
        // Both linear characters of the big group restrict to the trivial
        // character of the determinant-one subgroup.
        let triv_h = ht.trivial_index();
        for i in gt.linear_indices() {
            assert_eq!(m[i][triv_h], 1);
            assert!((0..ht.k()).filter(|&j| m[i][j] != 0).count() == 1);
        }

        // Independent residue check: literal element loop modulo a prime
        // the production path cannot have used (far beyond its pool).
        let p = primes_one_mod(gt.exponent, 100_000, 1)[0];
        let zg = root_of_unity(p, gt.exponent);
        let zh_inv = mod_inv(mod_pow(zg, gt.exponent / ht.exponent, p), p);
        for i in 0..gt.k() {
            for j in 0..ht.k() {
                let mut acc = 0u64;
                for hi in 0..h.order() as u32 {
                    let a = gt.values[i][emb.g_class(hi) as usize].eval_mod(p, zg, gt.exponent);
                    let b = ht.values[j][hcc.class_of(hi) as usize]
                        .eval_mod(p, zh_inv, ht.exponent);
                    acc = (acc + mul(a, b, p)) % p;
                }
                assert_eq!(acc, mul(m[i][j] % p, h.order() % p, p));
            }
        }
    }
}
