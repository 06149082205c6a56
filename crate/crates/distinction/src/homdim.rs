//! Hom-space dimensions `dim Hom_H(pi, chi o det)` and the independent
//! element-by-element oracle that every headline number is checked against.

use char_engine::primes_one_mod;
use ff_core::{FFElem, MultCharacter};
use group_engine::Embedding;

use crate::lab::{GroupBundle, PairContext};

/// Index in `H`'s table of the linear character `chi o det`.
pub fn resolve_linear_target(h: &GroupBundle, chi: &MultCharacter) -> usize {
    let tower = h.group.tower();
    let vals: Vec<(u32, u32)> = h
        .table
        .class_det_scan
        .iter()
        .map(|&s| {
            chi.value(tower, FFElem::from_scan_index(s))
                .expect("determinant value outside the character's domain")
        })
        .collect();
    let j = char_engine::det_twist(&h.table, h.table.trivial_index(), &vals);
    assert_eq!(h.table.degrees[j], 1);
    j
}

/// `dim Hom_H(pi_i, chi o det)`; `chi = None` is the trivial target.
pub fn hom_dim(
    pc: &PairContext,
    h: &GroupBundle,
    i: usize,
    chi: Option<&MultCharacter>,
) -> u64 {
    let j = match chi {
        None => h.table.trivial_index(),
        Some(c) => resolve_linear_target(h, c),
    };
    pc.restriction[i][j]
}

/// Independent oracle: the same dimensions computed by a literal loop over
/// every element of `H` (no class bucketing), in a residue system chosen
/// far above anything the production path uses.
///
/// Returns `dim Hom_H(pi_i, chi'_j)` for all `i` at the fixed target `j`.
pub fn elementwise_dims(
    g: &GroupBundle,
    h: &GroupBundle,
    emb: &Embedding,
    target_j: usize,
) -> Vec<u64> {
    let gt = &g.table;
    let ht = &h.table;
    let kg = gt.k();
    let h_order = h.group.order();
    let bound = h_order as u128
        * (*gt.degrees.iter().max().unwrap() as u128)
        * (ht.degrees[target_j] as u128);

    let mut primes: Vec<u64> = Vec::new();
    let mut start = 1_000_000; // disjoint from the production prime pool
    while primes.iter().map(|&p| p as u128).product::<u128>() <= 2 * bound {
        let p = primes_one_mod(gt.exponent, start, 1)[0];
        primes.push(p);
        start = p;
    }

    let mut residues: Vec<Vec<(u64, u64)>> = vec![Vec::new(); kg];
    for &p in &primes {
        let z = char_engine_root(p, gt.exponent);
        let zh_inv = mod_inv_u64(mod_pow_u64(z, gt.exponent / ht.exponent, p), p);
        let a: Vec<Vec<u64>> = (0..kg)
            .map(|i| (0..kg).map(|m| gt.values[i][m].eval_mod(p, z, gt.exponent)).collect())
            .collect();
        let b: Vec<u64> = (0..ht.k())
            .map(|m| ht.values[target_j][m].eval_mod(p, zh_inv, ht.exponent))
            .collect();
        for i in 0..kg {
            let mut acc = 0u64;
            for hi in 0..h_order as u32 {
                let gi = a[i][emb.g_class(hi) as usize];
                let hj = b[h.classes.class_of(hi) as usize];
                acc = (acc + mulmod(gi, hj, p)) % p;
            }
            residues[i].push((acc, p));
        }
    }

    residues
        .iter()
        .map(|rs| {
            let s = crt_u128(rs, bound);
            assert_eq!(s % h_order as u128, 0, "oracle sum not divisible by |H|");
            u64::try_from(s / h_order as u128).unwrap()
        })
        .collect()
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_pow_u64(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

fn mod_inv_u64(a: u64, p: u64) -> u64 {
    mod_pow_u64(a, p - 2, p)
}

fn char_engine_root(p: u64, e: u64) -> u64 {
    // Deterministic e-th root of unity mod p: power of the least primitive root.
    let mut g = 2u64;
    'outer: loop {
        let mut n = p - 1;
        let mut factors = Vec::new();
        let mut d = 2u64;
        while d * d <= n {
            if n % d == 0 {
                factors.push(d);
                while n % d == 0 {
                    n /= d;
                }
            }
            d += 1;
        }
        if n > 1 {
            factors.push(n);
        }
        for &f in &factors {
            if mod_pow_u64(g, (p - 1) / f, p) == 1 {
                g += 1;
                continue 'outer;
            }
        }
        break;
    }
    mod_pow_u64(g, (p - 1) / e, p)
}

fn crt_u128(residues: &[(u64, u64)], bound: u128) -> u128 {
    let mut x: u128 = 0;
    let mut m: u128 = 1;
    for &(r, p) in residues {
        let xm = (x % p as u128) as u64;
        let diff = (r + p - xm) % p;
        let t = mulmod(diff, mod_inv_u64((m % p as u128) as u64, p), p);
        x += m * t as u128;
        m *= p as u128;
    }
    assert!(m > 2 * bound && x <= bound, "oracle reconstruction out of range");
    x
}
