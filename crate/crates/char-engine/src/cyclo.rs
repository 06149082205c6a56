//! Exact character values as multisets of roots of unity.
//!
//! A character value on an element of order `o` is a sum of `o`-th roots of
//! unity with multiplicities summing to the degree.  Storing the multiset
//! `{ zeta_o^t : multiplicity m_t }` rather than a numeric sum keeps every
//! downstream computation exact: the multiset is intrinsic to the value
//! (recoverable from the character on the cyclic group generated by the
//! element by Fourier inversion), so equality of canonical forms is
//! equality of character values as algebraic numbers.

use serde::{Deserialize, Serialize};

/// Canonical exact value: `sum_t mult * zeta_order^exp` with `order`
/// minimal (the gcd of the order and all exponents has been divided out)
/// and pairs sorted by exponent.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct CharValue {
    order: u32,
    pairs: Vec<(u32, u32)>,
}

impl CharValue {
    /// Builds a value from (exponent, multiplicity) pairs modulo `order`,
    /// aggregating duplicates and canonicalizing.
    pub fn new(order: u32, raw: impl IntoIterator<Item = (u32, u32)>) -> CharValue {
        assert!(order >= 1);
        let mut sums = std::collections::BTreeMap::<u32, u64>::new();
        for (e, m) in raw {
            if m == 0 {
                continue;
            }
            *sums.entry(e % order).or_insert(0) += m as u64;
        }
        assert!(!sums.is_empty(), "character value needs at least one eigenvalue");
        let mut g = order;
        for &e in sums.keys() {
            g = gcd(g, e);
        }
        let (order, pairs) = if g > 1 {
            (
                order / g,
                sums.iter()
                    .map(|(&e, &m)| (e / g, u32::try_from(m).expect("multiplicity overflow")))
                    .collect(),
            )
        } else {
            (
                order,
                sums.iter()
                    .map(|(&e, &m)| (e, u32::try_from(m).expect("multiplicity overflow")))
                    .collect(),
            )
        };
        CharValue { order, pairs }
    }

    /// The rational integer `n` as a value.
    pub fn integer(n: u32) -> CharValue {
        CharValue::new(1, [(0, n)])
    }

    /// A single root of unity `zeta_order^exp`.
    pub fn root(order: u32, exp: u32) -> CharValue {
        CharValue::new(order, [(exp, 1)])
    }

    /// Minimal common order of the stored roots.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Sorted (exponent, multiplicity) pairs.
    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    /// Total multiplicity; equals the character degree on every class.
    pub fn total_mult(&self) -> u64 {
        self.pairs.iter().map(|&(_, m)| m as u64).sum()
    }

    /// True when the value is the rational integer `n`.
    pub fn is_integer(&self, n: u32) -> bool {
        self.order == 1 && self.pairs == [(0, n)]
    }

    /// Complex conjugate: negate all exponents.
    pub fn conj(&self) -> CharValue {
        CharValue::new(
            self.order,
            self.pairs
                .iter()
                .map(|&(e, m)| ((self.order - e) % self.order, m)),
        )
    }

    /// Galois twist `zeta -> zeta^u`; `u` must be coprime to the order.
    pub fn galois(&self, u: u64) -> CharValue {
        if self.order > 1 {
            assert_eq!(gcd(self.order, (u % self.order as u64) as u32), 1);
        }
        CharValue::new(
            self.order,
            self.pairs
                .iter()
                .map(|&(e, m)| (((e as u64 * u) % self.order as u64) as u32, m)),
        )
    }

    /// Product with a single root of unity `zeta_ro^re` (a one-dimensional
    /// twist multiplies every eigenvalue by the same root).
    pub fn times_root(&self, ro: u32, re: u32) -> CharValue {
        let common = lcm(self.order, ro);
        let a = common / self.order;
        let b = common / ro;
        CharValue::new(
            common,
            self.pairs.iter().map(|&(e, m)| {
                (((e as u64 * a as u64 + re as u64 * b as u64) % common as u64) as u32, m)
            }),
        )
    }

    /// Full product of two values (all pairwise products of roots).
    pub fn mul(&self, rhs: &CharValue) -> CharValue {
        let common = lcm(self.order, rhs.order);
        let a = common / self.order;
        let b = common / rhs.order;
        let mut terms = Vec::with_capacity(self.pairs.len() * rhs.pairs.len());
        for &(e1, m1) in &self.pairs {
            for &(e2, m2) in &rhs.pairs {
                let e = ((e1 as u64 * a as u64 + e2 as u64 * b as u64) % common as u64) as u32;
                terms.push((e, m1.checked_mul(m2).expect("multiplicity overflow")));
            }
        }
        CharValue::new(common, terms)
    }

    /// Image under the ring map `zeta_E -> z^(E/order)` into the integers
    /// modulo `p`, where `z` has multiplicative order `big_e` modulo `p`
    /// and `order` divides `big_e`.
    pub fn eval_mod(&self, p: u64, z: u64, big_e: u64) -> u64 {
        assert_eq!(big_e % self.order as u64, 0, "value order must divide the ambient order");
        let zo = crate::modular::mod_pow(z, big_e / self.order as u64, p);
        let mut acc = 0u64;
        for &(e, m) in &self.pairs {
            let root = crate::modular::mod_pow(zo, e as u64, p);
            acc = (acc + root * (m as u64)) % p;
        }
        acc
    }
}

pub(crate) fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonicalization_minimizes_order() {
        // zeta_12^3 = zeta_4, so a pair with only exponent multiples of 3
        // must be stored with order 4.
        let v = CharValue::new(12, [(3, 2), (9, 1)]);
        assert_eq!(v.order(), 4);
        assert_eq!(v.pairs(), &[(1, 2), (3, 1)]);
    }

    #[test]
    fn duplicate_exponents_aggregate() {
        let v = CharValue::new(6, [(2, 1), (8, 2), (5, 1)]);
        // 8 mod 6 = 2, so the exponent 2 carries multiplicity 3.
        assert_eq!(v.pairs().iter().find(|&&(e, _)| e == 2).unwrap().1, 3);
        assert_eq!(v.total_mult(), 4);
    }

    #[test]
    fn integers_and_roots() {
        assert!(CharValue::integer(5).is_integer(5));
        let r = CharValue::root(8, 6);
        // zeta_8^6 = zeta_4^3.
        assert_eq!(r.order(), 4);
        assert_eq!(r.pairs(), &[(3, 1)]);
    }

    #[test]
    fn conjugation_is_an_involution_and_fixes_integers() {
        let v = CharValue::new(5, [(1, 2), (2, 1)]);
        assert_eq!(v.conj().conj(), v);
        assert_eq!(CharValue::integer(7).conj(), CharValue::integer(7));
    }

    #[test]
    fn galois_composes_like_exponent_multiplication() {
        let v = CharValue::new(12, [(1, 1), (5, 2)]);
        let a = v.galois(5).galois(7);
        let b = v.galois(35 % 12);
        assert_eq!(a, b);
    }

    #[test]
    fn product_against_modular_evaluation() {
        // Oracle: multiply two values symbolically and compare the modular
        // image with the product of modular images, for several primes.
        let x = CharValue::new(8, [(1, 1), (3, 2), (6, 1)]);
        let y = CharValue::new(12, [(5, 1), (0, 3)]);
        let prod = x.mul(&y);
        let big_e = 24u64;
        for p in [73u64, 97, 193] {
            assert_eq!((p - 1) % big_e, 0);
            let g = crate::modular::primitive_root(p);
            let z = crate::modular::mod_pow(g, (p - 1) / big_e, p);
            let lhs = prod.eval_mod(p, z, big_e);
            let rhs = x.eval_mod(p, z, big_e) * y.eval_mod(p, z, big_e) % p;
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn times_root_matches_full_product() {
        let x = CharValue::new(6, [(1, 2), (4, 1)]);
        let root = CharValue::root(4, 3);
        assert_eq!(x.times_root(4, 3), x.mul(&root));
    }

    #[test]
    fn value_equality_is_multiset_equality() {
        // Same algebraic number, built two ways.
        let a = CharValue::new(4, [(0, 1), (2, 1)]); // 1 + (-1)
        let b = CharValue::new(8, [(0, 1), (4, 1)]); // 1 + (-1) at doubled order
        assert_eq!(a, b);
    }
}
