//! Square matrices (n <= 3) over the tower fields, with exact arithmetic.

use ff_core::{FFElem, FieldTower};

/// A square matrix of size `n <= 3` with entries in the extension field.
///
/// Entries are stored row-major in a fixed 9-slot array; unused slots hold
/// zero so that equality and hashing are well defined.  All arithmetic is
/// delegated to the [`FieldTower`] and is exact.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat {
    n: u8,
    e: [FFElem; 9],
}

impl Mat {
    /// The zero matrix of size `n`.
    pub fn zero(n: u8) -> Mat {
        assert!((1..=3).contains(&n), "matrix size out of range");
        Mat { n, e: [FFElem::ZERO; 9] }
    }

    /// The identity matrix of size `n`.
    pub fn identity(n: u8) -> Mat {
        let mut m = Mat::zero(n);
        for i in 0..n {
            m.set(i, i, FFElem::ONE);
        }
        m
    }

    /// Builds a matrix from its rows (each a slice of length `n`).
    pub fn from_rows(rows: &[&[FFElem]]) -> Mat {
        let n = rows.len() as u8;
        let mut m = Mat::zero(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n as usize, "ragged matrix rows");
            for (j, &x) in row.iter().enumerate() {
                m.set(i as u8, j as u8, x);
            }
        }
        m
    }

    /// Matrix size.
    pub fn n(&self) -> u8 {
        self.n
    }

    /// Entry at row `i`, column `j`.
    pub fn get(&self, i: u8, j: u8) -> FFElem {
        debug_assert!(i < self.n && j < self.n);
        self.e[(i * 3 + j) as usize]
    }

    /// Sets the entry at row `i`, column `j`.
    pub fn set(&mut self, i: u8, j: u8, x: FFElem) {
        debug_assert!(i < self.n && j < self.n);
        self.e[(i * 3 + j) as usize] = x;
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, t: &FieldTower, rhs: &Mat) -> Mat {
        debug_assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = Mat::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = FFElem::ZERO;
                for k in 0..n {
                    acc = t.add(acc, t.mul(self.get(i, k), rhs.get(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    /// Entrywise sum `self + rhs`.
    pub fn add(&self, t: &FieldTower, rhs: &Mat) -> Mat {
        debug_assert_eq!(self.n, rhs.n);
        let mut out = *self;
        for k in 0..9 {
            out.e[k] = t.add(out.e[k], rhs.e[k]);
        }
        out
    }

    /// Matrix power by repeated squaring.
    pub fn pow(&self, t: &FieldTower, mut k: u64) -> Mat {
        let mut base = *self;
        let mut acc = Mat::identity(self.n);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(t, &base);
            }
            base = base.mul(t, &base);
            k >>= 1;
        }
        acc
    }

    /// Determinant (direct cofactor formulas for n <= 3).
    pub fn det(&self, t: &FieldTower) -> FFElem {
        match self.n {
            1 => self.get(0, 0),
            2 => t.sub(
                t.mul(self.get(0, 0), self.get(1, 1)),
                t.mul(self.get(0, 1), self.get(1, 0)),
            ),
            3 => {
                let m = |i: u8, j: u8| self.get(i, j);
                let c0 = t.mul(m(0, 0), t.sub(t.mul(m(1, 1), m(2, 2)), t.mul(m(1, 2), m(2, 1))));
                let c1 = t.mul(m(0, 1), t.sub(t.mul(m(1, 0), m(2, 2)), t.mul(m(1, 2), m(2, 0))));
                let c2 = t.mul(m(0, 2), t.sub(t.mul(m(1, 0), m(2, 1)), t.mul(m(1, 1), m(2, 0))));
                t.add(t.sub(c0, c1), c2)
            }
            _ => unreachable!(),
        }
    }

    /// Trace.
    pub fn trace(&self, t: &FieldTower) -> FFElem {
        let mut acc = FFElem::ZERO;
        for i in 0..self.n {
            acc = t.add(acc, self.get(i, i));
        }
        acc
    }

    /// Inverse via the adjugate; panics if the matrix is singular.
    pub fn inv(&self, t: &FieldTower) -> Mat {
        let d = self.det(t);
        assert!(!d.is_zero(), "inverting a singular matrix");
        let di = t.inv(d);
        let n = self.n;
        let mut out = Mat::zero(n);
        match n {
            1 => out.set(0, 0, di),
            2 => {
                out.set(0, 0, t.mul(di, self.get(1, 1)));
                out.set(0, 1, t.mul(di, t.neg(self.get(0, 1))));
                out.set(1, 0, t.mul(di, t.neg(self.get(1, 0))));
                out.set(1, 1, t.mul(di, self.get(0, 0)));
            }
            3 => {
                // Adjugate: cofactor matrix transposed.
                for i in 0..3u8 {
                    for j in 0..3u8 {
                        let r: Vec<u8> = (0..3).filter(|&x| x != j).collect();
                        let c: Vec<u8> = (0..3).filter(|&x| x != i).collect();
                        let minor = t.sub(
                            t.mul(self.get(r[0], c[0]), self.get(r[1], c[1])),
                            t.mul(self.get(r[0], c[1]), self.get(r[1], c[0])),
                        );
                        let cof = if (i + j) % 2 == 0 { minor } else { t.neg(minor) };
                        out.set(i, j, t.mul(di, cof));
                    }
                }
            }
            _ => unreachable!(),
        }
        out
    }

    /// Transpose.
    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    /// Entrywise field involution (Frobenius `x -> x^q`).
    pub fn frobenius(&self, t: &FieldTower) -> Mat {
        let mut out = *self;
        for k in 0..9 {
            out.e[k] = t.frobenius(out.e[k]);
        }
        out
    }

    /// Conjugate transpose `sigma(self)^T` for the Hermitian form.
    pub fn conj_transpose(&self, t: &FieldTower) -> Mat {
        self.frobenius(t).transpose()
    }

    /// Scalar matrix `x * I`.
    pub fn scalar(n: u8, x: FFElem) -> Mat {
        let mut m = Mat::zero(n);
        for i in 0..n {
            m.set(i, i, x);
        }
        m
    }

    /// Injective packed encoding: base-`q^2` positional over entry scan
    /// indices, row-major with entry (0,0) least significant.  Fits in `u64`
    /// for every supported field (at most `81^9 < 2^57`).
    pub fn encode(&self, t: &FieldTower) -> u64 {
        let base = t.qq() as u64;
        let n = self.n;
        let mut key = 0u64;
        for i in (0..n).rev() {
            for j in (0..n).rev() {
                key = key * base + self.get(i, j).scan_index() as u64;
            }
        }
        key
    }

    /// Inverse of [`Mat::encode`].
    pub fn decode(t: &FieldTower, n: u8, mut key: u64) -> Mat {
        let base = t.qq() as u64;
        let mut m = Mat::zero(n);
        for i in 0..n {
            for j in 0..n {
                let digit = (key % base) as u32;
                key /= base;
                m.set(i, j, FFElem::from_scan_index(digit));
            }
        }
        debug_assert_eq!(key, 0);
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ff_core::FieldTower;

    fn t3() -> FieldTower {
        FieldTower::build(3, 1).unwrap()
    }

    #[test]
    fn identity_and_multiplication() {
        let t = t3();
        let id = Mat::identity(2);
        // Assemble an arbitrary invertible matrix and check id * m == m.
        let g = t.gen();
        let m = Mat::from_rows(&[&[FFElem::ONE, g], &[FFElem::ZERO, t.mul(g, g)]]);
        assert_eq!(id.mul(&t, &m), m);
        assert_eq!(m.mul(&t, &id), m);
    }

    #[test]
    fn inverse_is_exact_for_all_small_invertible_matrices() {
        // Oracle: over F_4 all 256 two-by-two matrices are cheap to scan;
        // every one with nonzero determinant must satisfy m * m^-1 == I.
        let t = FieldTower::build(2, 1).unwrap();
        let id = Mat::identity(2);
        let mut checked = 0u32;
        for key in 0..(t.qq() as u64).pow(4) {
            let m = Mat::decode(&t, 2, key);
            if m.det(&t).is_zero() {
                continue;
            }
            assert_eq!(m.mul(&t, &m.inv(&t)), id);
            assert_eq!(m.inv(&t).mul(&t, &m), id);
            checked += 1;
        }
        // |GL_2(F_4)| = (16-1)(16-4) = 180.
        assert_eq!(checked, 180);
    }

    #[test]
    fn det_is_multiplicative_3x3() {
        let t = t3();
        // Sample deterministic pairs by decoding fixed keys.
        let keys = [12345u64, 987654, 33333, 777777, 250000001];
        for (a, b) in keys.iter().zip(keys.iter().rev()) {
            let x = Mat::decode(&t, 3, *a);
            let y = Mat::decode(&t, 3, *b);
            let lhs = x.mul(&t, &y).det(&t);
            let rhs = t.mul(x.det(&t), y.det(&t));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn encode_decode_roundtrip() {
        let t = t3();
        for key in [0u64, 1, 80, 6560, 387420488] {
            let m = Mat::decode(&t, 3, key);
            assert_eq!(m.encode(&t), key);
        }
    }

    #[test]
    fn frobenius_squares_to_identity_map() {
        let t = t3();
        let m = Mat::decode(&t, 2, 4321);
        assert_eq!(m.frobenius(&t).frobenius(&t), m);
    }

    #[test]
    fn inv_3x3_against_multiplication() {
        let t = t3();
        let id = Mat::identity(3);
        let mut found = 0;
        // Deterministic sample spread over the full key space so all nine
        // entries vary (small keys would leave the bottom row zero).
        for k in 0..400u64 {
            let key = (k * 968_886_971 + 12_345) % 387_420_489;
            let m = Mat::decode(&t, 3, key);
            if m.det(&t).is_zero() {
                continue;
            }
            assert_eq!(m.mul(&t, &m.inv(&t)), id);
            found += 1;
        }
        assert!(found > 200, "sample unexpectedly dominated by singular matrices");
    }
}
