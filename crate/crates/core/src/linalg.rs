//! Integer matrices and their exact rank over Q and GF(p).
//!
//! Rank over Q uses fraction-free (Bareiss) elimination on integers. The
//! elimination runs in `i128` with checked arithmetic and restarts on
//! `BigInt` if an intermediate minor overflows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::field::FieldSpec;

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        let entries = rows.iter().flat_map(|r| r.iter().cloned().map(Into::into)).collect();
        IntMatrix { rows: rows.len(), cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: impl Into<BigInt>) {
        self.entries[r * self.cols + c] = v.into();
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    fn row_vecs<T>(&self, conv: impl Fn(&BigInt) -> T) -> Vec<Vec<T>> {
        self.entries.chunks(self.cols.max(1)).take(self.rows).map(|r| r.iter().map(&conv).collect()).collect()
    }
}

/// Rank of `m` over the field `k`.
pub fn rank_over(m: &IntMatrix, k: FieldSpec) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    match k {
        FieldSpec::Rationals => rank_rational(m),
        FieldSpec::Prime(p) => rank_mod_p(m, p as u64),
    }
}

fn rank_rational(m: &IntMatrix) -> usize {
    if m.entries.iter().all(|e| e.to_i64().is_some()) {
        let a = m.row_vecs(|e| e.to_i128().expect("fits i64"));
        if let Some(r) = bareiss_i128(a) {
            return r;
        }
    }
    bareiss_big(m.row_vecs(Clone::clone))
}

/// Rank of a small dense matrix given as rows, skipping the `BigInt` storage.
pub(crate) fn rank_of_rows(rows: Vec<Vec<i8>>, k: FieldSpec) -> usize {
    if rows.is_empty() || rows[0].is_empty() {
        return 0;
    }
    match k {
        FieldSpec::Rationals => {
            let a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
            bareiss_i128(a).unwrap_or_else(|| {
                bareiss_big(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
            })
        }
        FieldSpec::Prime(p) => {
            let p = p as u64;
            let a = rows.iter().map(|r| r.iter().map(|&x| (x as i64).rem_euclid(p as i64) as u64).collect()).collect();
            eliminate_mod_p(a, p)
        }
    }
}

fn bareiss_i128(mut a: Vec<Vec<i128>>) -> Option<usize> {
    let (rows, cols) = (a.len(), a[0].len());
    let mut rank = 0;
    let mut prev: i128 = 1;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| a[r][c] != 0) else { continue };
        a.swap(rank, p);
        let pivot = a[rank][c];
        let (top, below) = a.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in below.iter_mut() {
            let lead = row[c];
            for j in c + 1..cols {
                let num = pivot.checked_mul(row[j])?.checked_sub(lead.checked_mul(prow[j])?)?;
                row[j] = num / prev;
            }
            row[c] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_big(mut a: Vec<Vec<BigInt>>) -> usize {
    let (rows, cols) = (a.len(), a[0].len());
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, p);
        let pivot = a[rank][c].clone();
        let (top, below) = a.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in below.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..cols {
                let num = &pivot * &row[j] - &lead * &prow[j];
                debug_assert!(num.is_multiple_of(&prev));
                row[j] = num / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn rank_mod_p(m: &IntMatrix, p: u64) -> usize {
    let pb = BigInt::from(p);
    eliminate_mod_p(m.row_vecs(|e| e.mod_floor(&pb).to_u64().expect("reduced mod p")), p)
}

fn eliminate_mod_p(mut a: Vec<Vec<u64>>, p: u64) -> usize {
    let (rows, cols) = (a.len(), a[0].len());
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| a[r][c] != 0) else { continue };
        a.swap(rank, piv);
        let inv = pow_mod(a[rank][c], p - 2, p);
        for j in c..cols {
            a[rank][j] = a[rank][j] * inv % p;
        }
        let (top, below) = a.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in below.iter_mut() {
            let f = row[c];
            if f == 0 {
                continue;
            }
            for j in c..cols {
                row[j] = (row[j] + (p - f) * prow[j]) % p;
            }
        }
        rank += 1;
    }
    rank
}

/// True when every entry is -1, 0 or 1.
pub fn is_signed_incidence(m: &IntMatrix) -> bool {
    m.entries.iter().all(|e| e.abs() <= BigInt::from(1))
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;

    /// Test oracle: Gaussian elimination over exact rationals.
    pub(crate) fn naive_rational_rank(m: &IntMatrix) -> usize {
        let mut a: Vec<Vec<BigRational>> = m.row_vecs(|e| BigRational::from_integer(e.clone()));
        let (rows, cols) = (m.rows(), m.cols());
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else { continue };
            a.swap(rank, p);
            for r in 0..rows {
                if r != rank && !a[r][c].is_zero() {
                    let f = &a[r][c] / &a[rank][c];
                    for j in c..cols {
                        let t = &f * &a[rank][j];
                        a[r][j] -= t;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn small_examples() {
        for k in [FieldSpec::Q, FieldSpec::GF2, FieldSpec::GF3] {
            assert_eq!(rank_over(&IntMatrix::identity(3), k), 3);
            assert_eq!(rank_over(&IntMatrix::zeros(0, 4), k), 0);
            assert_eq!(rank_over(&IntMatrix::zeros(3, 4), k), 0);
        }
        let two = IntMatrix::from_rows(&[vec![2]]);
        assert_eq!(rank_over(&two, FieldSpec::Q), 1);
        assert_eq!(rank_over(&two, FieldSpec::GF2), 0);
        assert_eq!(rank_over(&two, FieldSpec::GF3), 1);
        let neg = IntMatrix::from_rows(&[vec![-3, 1], vec![0, -6]]);
        assert_eq!(rank_over(&neg, FieldSpec::GF3), 1);
    }

    #[test]
    fn bareiss_matches_naive_rational_elimination() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..200 {
            let (r, c) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
            let lo = rng.gen_range(-9..=0);
            let rows: Vec<Vec<i64>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(lo..=9)).collect()).collect();
            let mut m = IntMatrix::from_rows(&rows);
            // Force some rank deficiency.
            if r > 1 && rng.gen_bool(0.5) {
                for j in 0..c {
                    let v = m.get(0, j) * 2 - m.get(1, j);
                    m.set(r - 1, j, v);
                }
            }
            assert_eq!(rank_over(&m, FieldSpec::Q), naive_rational_rank(&m), "{m:?}");
        }
    }

    #[test]
    fn bigint_fallback_agrees() {
        // Entries near i64::MAX overflow the i128 path immediately.
        let big = i64::MAX;
        let m = IntMatrix::from_rows(&[vec![big, big - 1, 3], vec![big - 2, big, 5], vec![7, 11, big]]);
        assert_eq!(rank_over(&m, FieldSpec::Q), naive_rational_rank(&m));
        let singular = IntMatrix::from_rows(&[vec![big, big - 1], vec![big, big - 1]]);
        assert_eq!(rank_over(&singular, FieldSpec::Q), 1);
    }
}
