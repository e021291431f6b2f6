//! Slow reference implementations used to cross-check the fast paths.
//! None of them share code with the routines they check.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::graph::Graph;
use crate::linalg::IntMatrix;

/// Independent-set counts by testing all `2^n` subsets.
pub fn subset_counts(g: &Graph) -> Vec<BigInt> {
    let n = g.order();
    assert!(n <= 20, "subset enumeration is limited to 20 vertices");
    let rows = g.rows();
    let mut counts = vec![0u64; n + 1];
    for s in 0u64..1 << n {
        if (0..n).all(|u| s >> u & 1 == 0 || rows[u] & s == 0) {
            counts[s.count_ones() as usize] += 1;
        }
    }
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    counts.into_iter().map(BigInt::from).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Isomorphism classes among all labelled graphs on `n <= 7` vertices,
/// keyed by the least edge mask over every relabelling.
pub fn labelled_class_count(n: usize) -> usize {
    assert!(n <= 7, "labelled enumeration is limited to 7 vertices");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut index = vec![vec![0usize; n]; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        index[u][v] = i;
        index[v][u] = i;
    }
    let perms = permutations(n);
    let mut seen = HashSet::new();
    for mask in 0u64..1 << pairs.len() {
        let key = perms
            .iter()
            .map(|p| {
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .fold(0u64, |acc, (_, &(u, v))| acc | 1 << index[p[u]][p[v]])
            })
            .min()
            .unwrap_or(0);
        seen.insert(key);
    }
    seen.len()
}

/// Rank over Q by Gauss-Jordan elimination on exact rationals.
pub fn naive_rational_rank(m: &IntMatrix) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<BigRational>> =
        (0..rows).map(|r| (0..cols).map(|c| BigRational::from_integer(m.get(r, c).clone())).collect()).collect();
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert_eq!(labelled_class_count(4), 11);
        assert_eq!(subset_counts(&Graph::complete(3)), vec![BigInt::from(1), BigInt::from(3)]);
        assert_eq!(naive_rational_rank(&IntMatrix::identity(4)), 4);
    }
}
