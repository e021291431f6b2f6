//! Independent sets: counting, the independence polynomial, maximal and
//! maximum sets, and the well-covered / W2 decision procedures.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::{Bits, Graph, VertexSet};
use crate::poly::IntPolynomial;

/// `counts[i]` is the number of independent sets of size `i`; the list has
/// length `alpha(g) + 1`.
pub fn independent_set_counts(g: &Graph) -> Vec<BigInt> {
    let mut counts = vec![0u128; g.order() + 1];
    count_into(g, g.vertices().bits(), 0, &mut counts);
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    counts.into_iter().map(BigInt::from).collect()
}

/// Branches on a vertex of maximum degree inside `cand`; once `cand` spans no
/// edge the remaining sets are counted by binomial coefficients.
fn count_into(g: &Graph, cand: u64, size: usize, counts: &mut [u128]) {
    let rows = g.rows();
    let mut pick = None;
    let mut top = 0;
    for v in Bits(cand) {
        let d = (rows[v] & cand).count_ones();
        if d > top {
            top = d;
            pick = Some(v);
        }
    }
    let Some(v) = pick else {
        let k = cand.count_ones() as u128;
        let mut binom = 1u128;
        for j in 0..=k {
            counts[size + j as usize] += binom;
            binom = binom * (k - j) / (j + 1);
        }
        return;
    };
    count_into(g, cand & !(1u64 << v), size, counts);
    count_into(g, cand & !(rows[v] | 1u64 << v), size + 1, counts);
}

pub fn independence_number(g: &Graph) -> usize {
    let mut best = 0;
    max_independent(g, g.vertices().bits(), 0, &mut best);
    best
}

fn max_independent(g: &Graph, cand: u64, size: usize, best: &mut usize) {
    if size + cand.count_ones() as usize <= *best {
        return;
    }
    let rows = g.rows();
    let mut pick = None;
    let mut top = 0;
    for v in Bits(cand) {
        let d = (rows[v] & cand).count_ones();
        if d <= 1 {
            // A vertex of degree <= 1 lies in some maximum independent set.
            return max_independent(g, cand & !(rows[v] | 1u64 << v), size + 1, best);
        }
        if d > top {
            top = d;
            pick = Some(v);
        }
    }
    match pick {
        None => *best = (*best).max(size + cand.count_ones() as usize),
        Some(v) => {
            max_independent(g, cand & !(rows[v] | 1u64 << v), size + 1, best);
            max_independent(g, cand & !(1u64 << v), size, best);
        }
    }
}

pub fn independence_polynomial(g: &Graph) -> IntPolynomial {
    IntPolynomial::new(independent_set_counts(g))
}

/// Every independent set (the empty set included), sorted by bitset value.
pub fn independent_sets(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    collect_independent(g, g.vertices().bits(), 0, usize::MAX, &mut out);
    out.sort_unstable();
    out
}

/// Independent sets of exactly `k` vertices, sorted by bitset value.
pub fn independent_sets_of_size(g: &Graph, k: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    collect_independent(g, g.vertices().bits(), 0, k, &mut out);
    out.retain(|s| s.len() == k);
    out.sort_unstable();
    out
}

fn collect_independent(g: &Graph, cand: u64, current: u64, limit: usize, out: &mut Vec<VertexSet>) {
    out.push(VertexSet(current));
    if current.count_ones() as usize >= limit {
        return;
    }
    let rows = g.rows();
    for v in Bits(cand) {
        // Only extend with vertices above v so each set is produced once.
        let higher = if v == 63 { 0 } else { !0u64 << (v + 1) };
        collect_independent(g, cand & !rows[v] & higher, current | 1u64 << v, limit, out);
    }
}

/// Maximal independent sets, sorted by bitset value.
pub fn maximal_independent_sets(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    bron_kerbosch(g, 0, g.vertices().bits(), 0, &mut out);
    out.sort_unstable();
    out
}

/// Bron–Kerbosch with pivoting, run on the complement: "neighbours" below are
/// non-adjacent vertices of `g`.
fn bron_kerbosch(g: &Graph, r: u64, p: u64, x: u64, out: &mut Vec<VertexSet>) {
    if p == 0 {
        if x == 0 {
            out.push(VertexSet(r));
        }
        return;
    }
    let all = g.vertices().bits();
    let co = |v: usize| !g.rows()[v] & all & !(1u64 << v);
    let pivot = Bits(p | x).max_by_key(|&u| (p & co(u)).count_ones()).expect("p is nonempty");
    let mut p = p;
    let mut x = x;
    for v in Bits(p & !co(pivot)) {
        let nv = co(v);
        bron_kerbosch(g, r | 1u64 << v, p & nv, x & nv, out);
        p &= !(1u64 << v);
        x |= 1u64 << v;
    }
}

/// Maximum independent sets, sorted by bitset value.
pub fn maximum_independent_sets(g: &Graph) -> Vec<VertexSet> {
    let alpha = independence_number(g);
    independent_sets_of_size(g, alpha)
}

pub fn is_well_covered(g: &Graph) -> bool {
    let alpha = independence_number(g);
    maximal_independent_sets(g).iter().all(|s| s.len() == alpha)
}

/// W2 straight from the definition: `n >= 2`, and for all disjoint
/// independent sets `A`, `B` there are disjoint maximum independent sets
/// `A0 ⊇ A`, `B0 ⊇ B`.
///
/// Pairs with an empty side are included; well-coveredness is checked first
/// since every W2 graph is well-covered. For a fixed `A`, the sets `B` that
/// extend are exactly the subsets of maximum sets avoiding some maximum
/// superset of `A`, a downward-closed family, so only the maximal independent
/// sets of `G - A` need testing.
pub fn is_w2_definition(g: &Graph) -> bool {
    if g.order() < 2 || !is_well_covered(g) {
        return false;
    }
    let maximum = maximum_independent_sets(g);
    for a in independent_sets(g) {
        let over_a: Vec<u64> = maximum.iter().map(|m| m.bits()).filter(|&m| a.bits() & !m == 0).collect();
        let partners: Vec<u64> = maximum
            .iter()
            .map(|m| m.bits())
            .filter(|&m2| over_a.iter().any(|&m1| m1 & m2 == 0))
            .collect();
        if partners.is_empty() {
            return false;
        }
        let rest = g.vertices().difference(a);
        if rest.is_empty() {
            continue;
        }
        let (h, map) = g.induced_subgraph(rest);
        for b in maximal_independent_sets(&h) {
            let b = b.map_through(&map).bits();
            if !partners.iter().any(|&m2| b & !m2 == 0) {
                return false;
            }
        }
    }
    true
}

/// W2 through vertex deletion: every `G - v` is well-covered with the same
/// independence number. Requires `n >= 2` and no isolated vertices.
pub fn is_w2_deletion(g: &Graph) -> Result<bool> {
    if g.order() < 2 {
        return Err(Error::InvalidInput("W2 deletion test needs at least 2 vertices".into()));
    }
    if !g.isolated_vertices().is_empty() {
        return Err(Error::InvalidInput(format!(
            "W2 deletion test needs a graph without isolated vertices; found {}",
            g.isolated_vertices()
        )));
    }
    let alpha = independence_number(g);
    Ok((0..g.order()).all(|v| {
        let h = g.delete_vertex(v);
        independence_number(&h) == alpha && is_well_covered(&h)
    }))
}

#[cfg(test)]
mod tests {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn three_k2() -> Graph {
        Graph::from_edges(6, [(0, 1), (2, 3), (4, 5)]).unwrap()
    }

    fn c5_k2() -> Graph {
        Graph::cycle(5).disjoint_union(&Graph::complete(2))
    }

    fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
        let p = rng.gen_range(0.1..0.9);
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Test oracle: count by scanning all 2^n vertex subsets.
    fn brute_counts(g: &Graph) -> Vec<BigInt> {
        let mut counts = vec![0i64; g.order() + 1];
        for s in 0..1u64 << g.order() {
            if g.is_independent(VertexSet(s)) {
                counts[s.count_ones() as usize] += 1;
            }
        }
        while counts.len() > 1 && counts.last() == Some(&0) {
            counts.pop();
        }
        big(&counts)
    }

    /// Test oracle: maximal sets by scanning subsets.
    fn brute_maximal(g: &Graph) -> Vec<VertexSet> {
        (0..1u64 << g.order())
            .map(VertexSet)
            .filter(|&s| {
                g.is_independent(s)
                    && (0..g.order()).all(|v| s.contains(v) || !g.is_independent(s.union(VertexSet::singleton(v))))
            })
            .collect()
    }

    #[test]
    fn count_examples() {
        assert_eq!(independent_set_counts(&Graph::complete(3)), big(&[1, 3]));
        assert_eq!(independent_set_counts(&Graph::cycle(6).complement()), big(&[1, 6, 6]));
        assert_eq!(independent_set_counts(&three_k2()), big(&[1, 6, 12, 8]));
        assert_eq!(independent_set_counts(&three_k2()), brute_counts(&three_k2()));
        assert_eq!(independent_set_counts(&Graph::new(0)), big(&[1]));
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(independence_number(&Graph::complete(5)), 1);
        assert_eq!(independence_number(&Graph::cycle(9).complement()), 2);
        assert_eq!(independence_number(&c5_k2()), 3);
        assert_eq!(independence_number(&Graph::new(0)), 0);
    }

    #[test]
    fn polynomial_examples() {
        assert_eq!(independence_polynomial(&c5_k2()), IntPolynomial::new([1, 7, 15, 10]));
        assert_eq!(
            independence_polynomial(&c5_k2()),
            &independence_polynomial(&Graph::cycle(5)) * &independence_polynomial(&Graph::complete(2))
        );
        for n in 4..=10 {
            let g = Graph::cycle(n).complement();
            assert_eq!(independence_polynomial(&g), IntPolynomial::new([1, n as i64, n as i64]));
        }
        for k in 0..=7 {
            assert_eq!(independence_polynomial(&Graph::new(k)), IntPolynomial::one_plus_x().pow(k));
        }
    }

    #[test]
    fn maximal_set_examples() {
        let sets = |g: &Graph| maximal_independent_sets(g).iter().map(|s| s.to_vec()).collect::<Vec<_>>();
        assert_eq!(sets(&Graph::cycle(4)), vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(sets(&Graph::path(3)), vec![vec![1], vec![0, 2]]);
        assert_eq!(sets(&Graph::complete(2)), vec![vec![0], vec![1]]);
        assert_eq!(sets(&Graph::new(0)), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn well_covered_examples() {
        assert!(is_well_covered(&Graph::cycle(4)));
        assert!(!is_well_covered(&Graph::path(3)));
        assert!(is_well_covered(&Graph::cycle(5)));
    }

    #[test]
    fn w2_examples() {
        assert!(is_w2_definition(&Graph::complete(2)));
        assert!(!is_w2_definition(&Graph::cycle(4)));
        assert!(is_w2_definition(&three_k2()));
        assert!(!is_w2_definition(&Graph::new(1)));
        assert!(!is_w2_definition(&Graph::new(2)));

        assert_eq!(is_w2_deletion(&three_k2()), Ok(true));
        assert_eq!(is_w2_deletion(&Graph::cycle(4)), Ok(false));
        assert_eq!(is_w2_deletion(&Graph::cycle(6).complement()), Ok(true));
        assert!(matches!(is_w2_deletion(&Graph::new(3)), Err(Error::InvalidInput(_))));
        assert!(matches!(is_w2_deletion(&Graph::new(1)), Err(Error::InvalidInput(_))));
    }

    /// Test oracle: W2 by enumerating every disjoint pair of independent sets
    /// and every pair of maximum sets.
    fn brute_w2(g: &Graph) -> bool {
        if g.order() < 2 {
            return false;
        }
        let indep: Vec<u64> = (0..1u64 << g.order()).filter(|&s| g.is_independent(VertexSet(s))).collect();
        let alpha = indep.iter().map(|s| s.count_ones()).max().unwrap();
        let maximum: Vec<u64> = indep.iter().copied().filter(|s| s.count_ones() == alpha).collect();
        indep.iter().all(|&a| {
            indep.iter().filter(|&&b| a & b == 0).all(|&b| {
                maximum.iter().any(|&a0| {
                    a & !a0 == 0 && maximum.iter().any(|&b0| b & !b0 == 0 && a0 & b0 == 0)
                })
            })
        })
    }

    #[test]
    fn random_corpus_oracles() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for _ in 0..500 {
            let n = rng.gen_range(0..=12);
            let g = random_graph(&mut rng, n);
            assert_eq!(independent_set_counts(&g), brute_counts(&g), "{g:?}");
            assert_eq!(independence_number(&g) + 1, independent_set_counts(&g).len());
            if n <= 9 {
                assert_eq!(maximal_independent_sets(&g), brute_maximal(&g), "{g:?}");
                assert_eq!(is_w2_definition(&g), brute_w2(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn w2_definition_matches_deletion_characterisation() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        let mut checked = 0;
        let mut positives = 0;
        while checked < 400 {
            let n = rng.gen_range(2..=10);
            let g = random_graph(&mut rng, n);
            if !g.isolated_vertices().is_empty() {
                continue;
            }
            checked += 1;
            let def = is_w2_definition(&g);
            positives += def as usize;
            assert_eq!(Ok(def), is_w2_deletion(&g), "{g:?}");
        }
        for g in [three_k2(), c5_k2(), Graph::cycle(7).complement(), Graph::complete(2)] {
            assert!(is_w2_definition(&g));
            assert_eq!(is_w2_deletion(&g), Ok(true));
        }
        assert!(checked == 400 && positives < checked);
    }

    #[test]
    fn disjoint_union_multiplies_polynomials() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let (n1, n2) = (rng.gen_range(0..=7), rng.gen_range(0..=7));
            let (a, b) = (random_graph(&mut rng, n1), random_graph(&mut rng, n2));
            assert_eq!(
                independence_polynomial(&a.disjoint_union(&b)),
                &independence_polynomial(&a) * &independence_polynomial(&b)
            );
        }
    }
}
