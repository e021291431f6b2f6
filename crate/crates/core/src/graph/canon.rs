//! Canonical labelling by individualisation-refinement.
//!
//! The search tree is the usual one: refine an ordered partition to an
//! equitable one, individualise each vertex of a target cell in turn, recurse.
//! Leaves are discrete partitions, read as labellings; the canonical form is
//! the lexicographically least relabelled adjacency matrix over all leaves.
//! Automorphisms discovered at equal leaves prune sibling subtrees (orbit
//! pruning) and trigger a jump back to the node where the current path left
//! the path of the matching leaf. The discovered automorphisms generate the
//! full automorphism group, which gives vertex orbits for free.

use std::fmt;

use serde::{Serialize, Serializer};

use super::{Bits, Graph, VertexSet};
use crate::error::{Error, Result};

/// Largest order accepted by the canonical-form routines.
pub const CANON_MAX_VERTICES: usize = 16;

/// Relabelling-invariant key: the vertex count followed by the rows of the
/// canonically relabelled adjacency matrix (two big-endian bytes per row).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn order(&self) -> usize {
        self.0[0] as usize
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

/// Output of [`canonical_labeling`].
#[derive(Clone, Debug)]
pub struct Labeling {
    pub form: CanonicalForm,
    /// `label[v]` is the canonical index of vertex `v`.
    pub label: Vec<usize>,
    /// `orbit[v]` is the least vertex in the automorphism orbit of `v`.
    pub orbit: Vec<usize>,
    /// Generators of the automorphism group, as vertex permutations.
    pub generators: Vec<Vec<usize>>,
}

impl Labeling {
    /// The vertex that receives the last canonical label.
    pub fn last_vertex(&self) -> Option<usize> {
        let n = self.label.len();
        self.label.iter().position(|&l| l + 1 == n)
    }

    pub fn same_orbit(&self, u: usize, v: usize) -> bool {
        self.orbit[u] == self.orbit[v]
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_labeling(g).map(|l| l.form)
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        // Still enforce the size cap so callers see consistent errors.
        for g in [a, b] {
            if g.order() > CANON_MAX_VERTICES {
                return Err(Error::TooLarge { n: g.order(), max: CANON_MAX_VERTICES });
            }
        }
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

pub fn canonical_labeling(g: &Graph) -> Result<Labeling> {
    let n = g.order();
    if n > CANON_MAX_VERTICES {
        return Err(Error::TooLarge { n, max: CANON_MAX_VERTICES });
    }
    let mut search = Search { g, first: None, best: None, generators: Vec::new() };
    if n > 0 {
        let mut path = Vec::with_capacity(n);
        search.descend(vec![g.vertices().bits()], &mut path);
    }
    let order = search.best.map(|leaf| leaf.order).unwrap_or_default();
    let mut label = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        label[v] = i;
    }
    let canon = g.permute(&label);
    let mut bytes = Vec::with_capacity(1 + 2 * n);
    bytes.push(n as u8);
    for &row in canon.rows() {
        bytes.extend_from_slice(&(row as u16).to_be_bytes());
    }
    let mut uf = UnionFind::new(n);
    for gen in &search.generators {
        for (v, &w) in gen.iter().enumerate() {
            uf.union(v, w);
        }
    }
    let orbit = (0..n).map(|v| uf.least(v)).collect();
    Ok(Labeling { form: CanonicalForm(bytes), label, orbit, generators: search.generators })
}

/// The last cell of the equitable refinement of the unit partition. The
/// vertex with the last canonical label always lies in it.
pub(crate) fn last_root_cell(g: &Graph) -> VertexSet {
    if g.order() == 0 {
        return VertexSet::EMPTY;
    }
    let mut cells = vec![g.vertices().bits()];
    refine(g, &mut cells);
    VertexSet(*cells.last().unwrap())
}

/// Refines an ordered partition (cells as bitsets) until it is equitable.
/// Each cell is split by the number of neighbours in a splitter cell, the
/// pieces ordered by that count; the procedure depends only on the graph
/// structure and the cell order, so it commutes with relabelling.
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let n = g.order();
    let rows = g.rows();
    let mut pieces: Vec<(u32, u64)> = Vec::with_capacity(n);
    loop {
        let mut changed = false;
        let mut wi = 0;
        while wi < cells.len() && cells.len() < n {
            let w = cells[wi];
            let mut next = Vec::with_capacity(cells.len() + 2);
            for &c in cells.iter() {
                if c & (c - 1) == 0 {
                    next.push(c);
                    continue;
                }
                pieces.clear();
                for v in Bits(c) {
                    let k = (rows[v] & w).count_ones();
                    match pieces.iter_mut().find(|(count, _)| *count == k) {
                        Some((_, bits)) => *bits |= 1u64 << v,
                        None => pieces.push((k, 1u64 << v)),
                    }
                }
                if pieces.len() > 1 {
                    pieces.sort_unstable_by_key(|&(count, _)| count);
                    changed = true;
                }
                next.extend(pieces.iter().map(|&(_, bits)| bits));
            }
            *cells = next;
            wi += 1;
        }
        if !changed || cells.len() == n {
            break;
        }
    }
}

struct Leaf {
    path: Vec<usize>,
    order: Vec<usize>,
    cert: Vec<u64>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

fn divergence(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl Search<'_> {
    /// Explores the subtree below `cells`. Returns `Some(k)` to unwind to the
    /// node at depth `k` after an automorphism made the rest of the current
    /// branch redundant.
    fn descend(&mut self, mut cells: Vec<u64>, path: &mut Vec<usize>) -> Option<usize> {
        let n = self.g.order();
        refine(self.g, &mut cells);
        if cells.len() == n {
            return self.leaf(&cells, path);
        }
        let depth = path.len();
        let (ti, &target) = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .expect("non-discrete partition has a non-singleton cell");
        let mut tried: Vec<usize> = Vec::new();
        for v in Bits(target) {
            if !tried.is_empty() && self.equivalent_to_tried(path, &tried, v) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..ti]);
            child.push(1u64 << v);
            child.push(target & !(1u64 << v));
            child.extend_from_slice(&cells[ti + 1..]);
            path.push(v);
            let jump = self.descend(child, path);
            path.pop();
            if let Some(k) = jump {
                if k < depth {
                    return Some(k);
                }
            }
        }
        None
    }

    /// Whether `v` shares an orbit with an explored sibling under the
    /// automorphisms found so far that fix the current path pointwise.
    fn equivalent_to_tried(&self, path: &[usize], tried: &[usize], v: usize) -> bool {
        let n = self.g.order();
        let mut uf = UnionFind::new(n);
        for gen in &self.generators {
            if path.iter().all(|&p| gen[p] == p) {
                for (a, &b) in gen.iter().enumerate() {
                    uf.union(a, b);
                }
            }
        }
        let root = uf.find(v);
        tried.iter().any(|&t| uf.find(t) == root)
    }

    fn leaf(&mut self, cells: &[u64], path: &[usize]) -> Option<usize> {
        let n = self.g.order();
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut label = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            label[v] = i;
        }
        let rows = self.g.rows();
        let cert: Vec<u64> = order
            .iter()
            .map(|&v| Bits(rows[v]).fold(0u64, |acc, w| acc | 1u64 << label[w]))
            .collect();
        let leaf = Leaf { path: path.to_vec(), order, cert };

        let Some(first) = &self.first else {
            self.best = Some(Leaf { path: leaf.path.clone(), order: leaf.order.clone(), cert: leaf.cert.clone() });
            self.first = Some(leaf);
            return None;
        };
        if leaf.cert == first.cert {
            let gen = automorphism(&leaf.order, &first.order);
            let k = divergence(path, &first.path);
            self.generators.push(gen);
            return Some(k);
        }
        let best = self.best.as_ref().expect("best is set with first");
        match leaf.cert.cmp(&best.cert) {
            std::cmp::Ordering::Less => {
                self.best = Some(leaf);
                None
            }
            std::cmp::Ordering::Equal => {
                let gen = automorphism(&leaf.order, &best.order);
                let k = divergence(path, &best.path);
                self.generators.push(gen);
                Some(k)
            }
            std::cmp::Ordering::Greater => None,
        }
    }
}

/// The permutation sending `from[i]` to `to[i]`.
fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut gen = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        gen[a] = b;
    }
    gen
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    /// Keeps the smaller root so that roots are orbit minima.
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    fn least(&mut self, v: usize) -> usize {
        self.find(v)
    }
}

#[cfg(test)]
mod tests {
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;

    /// Permutation-search isomorphism test, independent of refinement.
    fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
        fn extend(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: u64) -> bool {
            let i = map.len();
            if i == a.order() {
                return true;
            }
            for j in 0..b.order() {
                if used >> j & 1 == 1 || a.degree(i) != b.degree(j) {
                    continue;
                }
                if (0..i).all(|k| a.has_edge(i, k) == b.has_edge(j, map[k])) {
                    map.push(j);
                    if extend(a, b, map, used | 1 << j) {
                        return true;
                    }
                    map.pop();
                }
            }
            false
        }
        a.order() == b.order() && a.edge_count() == b.edge_count() && extend(a, b, &mut Vec::new(), 0)
    }

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
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

    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_perms(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn cycle_relabelings_share_a_key() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let c7 = Graph::cycle(7);
        let key = canonical_form(&c7).unwrap();
        for _ in 0..2 {
            let mut perm: Vec<usize> = (0..7).collect();
            perm.shuffle(&mut rng);
            assert_eq!(canonical_form(&c7.permute(&perm)).unwrap(), key);
        }
    }

    #[test]
    fn distinguishes_c6_from_two_triangles() {
        let two_k3 = Graph::cycle(3).disjoint_union(&Graph::cycle(3));
        assert_ne!(canonical_form(&Graph::cycle(6)).unwrap(), canonical_form(&two_k3).unwrap());
        let c5k1 = Graph::cycle(5).disjoint_union(&Graph::new(1));
        assert!(!are_isomorphic(&Graph::cycle(6), &c5k1).unwrap());
    }

    #[test]
    fn all_path_labelings_give_one_key() {
        let p4 = Graph::path(4);
        let keys: std::collections::HashSet<_> =
            all_perms(4).iter().map(|p| canonical_form(&p4.permute(p)).unwrap()).collect();
        assert_eq!(keys.len(), 1);
    }

    #[test]
    fn c5_is_self_complementary() {
        let c5 = Graph::cycle(5);
        assert!(brute_isomorphic(&c5, &c5.complement()));
        assert!(are_isomorphic(&c5, &c5.complement()).unwrap());
        assert!(are_isomorphic(&c5, &c5).unwrap());
    }

    #[test]
    fn invariant_under_random_relabeling() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..1000 {
            let n = rng.gen_range(0..=9);
            let p = rng.gen_range(0.1..0.9);
            let g = random_graph(&mut rng, n, p);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            assert_eq!(canonical_form(&g).unwrap(), canonical_form(&g.permute(&perm)).unwrap(), "{g:?}");
        }
    }

    #[test]
    fn agrees_with_permutation_search_up_to_six_vertices() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for n in 0..=6 {
            let graphs: Vec<Graph> = (0..60).map(|_| random_graph(&mut rng, n, 0.5)).collect();
            for a in &graphs {
                for b in graphs.iter().take(20) {
                    assert_eq!(are_isomorphic(a, b).unwrap(), brute_isomorphic(a, b), "{a:?} vs {b:?}");
                }
            }
        }
    }

    #[test]
    fn orbits_match_brute_force_automorphisms() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..150 {
            let n = rng.gen_range(1..=6);
            let p = rng.gen_range(0.2..0.8);
            let g = random_graph(&mut rng, n, p);
            let lab = canonical_labeling(&g).unwrap();
            let mut expect: Vec<usize> = (0..n).collect();
            for p in all_perms(n) {
                if g.permute(&p) == g {
                    for v in 0..n {
                        let (a, b) = (expect[v], expect[p[v]]);
                        let m = a.min(b);
                        for e in expect.iter_mut() {
                            if *e == a || *e == b {
                                *e = m;
                            }
                        }
                    }
                }
            }
            assert_eq!(lab.orbit, expect, "{g:?}");
            let canon = g.permute(&lab.label);
            assert_eq!(canonical_form(&canon).unwrap(), lab.form);
        }
    }

    #[test]
    fn highly_symmetric_graphs_stay_fast() {
        for g in [Graph::new(16), Graph::complete(16), Graph::cycle(16)] {
            let lab = canonical_labeling(&g).unwrap();
            assert!(lab.orbit.iter().all(|&o| o == 0));
        }
        let matching = (0..8).fold(Graph::new(0), |acc, _| acc.disjoint_union(&Graph::complete(2)));
        assert!(canonical_labeling(&matching).unwrap().orbit.iter().all(|&o| o == 0));
    }

    #[test]
    fn size_cap() {
        assert_eq!(canonical_form(&Graph::new(17)), Err(Error::TooLarge { n: 17, max: 16 }));
    }
}
