//! Simple undirected graphs on at most 64 vertices, stored as one neighbour
//! bitset per vertex.

mod canon;
mod edgelist;
mod graph6;

pub(crate) use canon::last_root_cell;
pub use canon::{are_isomorphic, canonical_form, canonical_labeling, CanonicalForm, Labeling};
pub use edgelist::{emit_edge_list, parse_edge_list};
pub use graph6::{emit_graph6, parse_graph6};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex indices packed into a single word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Ascending iterator over the members.
    pub fn iter(self) -> Bits {
        Bits(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Image of the set under an index map (`map[i]` is the new index of `i`).
    pub fn map_through(self, map: &[usize]) -> VertexSet {
        self.iter().map(|v| map[v]).collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Iterator over set bits of a word, lowest first.
#[derive(Clone, Debug)]
pub struct Bits(pub(crate) u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Bits {}

/// A finite simple undirected graph on vertices `0..n`.
///
/// `adj[u]` has bit `v` set iff `uv` is an edge; the rows are symmetric,
/// irreflexive and clear above bit `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices. Panics if `n > 64`.
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        Graph { n, adj: vec![0; n] }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, max: MAX_VERTICES });
        }
        let mut g = Graph::new(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::MalformedInput(format!("edge {u}-{v} out of range for n={n}")));
            }
            if u == v {
                return Err(Error::MalformedInput(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw rows, checking every invariant.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, max: MAX_VERTICES });
        }
        let mask = VertexSet::full(n).bits();
        for (u, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::MalformedInput(format!("row {u} has bits beyond n={n}")));
            }
            if row >> u & 1 == 1 {
                return Err(Error::MalformedInput(format!("self-loop at vertex {u}")));
            }
            for v in Bits(row) {
                if rows[v] >> u & 1 == 0 {
                    return Err(Error::MalformedInput(format!("asymmetric edge {u}-{v}")));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        let all = VertexSet::full(n).bits();
        for u in 0..n {
            g.adj[u] = all & !(1u64 << u);
        }
        g
    }

    /// The cycle `0-1-..-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0);
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 1..n {
            g.add_edge(u - 1, u);
        }
        g
    }

    /// Vertices of `other` are shifted up by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        assert!(n <= MAX_VERTICES, "disjoint union exceeds {MAX_VERTICES} vertices");
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&row| row << self.n));
        Graph { n, adj }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge {u}-{v}");
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1u64 << v);
        self.adj[v] &= !(1u64 << u);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in Bits(self.adj[u] >> u >> 1) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.bits() == 0)
    }

    pub fn complement(&self) -> Graph {
        let all = VertexSet::full(self.n).bits();
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(u, &row)| !row & all & !(1u64 << u))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Induced subgraph on `s`, reindexed densely in ascending order of the
    /// original labels. The returned map sends new index to original index.
    pub fn induced_subgraph(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        let keep = s.intersection(self.vertices());
        let map: Vec<usize> = keep.to_vec();
        let mut rank = [0usize; MAX_VERTICES];
        for (i, &v) in map.iter().enumerate() {
            rank[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| {
                VertexSet(self.adj[v] & keep.bits())
                    .iter()
                    .fold(0u64, |acc, w| acc | 1u64 << rank[w])
            })
            .collect();
        (Graph { n: map.len(), adj }, map)
    }

    /// `F` together with every vertex adjacent to a member of `F`.
    pub fn closed_neighborhood(&self, f: VertexSet) -> VertexSet {
        f.iter().fold(f, |acc, v| acc.union(self.neighbors(v)))
    }

    /// `G \ N[F]` for an independent set `F`, with the index map back to `self`.
    pub fn g_sub_f(&self, f: VertexSet) -> Result<(Graph, Vec<usize>)> {
        if !f.is_subset(self.vertices()) {
            return Err(Error::InvalidInput(format!("{f} is not a subset of the vertex set")));
        }
        if !self.is_independent(f) {
            return Err(Error::NotIndependent);
        }
        let rest = self.vertices().difference(self.closed_neighborhood(f));
        Ok(self.induced_subgraph(rest))
    }

    /// Graph obtained by deleting one vertex.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        let mut keep = self.vertices();
        keep.remove(v);
        self.induced_subgraph(keep).0
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.component_of(0) == self.vertices()
    }

    pub fn component_of(&self, v: usize) -> VertexSet {
        let mut seen = 1u64 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for u in Bits(frontier) {
                next |= self.adj[u];
            }
            frontier = next & !seen;
            seen |= next;
        }
        VertexSet(seen)
    }

    /// Vertex sets of the connected components, ordered by least member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.component_of(v);
            left = left.difference(c);
            out.push(c);
        }
        out
    }

    /// Connected, 2-regular, and at least `k` vertices.
    pub fn is_cycle_at_least(&self, k: usize) -> bool {
        self.n >= k.max(3) && self.adj.iter().all(|r| r.count_ones() == 2) && self.is_connected()
    }

    pub fn is_triangle_free(&self) -> bool {
        (0..self.n).all(|u| {
            Bits(self.adj[u] >> u >> 1).all(|d| {
                let v = u + 1 + d;
                self.adj[u] & self.adj[v] == 0
            })
        })
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v] == 0).collect()
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            adj[perm[u]] = Bits(self.adj[u]).fold(0u64, |acc, w| acc | 1u64 << perm[w]);
        }
        Graph { n: self.n, adj }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
