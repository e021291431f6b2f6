//! Finite simplicial complexes in facet form: independence complexes,
//! f-vectors, h-polynomials, links, cores and the Euler condition.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use crate::independence::maximal_independent_sets;
use crate::poly::IntPolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComplexKind {
    /// No faces at all.
    Void,
    /// Exactly one face, the empty set.
    Irrelevant,
    /// At least one nonempty face.
    Proper,
}

/// A simplicial complex on the index set `0..n`, stored by its facets.
///
/// Facets are pairwise incomparable and kept sorted lexicographically by
/// their ascending vertex lists. The two degenerate complexes carry an empty
/// facet list and are told apart by [`ComplexKind`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    kind: ComplexKind,
    facets: Vec<VertexSet>,
}

/// Lexicographic order on ascending vertex lists.
pub fn lex_cmp(a: &VertexSet, b: &VertexSet) -> Ordering {
    a.iter().cmp(b.iter())
}

impl SimplicialComplex {
    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, kind: ComplexKind::Void, facets: Vec::new() }
    }

    pub fn irrelevant(n: usize) -> Self {
        SimplicialComplex { n, kind: ComplexKind::Irrelevant, facets: Vec::new() }
    }

    /// The full simplex on `vertices`.
    pub fn simplex(n: usize, vertices: VertexSet) -> Self {
        SimplicialComplex::from_facets(n, [vertices]).expect("simplex vertices within range")
    }

    /// Builds the complex generated by `sets`, discarding non-maximal ones.
    /// No sets gives the void complex; only the empty set gives `{∅}`.
    pub fn from_facets(n: usize, sets: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, max: MAX_VERTICES });
        }
        let mut sets: Vec<VertexSet> = sets.into_iter().collect();
        let range = VertexSet::full(n);
        if let Some(bad) = sets.iter().find(|s| !s.is_subset(range)) {
            return Err(Error::MalformedInput(format!("facet {bad} uses a vertex outside 0..{n}")));
        }
        if sets.is_empty() {
            return Ok(SimplicialComplex::void(n));
        }
        // Larger sets first so a single pass keeps exactly the maximal ones.
        sets.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        sets.dedup();
        let mut facets: Vec<VertexSet> = Vec::with_capacity(sets.len());
        for s in sets {
            if !facets.iter().any(|f| s.is_subset(*f)) {
                facets.push(s);
            }
        }
        if facets == [VertexSet::EMPTY] {
            return Ok(SimplicialComplex::irrelevant(n));
        }
        facets.sort_unstable_by(lex_cmp);
        Ok(SimplicialComplex { n, kind: ComplexKind::Proper, facets })
    }

    #[inline]
    pub fn ambient(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn kind(&self) -> ComplexKind {
        self.kind
    }

    pub fn is_void(&self) -> bool {
        self.kind == ComplexKind::Void
    }

    pub fn is_irrelevant(&self) -> bool {
        self.kind == ComplexKind::Irrelevant
    }

    /// Facets; empty for both degenerate complexes.
    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// Facets with `{∅}` reported as the single facet `∅`.
    fn generating_sets(&self) -> Result<Vec<VertexSet>> {
        match self.kind {
            ComplexKind::Void => Err(Error::VoidComplex),
            ComplexKind::Irrelevant => Ok(vec![VertexSet::EMPTY]),
            ComplexKind::Proper => Ok(self.facets.clone()),
        }
    }

    /// `None` for the void complex; `-1` for `{∅}`.
    pub fn dim(&self) -> Option<isize> {
        match self.kind {
            ComplexKind::Void => None,
            ComplexKind::Irrelevant => Some(-1),
            ComplexKind::Proper => self.facets.iter().map(|f| f.len() as isize - 1).max(),
        }
    }

    /// Vertices lying in some face.
    pub fn vertices(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |acc, f| acc.union(*f))
    }

    pub fn contains_face(&self, f: VertexSet) -> bool {
        match self.kind {
            ComplexKind::Void => false,
            ComplexKind::Irrelevant => f.is_empty(),
            ComplexKind::Proper => self.facets.iter().any(|s| f.is_subset(*s)),
        }
    }

    /// All faces grouped by size (`faces[k]` holds the faces with `k`
    /// vertices), each group in lexicographic order.
    pub fn faces(&self) -> Result<Vec<Vec<VertexSet>>> {
        let generators = self.generating_sets()?;
        let top = generators.iter().map(|f| f.len()).max().unwrap_or(0);
        let mut seen: HashSet<u64> = HashSet::new();
        let mut stack: Vec<VertexSet> = Vec::new();
        for f in generators {
            if seen.insert(f.bits()) {
                stack.push(f);
            }
        }
        while let Some(face) = stack.pop() {
            for v in face.iter() {
                let mut sub = face;
                sub.remove(v);
                if seen.insert(sub.bits()) {
                    stack.push(sub);
                }
            }
        }
        let mut by_size = vec![Vec::new(); top + 1];
        for bits in seen {
            let s = VertexSet(bits);
            by_size[s.len()].push(s);
        }
        for group in &mut by_size {
            group.sort_unstable_by(lex_cmp);
        }
        Ok(by_size)
    }

    pub fn f_vector(&self) -> Result<FVector> {
        let faces = self.faces()?;
        Ok(FVector { entries: faces.iter().map(|g| BigInt::from(g.len())).collect() })
    }

    pub fn is_pure(&self) -> Result<bool> {
        let generators = self.generating_sets()?;
        Ok(generators.windows(2).all(|w| w[0].len() == w[1].len()))
    }

    /// `h(t) = Σ_{i=0}^{d} f_{i-1} t^i (1-t)^{d-i}` with `d = dim + 1`.
    pub fn h_polynomial(&self) -> Result<IntPolynomial> {
        if !self.is_pure()? {
            return Err(Error::NotPure);
        }
        let f = self.f_vector()?;
        let d = f.entries.len() - 1;
        let one_minus_t = IntPolynomial::new([1, -1]);
        let mut h = IntPolynomial::zero();
        for (i, fi) in f.entries.iter().enumerate() {
            let mut term = one_minus_t.pow(d - i);
            let mut shifted = vec![BigInt::zero(); i];
            shifted.extend(term.coeffs().iter().map(|c| c * fi));
            term = IntPolynomial::new(shifted);
            h = &h + &term;
        }
        Ok(h)
    }

    /// `link(F) = { A \ F : F ⊆ A ∈ Δ }`, on the same index set.
    pub fn link(&self, f: VertexSet) -> Result<SimplicialComplex> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        if !self.contains_face(f) {
            return Err(Error::NotAFace);
        }
        if self.is_irrelevant() {
            return Ok(self.clone());
        }
        let sets = self.facets.iter().filter(|s| f.is_subset(**s)).map(|s| s.difference(f));
        SimplicialComplex::from_facets(self.n, sets)
    }

    /// Vertices contained in every facet.
    pub fn cone_points(&self) -> Result<VertexSet> {
        let generators = self.generating_sets()?;
        Ok(generators.iter().fold(VertexSet::full(self.n), |acc, f| acc.intersection(*f)))
    }

    /// Restriction to the non-cone vertices.
    pub fn core(&self) -> Result<SimplicialComplex> {
        let cone = self.cone_points()?;
        let sets: Vec<VertexSet> = self.generating_sets()?.iter().map(|f| f.difference(cone)).collect();
        SimplicialComplex::from_facets(self.n, sets)
    }

    /// Cone over the complex with apex `apex` (which must be unused).
    pub fn cone(&self, apex: usize) -> Result<SimplicialComplex> {
        if apex >= self.n || self.vertices().contains(apex) {
            return Err(Error::InvalidInput(format!("apex {apex} is not a free index")));
        }
        let sets = self.generating_sets()?.into_iter().map(|f| f.union(VertexSet::singleton(apex)));
        SimplicialComplex::from_facets(self.n, sets)
    }

    /// A face at which the Euler condition fails, if any. Purity is required
    /// first; a non-pure complex reports `∅`.
    pub fn euler_failure(&self) -> Result<Option<VertexSet>> {
        if !self.is_pure()? {
            return Ok(Some(VertexSet::EMPTY));
        }
        for group in self.faces()? {
            for face in group {
                let link = self.link(face)?;
                let d = link.dim().expect("links of faces are nonvoid");
                let chi = link.f_vector()?.alternating_sum();
                let expected = if d.rem_euclid(2) == 0 { BigInt::one() } else { -BigInt::one() };
                if chi != expected {
                    return Ok(Some(face));
                }
            }
        }
        Ok(None)
    }

    /// Pure, and every face `F` satisfies
    /// `Σ_{i=-1}^{d_F} (-1)^i f_i(link F) = (-1)^{d_F}`.
    pub fn is_euler(&self) -> Result<bool> {
        Ok(self.euler_failure()?.is_none())
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ComplexKind::Void => write!(f, "Complex(n={}, void)", self.n),
            ComplexKind::Irrelevant => write!(f, "Complex(n={}, {{∅}})", self.n),
            ComplexKind::Proper => write!(f, "Complex(n={}, facets={:?})", self.n, self.facets),
        }
    }
}

/// Face counts `f_{-1}, f_0, .., f_{d-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FVector {
    entries: Vec<BigInt>,
}

impl FVector {
    /// `entries()[k]` is `f_{k-1}`.
    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// `f_i` for `i >= -1`; zero beyond the dimension.
    pub fn get(&self, i: isize) -> BigInt {
        usize::try_from(i + 1).ok().and_then(|k| self.entries.get(k).cloned()).unwrap_or_default()
    }

    /// `Σ_{i>=-1} (-1)^i f_i`.
    pub fn alternating_sum(&self) -> BigInt {
        self.entries
            .iter()
            .enumerate()
            .map(|(k, f)| if k % 2 == 0 { -f.clone() } else { f.clone() })
            .sum()
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FVector{self}")
    }
}

/// The complex of independent sets of `g`; its facets are the maximal
/// independent sets.
pub fn independence_complex(g: &Graph) -> SimplicialComplex {
    SimplicialComplex::from_facets(g.order(), maximal_independent_sets(g))
        .expect("independent sets lie within the vertex range")
}

/// Parses the facet file format: an optional `n <count>` line, then one
/// facet per line as space-separated indices, or a single `irrelevant` /
/// `void` line for the degenerate complexes. `#` starts a comment.
pub fn parse_facets(text: &str) -> Result<SimplicialComplex> {
    let mut declared: Option<usize> = None;
    let mut marker: Option<&str> = None;
    let mut sets: Vec<VertexSet> = Vec::new();
    let mut max_index: Option<usize> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |msg: String| Error::MalformedInput(format!("line {}: {msg}", lineno + 1));
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            ["n", count] if declared.is_none() && sets.is_empty() && marker.is_none() => {
                let n: usize = count.parse().map_err(|_| bad(format!("bad vertex count {count:?}")))?;
                if n > MAX_VERTICES {
                    return Err(Error::TooLarge { n, max: MAX_VERTICES });
                }
                declared = Some(n);
            }
            [word @ ("irrelevant" | "void")] if sets.is_empty() && marker.is_none() => marker = Some(word),
            _ if marker.is_some() => return Err(bad("content after a degenerate-complex marker".into())),
            _ => {
                let mut s = VertexSet::EMPTY;
                for tok in fields {
                    let v: usize = tok.parse().map_err(|_| bad(format!("bad vertex {tok:?}")))?;
                    if v >= MAX_VERTICES {
                        return Err(Error::TooLarge { n: v + 1, max: MAX_VERTICES });
                    }
                    if s.contains(v) {
                        return Err(bad(format!("vertex {v} repeated in a facet")));
                    }
                    s.insert(v);
                    max_index = max_index.max(Some(v));
                }
                sets.push(s);
            }
        }
    }
    let n = match (declared, max_index) {
        (Some(n), Some(m)) if m >= n => {
            return Err(Error::MalformedInput(format!("vertex {m} out of range for n={n}")))
        }
        (Some(n), _) => n,
        (None, m) => m.map_or(0, |m| m + 1),
    };
    match marker {
        Some("irrelevant") => Ok(SimplicialComplex::irrelevant(n)),
        Some(_) => Ok(SimplicialComplex::void(n)),
        None if sets.is_empty() => Err(Error::MalformedInput("no facets and no marker".into())),
        None => SimplicialComplex::from_facets(n, sets),
    }
}

pub fn emit_facets(c: &SimplicialComplex) -> String {
    let mut out = format!("n {}\n", c.ambient());
    match c.kind() {
        ComplexKind::Void => out.push_str("void\n"),
        ComplexKind::Irrelevant => out.push_str("irrelevant\n"),
        ComplexKind::Proper => {
            for f in c.facets() {
                let parts: Vec<String> = f.iter().map(|v| v.to_string()).collect();
                out.push_str(&parts.join(" "));
                out.push('\n');
            }
        }
    }
    out
}
