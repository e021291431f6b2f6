//! Reduced simplicial homology over Q and GF(p), with the Reisner
//! Cohen-Macaulay test and the homological Gorenstein test built on it.
//!
//! Chain groups are augmented: the empty face spans degree -1, so `{∅}` has
//! `β̃_{-1} = 1`. Faces of each dimension are indexed in lexicographic order
//! of their sorted vertex lists and dropping the `j`-th smallest vertex
//! carries sign `(-1)^j`.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::graph::VertexSet;
use crate::linalg::{rank_of_rows, IntMatrix};
use crate::verdict::{Condition, Route, Verdict, Witness};

/// Reduced Betti numbers `β̃_{-1}, …, β̃_d` over one field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiProfile {
    pub field: FieldSpec,
    pub betti: Vec<usize>,
}

impl BettiProfile {
    /// `β̃_i`, zero outside the stored range.
    pub fn get(&self, i: isize) -> usize {
        usize::try_from(i + 1).ok().and_then(|j| self.betti.get(j).copied()).unwrap_or(0)
    }

    /// Top degree `d`; the profile covers `-1..=d`.
    pub fn top(&self) -> isize {
        self.betti.len() as isize - 2
    }

    /// `Σ (-1)^i β̃_i`.
    pub fn euler_characteristic(&self) -> i64 {
        (-1..=self.top()).map(|i| if i.rem_euclid(2) == 0 { 1 } else { -1 } * self.get(i) as i64).sum()
    }
}

impl fmt::Display for BettiProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.betti.iter().map(usize::to_string).collect();
        write!(f, "({}) over {}", items.join(", "), self.field)
    }
}

fn boundary_rows(lower: &[VertexSet], upper: &[VertexSet]) -> Vec<Vec<i8>> {
    let index: HashMap<u64, usize> = lower.iter().enumerate().map(|(i, f)| (f.bits(), i)).collect();
    let mut rows = vec![vec![0i8; upper.len()]; lower.len()];
    for (col, face) in upper.iter().enumerate() {
        for (j, v) in face.iter().enumerate() {
            let mut sub = *face;
            sub.remove(v);
            let row = index[&sub.bits()];
            rows[row][col] = if j % 2 == 0 { 1 } else { -1 };
        }
    }
    rows
}

/// Matrix of `∂_i : C_i → C_{i-1}` for `-1 ≤ i ≤ dim + 1`.
pub fn boundary_matrix(c: &SimplicialComplex, i: isize) -> Result<IntMatrix> {
    let dim = c.dim().ok_or(Error::VoidComplex)?;
    if i < -1 || i > dim + 1 {
        return Err(Error::IndexOutOfRange { index: i, max: dim + 1 });
    }
    let faces = c.faces()?;
    let group = |size: isize| -> &[VertexSet] {
        usize::try_from(size).ok().and_then(|s| faces.get(s)).map_or(&[], Vec::as_slice)
    };
    // Faces of dimension i have i + 1 vertices.
    let (lower, upper) = (group(i), group(i + 1));
    let rows = boundary_rows(lower, upper);
    let mut m = IntMatrix::zeros(lower.len(), upper.len());
    for (r, row) in rows.iter().enumerate() {
        for (col, &x) in row.iter().enumerate() {
            if x != 0 {
                m.set(r, col, x);
            }
        }
    }
    Ok(m)
}

pub fn reduced_betti(c: &SimplicialComplex, k: FieldSpec) -> Result<BettiProfile> {
    let faces = c.faces()?;
    let top = faces.len() - 1;
    // rank[s] is the rank of the map from size-s faces to size-(s-1) faces.
    let mut rank = vec![0usize; top + 2];
    for s in 1..=top {
        rank[s] = rank_of_rows(boundary_rows(&faces[s - 1], &faces[s]), k);
    }
    let betti = (0..=top).map(|s| faces[s].len() - rank[s] - rank[s + 1]).collect();
    Ok(BettiProfile { field: k, betti })
}

/// First `(i, wanted, β̃_i)` on the link of `face` where `expect(i, d)`
/// names a value that differs from `β̃_i`.
fn link_failure(
    c: &SimplicialComplex,
    face: VertexSet,
    k: FieldSpec,
    expect: impl Fn(isize, isize) -> Option<usize>,
) -> Option<(isize, usize, usize)> {
    let link = c.link(face).expect("face of the complex");
    let d = link.dim().expect("links of faces are nonvoid");
    let betti = reduced_betti(&link, k).expect("nonvoid link");
    (-1..=d).find_map(|i| expect(i, d).filter(|&want| want != betti.get(i)).map(|want| (i, want, betti.get(i))))
}

/// Reisner: for every face `F`, `β̃_i(link F) = 0` for all `i < dim link F`.
pub fn is_cm_reisner(c: &SimplicialComplex, k: FieldSpec) -> Result<Verdict> {
    let faces = c.faces()?;
    let checked = vec![Condition::CohenMacaulay];
    // Links of dimension ≤ 0 cannot fail: a nonempty point set has β̃_{-1} = 0.
    let Some(top) = c.dim() else { return Err(Error::VoidComplex) };
    let candidates: Vec<VertexSet> =
        faces.iter().flatten().copied().filter(|f| top - (f.len() as isize) >= 1).collect();
    let failure = candidates.par_iter().find_map_first(|&f| {
        link_failure(c, f, k, |i, d| (i < d).then_some(0)).map(|w| (f, w))
    });
    Ok(match failure {
        None => Verdict::accept(Route::Homological, Some(k), checked),
        Some((f, (i, _, got))) => Verdict::reject(
            Route::Homological,
            Some(k),
            checked,
            Witness {
                condition: Condition::CohenMacaulay,
                face: Some(f.to_vec()),
                degree: Some(i),
                expected: "0".into(),
                found: got.to_string(),
            },
        ),
    })
}

/// Every link in the core is a homology sphere of its own dimension.
pub fn is_gorenstein_homological(c: &SimplicialComplex, k: FieldSpec) -> Result<Verdict> {
    let core = c.core()?;
    let checked = vec![Condition::SphereLinks];
    if core.is_irrelevant() {
        return Ok(Verdict::accept(Route::Homological, Some(k), checked));
    }
    let faces = core.faces()?;
    // Facet links are {∅}, which always pass.
    let candidates: Vec<VertexSet> =
        faces.iter().flatten().copied().filter(|f| !core.facets().contains(f)).collect();
    let failure = candidates.par_iter().find_map_first(|&f| {
        link_failure(&core, f, k, |i, d| Some(usize::from(i == d))).map(|w| (f, w))
    });
    Ok(match failure {
        None => Verdict::accept(Route::Homological, Some(k), checked),
        Some((f, (i, want, got))) => Verdict::reject(
            Route::Homological,
            Some(k),
            checked,
            Witness {
                condition: Condition::SphereLinks,
                face: Some(f.to_vec()),
                degree: Some(i),
                expected: want.to_string(),
                found: got.to_string(),
            },
        ),
    })
}
