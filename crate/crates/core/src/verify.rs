//! The reproducible verification suite: every check the toolkit makes about
//! Gorenstein graphs, run end to end and summarised as one row per check.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::builtins::fig1c;
use crate::complex::{independence_complex, SimplicialComplex};
use crate::corpus::{corpus, DEFAULT_SEED};
use crate::enumerate::{
    classify_trianglefree_alpha3_with, figure1_graphs, generate, probe_connected_alpha3,
    verify_alpha2_classification_with, Alpha2Classification, ProbeResult, SearchSpec, TriangleFreeAlpha3,
};
use crate::field::FieldSpec;
use crate::gorenstein::{alpha3_invariants, check_gorenstein_homological, check_gorenstein_theorem, strip_isolated};
use crate::graph::{Graph, VertexSet};
use crate::homology::{boundary_matrix, is_cm_reisner, reduced_betti};
use crate::independence::{independence_number, independence_polynomial, independent_set_counts, is_w2_definition};
use crate::linalg::{rank_over, IntMatrix};
use crate::oracle::{labelled_class_count, naive_rational_rank, subset_counts};
use crate::poly::{rational, IntPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// Every check that ran passed, but a field the row needs was not
    /// configured.
    Conditional,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Conditional => "CONDITIONAL",
        })
    }
}

/// Deliberate defects for exercising the failure paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fault {
    /// h-vectors computed with the exponent `d + 1` instead of `d`.
    HOffByOne,
    /// The homological route's verdict is negated.
    RouteFlip,
}

impl std::str::FromStr for Fault {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "h-off-by-one" => Ok(Fault::HOffByOne),
            "route-flip" => Ok(Fault::RouteFlip),
            _ => Err(format!("unknown fault {s:?}; expected h-off-by-one or route-flip")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub fields: Vec<FieldSpec>,
    pub alpha2_max_n: usize,
    pub probe_max_n: usize,
    pub corpus_size: usize,
    pub corpus_max_n: usize,
    pub fault: Option<Fault>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            fields: vec![FieldSpec::Q, FieldSpec::GF2, FieldSpec::GF3],
            alpha2_max_n: 8,
            probe_max_n: 10,
            corpus_size: 500,
            corpus_max_n: 9,
            fault: None,
        }
    }
}

impl VerifyConfig {
    fn missing(&self, needed: &[FieldSpec]) -> Vec<FieldSpec> {
        needed.iter().copied().filter(|k| !self.fields.contains(k)).collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionRow {
    pub id: u8,
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
    #[serde(serialize_with = "millis")]
    pub elapsed: Duration,
}

fn millis<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

impl fmt::Display for CriterionRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} criterion {}: {} ({}) [{:.2}s]", self.status, self.id, self.name, self.detail, self.elapsed.as_secs_f64())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub rows: Vec<CriterionRow>,
    /// Some graph received different verdicts from the two routes.
    pub route_disagreement: bool,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.status == Status::Pass)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            writeln!(f, "{row}")?;
        }
        let passed = self.rows.iter().filter(|r| r.status == Status::Pass).count();
        write!(f, "{passed}/{} rows pass", self.rows.len())
    }
}

pub const CRITERIA: [(u8, &str); 9] = [
    (1, "alpha-2 classification"),
    (2, "triangle-free alpha-3 classification"),
    (3, "alpha-3 counting identities"),
    (4, "necessary conditions on accepted graphs"),
    (5, "route equivalence"),
    (6, "W2 necessity and triangle-free equivalence"),
    (7, "homology engine soundness"),
    (8, "brute-force oracles"),
    (9, "Dehn-Sommerville symmetry"),
];

/// Shared inputs, each computed on first use.
pub struct Workspace {
    cfg: VerifyConfig,
    alpha2: OnceLock<crate::Result<Alpha2Classification>>,
    trianglefree: OnceLock<crate::Result<TriangleFreeAlpha3>>,
    probe: OnceLock<crate::Result<ProbeResult>>,
    corpus: OnceLock<Vec<Graph>>,
}

struct Outcome {
    ok: bool,
    needs: Vec<FieldSpec>,
    detail: String,
}

impl Outcome {
    fn new(ok: bool, detail: impl Into<String>) -> Self {
        Outcome { ok, needs: Vec::new(), detail: detail.into() }
    }

    fn needs(mut self, fields: &[FieldSpec]) -> Self {
        self.needs = fields.to_vec();
        self
    }
}

fn failed(e: &crate::Error) -> Outcome {
    Outcome::new(false, format!("error: {e}"))
}

impl Workspace {
    pub fn new(cfg: VerifyConfig) -> Self {
        Workspace {
            cfg,
            alpha2: OnceLock::new(),
            trianglefree: OnceLock::new(),
            probe: OnceLock::new(),
            corpus: OnceLock::new(),
        }
    }

    pub fn config(&self) -> &VerifyConfig {
        &self.cfg
    }

    fn alpha2(&self) -> &crate::Result<Alpha2Classification> {
        self.alpha2.get_or_init(|| verify_alpha2_classification_with(self.cfg.alpha2_max_n, &self.cfg.fields))
    }

    fn trianglefree(&self) -> &crate::Result<TriangleFreeAlpha3> {
        self.trianglefree.get_or_init(|| classify_trianglefree_alpha3_with(&self.cfg.fields))
    }

    fn probe(&self) -> &crate::Result<ProbeResult> {
        self.probe.get_or_init(|| probe_connected_alpha3(self.cfg.probe_max_n, FieldSpec::Q))
    }

    fn corpus(&self) -> &[Graph] {
        self.corpus.get_or_init(|| corpus(DEFAULT_SEED, self.cfg.corpus_size, self.cfg.corpus_max_n))
    }

    /// Accepted graphs from the three classification runs, plus the cycle
    /// complements on `9..=12`.
    fn accepted_graphs(&self) -> crate::Result<Vec<Graph>> {
        let mut out = Vec::new();
        let alpha2 = self.alpha2().as_ref().map_err(Clone::clone)?;
        for (e, g) in alpha2.all.entries.iter().zip(&alpha2.all.graphs) {
            if e.verdicts.values().all(|&v| v) {
                out.push(g.clone());
            }
        }
        out.extend((9..=12).map(|n| Graph::cycle(n).complement()));
        out.extend(self.trianglefree().as_ref().map_err(Clone::clone)?.exhaustive.graphs.iter().cloned());
        out.extend(self.probe().as_ref().map_err(Clone::clone)?.hits.graphs.iter().cloned());
        Ok(out)
    }

    /// Every graph the suite touches: the full alpha-2 sweep, the accepted
    /// graphs and the random corpus.
    fn all_graphs(&self) -> crate::Result<Vec<Graph>> {
        let mut out = self.accepted_graphs()?;
        out.extend(self.alpha2().as_ref().map_err(Clone::clone)?.all.graphs.iter().cloned());
        out.extend(self.corpus().iter().cloned());
        Ok(out)
    }

    fn homological(&self, g: &Graph, k: FieldSpec) -> bool {
        let v = check_gorenstein_homological(g, k).accepted;
        if self.cfg.fault == Some(Fault::RouteFlip) {
            !v
        } else {
            v
        }
    }

    fn h_polynomial(&self, c: &SimplicialComplex) -> crate::Result<IntPolynomial> {
        let h = c.h_polynomial()?;
        Ok(match self.cfg.fault {
            Some(Fault::HOffByOne) => &h * &IntPolynomial::new([1, -1]),
            _ => h,
        })
    }

    pub fn run(&self, id: u8) -> CriterionRow {
        let name = CRITERIA.iter().find(|(i, _)| *i == id).map_or("unknown", |(_, n)| n);
        let started = Instant::now();
        let outcome = match id {
            1 => self.alpha2_classification(),
            2 => self.trianglefree_classification(),
            3 => self.alpha3_identities(),
            4 => self.necessities(),
            5 => self.route_equivalence(),
            6 => self.w2(),
            7 => self.homology_soundness(),
            8 => self.oracles(),
            9 => self.dehn_sommerville(),
            _ => Outcome::new(false, format!("no criterion {id}")),
        };
        let missing = self.cfg.missing(&outcome.needs);
        let (status, detail) = match (outcome.ok, missing.is_empty()) {
            (false, _) => (Status::Fail, outcome.detail),
            (true, true) => (Status::Pass, outcome.detail),
            (true, false) => {
                let names: Vec<String> = missing.iter().map(ToString::to_string).collect();
                (Status::Conditional, format!("{}; not run over {}", outcome.detail, names.join(", ")))
            }
        };
        CriterionRow { id, name, status, detail, elapsed: started.elapsed() }
    }

    fn alpha2_classification(&self) -> Outcome {
        let r = match self.alpha2() {
            Ok(r) => r,
            Err(e) => return failed(e),
        };
        let large: Vec<usize> = (9..=12)
            .filter(|&n| {
                let g = Graph::cycle(n).complement();
                !self.cfg.fields.iter().all(|&k| check_gorenstein_theorem(&g, k).accepted)
            })
            .collect();
        let ok = r.failures.is_empty() && large.is_empty() && !r.exact_orders.is_empty();
        Outcome::new(
            ok,
            format!(
                "{} graphs on n=4..{}, exact at {:?}, failures {:?}; cycle complements rejected at {:?}",
                r.all.entries.len(),
                self.cfg.alpha2_max_n,
                r.exact_orders,
                r.failures,
                large
            ),
        )
        .needs(&[FieldSpec::Q, FieldSpec::GF2])
    }

    fn trianglefree_classification(&self) -> Outcome {
        let r = match self.trianglefree() {
            Ok(r) => r,
            Err(e) => return failed(e),
        };
        let ok = r.matches_figure1 && r.recertified && r.constrained.entries.is_empty();
        Outcome::new(
            ok,
            format!(
                "n=6..8 gives {:?}, figure graphs {}; n=9..12 gives {} ({})",
                r.exhaustive.counts,
                if r.matches_figure1 { "matched" } else { "NOT matched" },
                r.constrained.entries.len(),
                r.note
            ),
        )
    }

    fn alpha3_identities(&self) -> Outcome {
        let probe = match self.probe() {
            Ok(p) => p,
            Err(e) => return failed(e),
        };
        let mut graphs = figure1_graphs();
        graphs.extend(probe.hits.graphs.iter().cloned());
        let mut bad = Vec::new();
        for g in &graphs {
            let n = g.order() as i64;
            let ok = alpha3_invariants(g).is_ok_and(|r| r.all_match)
                && independence_polynomial(g) == IntPolynomial::new([1, n, 3 * n - 6, 2 * n - 4])
                && self.h_polynomial(&independence_complex(g)).ok() == Some(IntPolynomial::new([1, n - 3, n - 3, 1]));
            if !ok {
                bad.push(crate::graph::emit_graph6(g));
            }
        }
        Outcome::new(
            bad.is_empty() && probe.hits_cross_validated,
            format!(
                "{} graphs (3 figure graphs, probe hits to n={} {:?}), failing {:?}",
                graphs.len(),
                self.cfg.probe_max_n,
                probe.hits.counts,
                bad
            ),
        )
    }

    fn necessities(&self) -> Outcome {
        let mut graphs = match self.accepted_graphs() {
            Ok(g) => g,
            Err(e) => return failed(&e),
        };
        graphs.extend(self.corpus().iter().filter(|g| check_gorenstein_theorem(g, FieldSpec::Q).accepted).cloned());
        let failures: Vec<String> = graphs
            .par_iter()
            .filter_map(|g| {
                let (h, _) = strip_isolated(g);
                let alpha = independence_number(&h);
                let poly = independence_polynomial(&h);
                let sign = if alpha % 2 == 0 { 1 } else { -1 };
                let c = independence_complex(&h);
                let mut bad = Vec::new();
                if poly.evaluate(&rational(-1, 1)) != rational(sign, 1) {
                    bad.push("I(-1)");
                }
                if alpha % 2 == 1 && poly.evaluate(&rational(-1, 2)) != rational(0, 1) {
                    bad.push("I(-1/2)");
                }
                if !c.is_euler().unwrap_or(false) {
                    bad.push("euler");
                }
                if c.core().ok().as_ref() != Some(&c) {
                    bad.push("core");
                }
                (!bad.is_empty()).then(|| format!("{}: {}", crate::graph::emit_graph6(g), bad.join(",")))
            })
            .collect();
        Outcome::new(failures.is_empty(), format!("{} accepted graphs, failures {:?}", graphs.len(), failures))
    }

    fn route_equivalence(&self) -> Outcome {
        let graphs = match self.all_graphs() {
            Ok(g) => g,
            Err(e) => return failed(&e),
        };
        let fields = &self.cfg.fields;
        let disagreements: Vec<String> = graphs
            .par_iter()
            .flat_map_iter(|g| {
                fields.iter().filter_map(move |&k| {
                    let theorem = check_gorenstein_theorem(g, k).accepted;
                    (theorem != self.homological(g, k)).then(|| format!("{} over {k}", crate::graph::emit_graph6(g)))
                })
            })
            .collect();
        let shown: Vec<&String> = disagreements.iter().take(5).collect();
        Outcome::new(
            disagreements.is_empty(),
            format!(
                "{} graphs x {} fields, {} disagreements {:?}",
                graphs.len(),
                fields.len(),
                disagreements.len(),
                shown
            ),
        )
        .needs(&[FieldSpec::Q, FieldSpec::GF2, FieldSpec::GF3])
    }

    fn w2(&self) -> Outcome {
        let mut accepted = match self.accepted_graphs() {
            Ok(g) => g,
            Err(e) => return failed(&e),
        };
        accepted.extend(self.corpus().iter().filter(|g| check_gorenstein_theorem(g, FieldSpec::Q).accepted).cloned());
        let not_w2 = accepted.iter().filter(|g| !is_w2_definition(&strip_isolated(g).0)).count();

        let mut trianglefree: Vec<Graph> = self.corpus().iter().filter(|g| g.is_triangle_free()).cloned().collect();
        let spec = SearchSpec { triangle_free: true, no_isolated: true, ..SearchSpec::orders(2, 8) };
        match generate(&spec) {
            Ok(out) => trianglefree.extend(out.graphs.into_iter().map(|g| g.graph)),
            Err(e) => return failed(&e),
        }
        let mismatched = trianglefree
            .par_iter()
            .filter(|g| {
                let w2 = is_w2_definition(g);
                self.cfg.fields.iter().any(|&k| check_gorenstein_theorem(g, k).accepted != w2)
            })
            .count();
        Outcome::new(
            not_w2 == 0 && mismatched == 0,
            format!(
                "{} accepted graphs, {not_w2} not W2; {} triangle-free graphs, {mismatched} where W2 and the verdict differ",
                accepted.len(),
                trianglefree.len()
            ),
        )
    }

    fn homology_soundness(&self) -> Outcome {
        let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED ^ 7);
        let mut dd_failures = 0;
        for _ in 0..300 {
            let n = rng.gen_range(1..=7);
            let count = rng.gen_range(1..=6);
            let facets: Vec<VertexSet> = (0..count).map(|_| VertexSet(rng.gen_range(1u64..1 << n))).collect();
            let c = SimplicialComplex::from_facets(n, facets).expect("valid facets");
            let top = c.dim().unwrap_or(-1);
            for i in 0..=top + 1 {
                let composed = boundary_matrix(&c, i - 1).and_then(|a| Ok(a.mul(&boundary_matrix(&c, i)?)));
                if !composed.is_ok_and(|m| m.is_zero()) {
                    dd_failures += 1;
                }
            }
        }

        let cycle_failures: Vec<String> = (3..=12)
            .flat_map(|n| self.cfg.fields.iter().map(move |&k| (n, k)))
            .filter(|&(n, k)| {
                let c = SimplicialComplex::from_facets(n, (0..n).map(|i| VertexSet::singleton(i).union(VertexSet::singleton((i + 1) % n))))
                    .expect("cycle");
                let b = reduced_betti(&c, k).expect("nonvoid");
                (b.get(0), b.get(1)) != (0, 1)
            })
            .map(|(n, k)| format!("C{n} over {k}"))
            .collect();

        let rp2 = rp2();
        let over_q = is_cm_reisner(&rp2, FieldSpec::Q).is_ok_and(|v| v.accepted);
        let over_f2 = is_cm_reisner(&rp2, FieldSpec::GF2).is_ok_and(|v| v.accepted);

        Outcome::new(
            dd_failures == 0 && cycle_failures.is_empty() && over_q && !over_f2,
            format!(
                "boundary composites nonzero {dd_failures}/300 complexes; cycle failures {cycle_failures:?}; \
                 RP2 CM over Q {over_q}, over GF(2) {over_f2}"
            ),
        )
        .needs(&[FieldSpec::Q, FieldSpec::GF2])
    }

    fn oracles(&self) -> Outcome {
        let graphs = corpus(DEFAULT_SEED ^ 14, 500, 14);
        let count_failures = graphs.par_iter().filter(|g| independent_set_counts(g) != subset_counts(g)).count();

        let classes: Vec<(usize, usize, usize)> = (1..=6)
            .map(|n| {
                let generated = generate(&SearchSpec::orders(n, n)).map_or(0, |o| o.graphs.len());
                (n, generated, labelled_class_count(n))
            })
            .collect();
        let classes_ok = classes.iter().all(|&(_, a, b)| a == b) && classes[3].1 == 11;

        let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED ^ 200);
        let rank_failures = (0..200)
            .filter(|_| {
                let (r, c) = (rng.gen_range(1..=7), rng.gen_range(1..=7));
                let span = rng.gen_range(1..=20i64);
                let rows: Vec<Vec<BigInt>> =
                    (0..r).map(|_| (0..c).map(|_| BigInt::from(rng.gen_range(-span..=span))).collect()).collect();
                let m = IntMatrix::from_rows(&rows);
                rank_over(&m, FieldSpec::Q) != naive_rational_rank(&m)
            })
            .count();

        let summary: BTreeMap<usize, usize> = classes.iter().map(|&(n, a, _)| (n, a)).collect();
        Outcome::new(
            count_failures == 0 && classes_ok && rank_failures == 0,
            format!(
                "subset counts differ on {count_failures}/500 graphs (n<=14); classes {summary:?} vs labelled brute force {}; \
                 rank differs on {rank_failures}/200 matrices",
                if classes_ok { "equal" } else { "DIFFERENT" }
            ),
        )
    }

    fn dehn_sommerville(&self) -> Outcome {
        let mut graphs = match self.accepted_graphs() {
            Ok(g) => g,
            Err(e) => return failed(&e),
        };
        graphs.push(fig1c());
        graphs.extend(self.corpus().iter().filter(|g| check_gorenstein_theorem(g, FieldSpec::Q).accepted).cloned());
        let asymmetric: Vec<String> = graphs
            .iter()
            .filter(|g| {
                let c = independence_complex(&strip_isolated(g).0);
                let d = c.dim().map_or(0, |d| (d + 1) as usize);
                !self.h_polynomial(&c).is_ok_and(|h| h.degree() <= Some(d) && h.is_palindromic_to(d))
            })
            .map(crate::graph::emit_graph6)
            .take(5)
            .collect();
        Outcome::new(asymmetric.is_empty(), format!("{} accepted graphs, asymmetric h {:?}", graphs.len(), asymmetric))
    }
}

/// The six-vertex real projective plane.
pub fn rp2() -> SimplicialComplex {
    const FACETS: [[usize; 3]; 10] =
        [[0, 1, 3], [0, 1, 5], [0, 2, 4], [0, 2, 5], [0, 3, 4], [1, 2, 3], [1, 2, 4], [1, 4, 5], [2, 3, 5], [3, 4, 5]];
    SimplicialComplex::from_facets(6, FACETS.iter().map(|f| f.iter().copied().collect())).expect("valid facets")
}

pub fn verify(cfg: VerifyConfig) -> VerifyReport {
    let ws = Workspace::new(cfg);
    let rows: Vec<CriterionRow> = CRITERIA.iter().map(|&(id, _)| ws.run(id)).collect();
    let route_disagreement = rows.iter().any(|r| r.id == 5 && r.status == Status::Fail);
    VerifyReport { rows, route_disagreement }
}
