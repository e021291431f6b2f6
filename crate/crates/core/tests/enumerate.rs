use std::collections::HashSet;

use gkit_core::enumerate::{
    classify, classify_trianglefree_alpha3, figure1_graphs, generate, probe_connected_alpha3, probe_spec, same_classes,
    trianglefree_alpha3_spec, verify_alpha2_classification, DegreeRule, EdgeRule, Predicate, SearchSpec,
};
use gkit_core::field::FieldSpec;
use gkit_core::gorenstein::check_gorenstein_theorem;
use gkit_core::{Error, Graph};

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

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Independent canonical key: the least edge mask over all relabellings.
fn brute_key(n: usize, edges: &[(usize, usize)], perms: &[Vec<usize>]) -> u64 {
    let index = |u: usize, v: usize| {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        pairs(n).iter().position(|&p| p == (a, b)).unwrap()
    };
    let table: Vec<Vec<usize>> = (0..n).map(|u| (0..n).map(|v| if u == v { 0 } else { index(u, v) }).collect()).collect();
    perms
        .iter()
        .map(|p| edges.iter().fold(0u64, |acc, &(u, v)| acc | 1 << table[p[u]][p[v]]))
        .min()
        .unwrap()
}

/// All labelled graphs on `n` vertices, reduced to classes by brute force,
/// keeping one representative of each class that satisfies `keep`.
fn brute_classes(n: usize, keep: impl Fn(&Graph) -> bool) -> usize {
    let all = pairs(n);
    let perms = permutations(n);
    let mut seen = HashSet::new();
    for mask in 0u64..(1 << all.len()) {
        let edges: Vec<(usize, usize)> = all.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        let g = Graph::from_edges(n, edges.iter().copied()).unwrap();
        if keep(&g) {
            seen.insert(brute_key(n, &edges, &perms));
        }
    }
    seen.len()
}

fn brute_alpha(g: &Graph) -> usize {
    let n = g.order();
    (0u64..1 << n)
        .filter(|&s| (0..n).all(|u| s >> u & 1 == 0 || g.rows()[u] & s == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

fn has_triangle(g: &Graph) -> bool {
    let n = g.order();
    (0..n).any(|a| (a + 1..n).any(|b| (b + 1..n).any(|c| g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c))))
}

#[test]
fn class_counts_match_brute_force() {
    let expected = [1, 2, 4, 11, 34, 156];
    for n in 1..=6 {
        let got = generate(&SearchSpec::orders(n, n)).unwrap().graphs.len();
        assert_eq!(got, expected[n - 1], "n = {n}");
        assert_eq!(brute_classes(n, |_| true), expected[n - 1], "oracle n = {n}");
    }
}

#[test]
fn constrained_counts_match_brute_force() {
    for n in 2..=6 {
        let spec = SearchSpec { triangle_free: true, no_isolated: true, ..SearchSpec::orders(n, n) };
        let keep = |g: &Graph| !has_triangle(g) && g.degrees().iter().all(|&d| d > 0);
        assert_eq!(generate(&spec).unwrap().graphs.len(), brute_classes(n, keep), "n = {n}");

        let spec = SearchSpec { alpha: Some(2), connected: Some(true), ..SearchSpec::orders(n, n) };
        let keep = |g: &Graph| brute_alpha(g) == 2 && g.is_connected();
        assert_eq!(generate(&spec).unwrap().graphs.len(), brute_classes(n, keep), "n = {n}");

        let spec = SearchSpec { degrees: Some(DegreeRule::AtMostNMinus(3)), edges: Some(EdgeRule::Exact(n)), ..SearchSpec::orders(n, n) };
        let keep = |g: &Graph| g.edge_count() == n && g.degrees().iter().all(|&d| d + 3 <= n);
        assert_eq!(generate(&spec).unwrap().graphs.len(), brute_classes(n, keep), "n = {n}");
    }
}

#[test]
fn output_is_duplicate_free_and_sound() {
    let spec = SearchSpec { triangle_free: true, no_isolated: true, ..SearchSpec::orders(1, 8) };
    let out = generate(&spec).unwrap();
    let forms: HashSet<_> = out.graphs.iter().map(|g| g.form.clone()).collect();
    assert_eq!(forms.len(), out.graphs.len());
    for g in &out.graphs {
        assert!(!has_triangle(&g.graph) && g.graph.isolated_vertices().is_empty());
        assert_eq!(gkit_core::graph::canonical_form(&g.graph).unwrap(), g.form);
    }
    // Triangle-free graphs without isolated vertices on 8 vertices.
    assert_eq!(out.stats.last().unwrap().emitted, 303);
}

#[test]
fn complete_graph_from_edge_count() {
    let spec = SearchSpec { edges: Some(EdgeRule::Exact(10)), ..SearchSpec::orders(5, 5) };
    let out = generate(&spec).unwrap();
    assert_eq!(out.graphs.len(), 1);
    assert!(same_classes(&[out.graphs[0].graph.clone()], &[Graph::complete(5)]));
}

#[test]
fn small_triangle_free_slices() {
    let six = classify(&trianglefree_alpha3_spec(6, 6)).unwrap();
    assert!(same_classes(&six.graphs, &[figure1_graphs()[0].clone()]));
    let seven = classify(&trianglefree_alpha3_spec(7, 7)).unwrap();
    assert!(same_classes(&seven.graphs, &[Graph::cycle(5).disjoint_union(&Graph::complete(2))]));
    assert_eq!(six.entries[0].verdicts.get("w2"), Some(&true));
}

#[test]
fn triangle_free_alpha3_classification() {
    let result = classify_trianglefree_alpha3().unwrap();
    assert!(result.matches_figure1);
    assert!(result.recertified);
    assert_eq!(result.exhaustive.counts.values().copied().collect::<Vec<_>>(), vec![1, 1, 1]);
    assert!(result.constrained.entries.is_empty());
    assert_eq!(result.constrained.counts.len(), 4);
}

#[test]
fn figure_graphs_meet_the_hypotheses() {
    for g in figure1_graphs() {
        assert!(!has_triangle(&g));
        assert_eq!(brute_alpha(&g), 3);
        assert!(g.isolated_vertices().is_empty());
        for k in [FieldSpec::Q, FieldSpec::GF2, FieldSpec::GF3] {
            assert!(check_gorenstein_theorem(&g, k).accepted);
        }
    }
    assert_eq!(figure1_graphs()[2].edge_count(), 10);
}

#[test]
fn alpha2_classification_small() {
    let r = verify_alpha2_classification(7).unwrap();
    assert_eq!(r.exact_orders, vec![4, 5, 6, 7]);
    assert!(r.failures.is_empty());
    assert!(matches!(verify_alpha2_classification(11), Err(Error::InconsistentSpec(_))));
}

#[test]
fn probe_small_orders() {
    let r = probe_connected_alpha3(8, FieldSpec::Q).unwrap();
    assert!(r.control_accepted);
    assert!(r.hits_cross_validated);
    assert!(r.hits.graphs.iter().any(|g| same_classes(&[g.clone()], &[figure1_graphs()[2].clone()])));
    for g in &r.hits.graphs {
        assert!(g.is_connected());
        assert_eq!(brute_alpha(g), 3);
    }
}

#[test]
fn deterministic_across_thread_counts() {
    let run = |threads: usize| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| classify(&trianglefree_alpha3_spec(6, 8)).unwrap().json_lines())
    };
    let one = run(1);
    assert_eq!(one, run(4));
    assert_eq!(one.lines().count(), 3);
}

#[test]
fn inconsistent_specs() {
    assert!(matches!(generate(&SearchSpec::orders(5, 4)), Err(Error::InconsistentSpec(_))));
    assert!(matches!(generate(&SearchSpec::orders(1, 13)), Err(Error::InconsistentSpec(_))));
    let spec = SearchSpec { degrees: Some(DegreeRule::Alpha3Dichotomy), ..SearchSpec::orders(4, 4) };
    let out = generate(&spec).unwrap();
    assert!(out.graphs.is_empty());
    assert_eq!(out.diagnostics.len(), 1);
    assert_eq!("gorenstein:f2".parse::<Predicate>().unwrap(), Predicate::Gorenstein(FieldSpec::GF2));
    assert!("w3".parse::<Predicate>().is_err());
}

#[test]
fn cycle_link_pruning_loses_no_hits() {
    let pruned = classify(&probe_spec(6, 9, FieldSpec::Q)).unwrap();
    let full = classify(&SearchSpec { cycle_links: false, ..probe_spec(6, 9, FieldSpec::Q) }).unwrap();
    assert_eq!(pruned.json_lines(), full.json_lines());
    assert_eq!(pruned.counts.values().sum::<usize>(), 4);
    let bad = SearchSpec { cycle_links: true, ..SearchSpec::orders(4, 5) };
    assert!(matches!(generate(&bad), Err(Error::InconsistentSpec(_))));
}
