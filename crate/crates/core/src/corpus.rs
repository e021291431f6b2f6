//! Seeded random test corpus of graphs without isolated vertices.
//!
//! Uniform random graphs are almost never Gorenstein, so a fifth of the
//! corpus is built from Gorenstein pieces (`K2`, complements of cycles,
//! `C5 ∪ K2`), half of those with one edge toggled afterwards.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::builtins::fig1c;
use crate::graph::Graph;

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

fn attach_isolated(g: &mut Graph, rng: &mut ChaCha8Rng) {
    let n = g.order();
    for v in g.isolated_vertices().iter() {
        let mut u = rng.gen_range(0..n - 1);
        if u >= v {
            u += 1;
        }
        g.add_edge(u, v);
    }
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.15..0.85);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    attach_isolated(&mut g, rng);
    g
}

fn structured_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let mut g = Graph::new(0);
    loop {
        let room = max_n - g.order();
        let mut pieces = vec![Graph::complete(2)];
        pieces.extend((4..=room.min(8)).map(|k| Graph::cycle(k).complement()));
        if room >= 7 {
            pieces.push(Graph::cycle(5).disjoint_union(&Graph::complete(2)));
        }
        if room >= 8 {
            pieces.push(fig1c());
        }
        let fits: Vec<&Graph> = pieces.iter().filter(|p| p.order() <= room).collect();
        let Some(piece) = fits.choose(rng) else { break };
        g = g.disjoint_union(piece);
        if g.order() + 2 > max_n || rng.gen_bool(0.4) {
            break;
        }
    }
    if g.order() < 2 {
        g = Graph::complete(2);
    }
    let n = g.order();
    if rng.gen_bool(0.5) {
        let u = rng.gen_range(0..n);
        let v = (u + rng.gen_range(1..n)) % n;
        if g.has_edge(u, v) {
            g.remove_edge(u, v);
        } else {
            g.add_edge(u, v);
        }
        attach_isolated(&mut g, rng);
    }
    // Relabel so structure is not aligned with vertex order.
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    g.permute(&perm)
}

/// `count` graphs on 2..=`max_n` vertices, none with isolated vertices.
pub fn corpus(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    assert!(max_n >= 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            if rng.gen_bool(0.2) {
                structured_graph(&mut rng, max_n)
            } else {
                let n = rng.gen_range(2..=max_n);
                random_graph(&mut rng, n)
            }
        })
        .collect()
}

/// The standard corpus: 500 graphs on at most 9 vertices.
pub fn default_corpus() -> Vec<Graph> {
    corpus(DEFAULT_SEED, 500, 9)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_deterministic_and_clean() {
        let a = default_corpus();
        assert_eq!(a, default_corpus());
        assert_eq!(a.len(), 500);
        assert!(a.iter().all(|g| g.isolated_vertices().is_empty() && (2..=9).contains(&g.order())));
    }
}
