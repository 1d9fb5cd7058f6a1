//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use mintough::graph::VertexSet;
use mintough::toughness::Toughness;
use mintough::{Graph, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// G(n, p) with a fixed seed.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every subset of the vertex set.
pub fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0u64..1 << n).map(VertexSet::from_bits)
}

/// τ and every minimising cutset, by scanning all 2^n subsets.
pub fn naive_toughness(g: &Graph) -> (Toughness, Vec<VertexSet>) {
    let mut best: Option<Rational> = None;
    let mut sets = Vec::new();
    for s in subsets(g.order()) {
        let omega = g.components_after_removing(s);
        if omega < 2 {
            continue;
        }
        let r = Rational::ratio(s.len(), omega);
        match best {
            Some(b) if r > b => {}
            Some(b) if r == b => sets.push(s),
            _ => {
                best = Some(r);
                sets = vec![s];
            }
        }
    }
    sets.sort_by(|a, b| a.lex_cmp(*b));
    (best.map_or(Toughness::Infinite, Toughness::Finite), sets)
}

pub fn naive_tau(g: &Graph) -> Toughness {
    naive_toughness(g).0
}

/// τ(G) = t and every edge deletion drops τ below t.
pub fn naive_minimally_tough(g: &Graph, t: Rational) -> bool {
    naive_tau(g) == t && g.edges().all(|e| naive_tau(&g.delete_edge(e).unwrap()) < t)
}

/// κ by trying every vertex set; n − 1 for complete graphs.
pub fn naive_kappa(g: &Graph) -> usize {
    let n = g.order();
    if g.is_complete() {
        return n.saturating_sub(1);
    }
    subsets(n)
        .filter(|&s| g.components_after_removing(s) >= 2)
        .map(VertexSet::len)
        .min()
        .unwrap()
}
