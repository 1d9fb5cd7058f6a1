mod common;

use common::{naive_kappa, naive_tau, random_graph, rng};
use mintough::corpus::canonical_code;
use mintough::graph::{emit_graph6, parse_graph6};
use mintough::minimality::check_minimally_t_tough;
use mintough::toughness::{find_violating_cutset, is_t_tough, toughness_value, Toughness};
use mintough::{Graph, Rational};
use proptest::prelude::*;
use rand::seq::SliceRandom;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.05f64..0.95, any::<u64>()).prop_map(|(n, p, seed)| random_graph(&mut rng(seed), n, p))
}

fn permuted(g: &Graph, seed: u64) -> Graph {
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(&mut rng(seed));
    g.relabel(&perm)
}

fn target() -> impl Strategy<Value = Rational> {
    (1u64..=4, 1u64..=3).prop_map(|(a, b)| Rational::new(a, b).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn toughness_is_isomorphism_invariant(g in graph(9), seed in any::<u64>()) {
        let h = permuted(&g, seed);
        prop_assert_eq!(toughness_value(&g), toughness_value(&h));
        prop_assert_eq!(canonical_code(&g), canonical_code(&h));
    }

    #[test]
    fn deleting_an_edge_never_raises_toughness(g in graph(9), pick in any::<prop::sample::Index>()) {
        let edges: Vec<_> = g.edges().collect();
        prop_assume!(!edges.is_empty());
        let e = edges[pick.index(edges.len())];
        prop_assert!(toughness_value(&g.delete_edge(e).unwrap()) <= toughness_value(&g));
    }

    #[test]
    fn toughness_at_most_half_connectivity(g in graph(8)) {
        prop_assume!(!g.is_complete());
        let tau = toughness_value(&g);
        prop_assert_eq!(tau, naive_tau(&g));
        prop_assert!(tau <= Rational::ratio(naive_kappa(&g), 2));
    }

    #[test]
    fn violating_cutset_agrees_with_threshold(g in graph(9), t in target()) {
        let tough = is_t_tough(&g, t);
        prop_assert_eq!(tough, toughness_value(&g) >= Toughness::Finite(t));
        match find_violating_cutset(&g, t) {
            None => prop_assert!(tough),
            Some(s) => {
                prop_assert!(!tough);
                let omega = g.components_after_removing(s);
                prop_assert!(omega >= 2 && t.exceeds_ratio(s.len(), omega));
            }
        }
    }

    #[test]
    fn minimal_graphs_have_exact_toughness(g in graph(7)) {
        if let Toughness::Finite(t) = toughness_value(&g) {
            if t > Rational::ZERO && check_minimally_t_tough(&g, t) {
                for e in g.edges() {
                    prop_assert!(naive_tau(&g.delete_edge(e).unwrap()) < t);
                }
            }
        }
    }

    #[test]
    fn graph6_round_trip(g in graph(20)) {
        let text = emit_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }
}
