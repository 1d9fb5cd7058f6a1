//! Certificates for minimally t-tough and minimally k-connected graphs.
//!
//! For t = 1, deleting an edge `e` of a minimally 1-tough graph always
//! exposes a set S(e) with ω(G − S) = |S| and ω((G − e) − S) = |S| + 1:
//! the edge joins two components of (G − e) − S. The smallest such |S| is
//! k(e). For other values of t the report records the first violating
//! cutset of G − e instead.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{EdgeId, Graph, VertexSet};
use crate::rational::Rational;
use crate::toughness::{find_violating_cutset, first_subset, is_t_tough, toughness_value, Toughness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MinimalityError {
    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("precondition failed for edge {edge}: {reason}")]
    Precondition { edge: EdgeId, reason: String },
    /// No S(e) exists although G is 1-tough and G − e is not.
    #[error("FALSIFICATION: no witness set for edge {edge} of graph {graph6}")]
    ClaimViolation { graph6: String, edge: EdgeId },
}

/// Per-edge entry of a [`MinimalityReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeVerdict {
    #[serde(rename = "e")]
    pub edge: EdgeId,
    pub tau_minus_e: Toughness,
    #[serde(rename = "S")]
    pub witness: Option<VertexSet>,
    /// k(e); only filled for t = 1 on minimally 1-tough graphs.
    pub k: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalityReport {
    pub t: Rational,
    pub tau: Toughness,
    #[serde(rename = "minimal")]
    pub is_minimal: bool,
    /// Edges in lexicographic order; empty when τ(G) ≠ t.
    #[serde(rename = "edges")]
    pub per_edge: Vec<EdgeVerdict>,
}

/// Smallest-then-lexicographic S with ω(G − S) = |S| and ω((G − e) − S) = |S| + 1.
pub(crate) fn search_witness(g: &Graph, e: EdgeId) -> Option<VertexSet> {
    let n = g.order();
    let h = g.without_edge(e);
    let endpoints = VertexSet::from_iter([e.u(), e.v()]);
    // (G − e) − S has |S| + 1 components, so 2|S| + 1 ≤ n and |S| + 1 ≤ α(G − e).
    let alpha = h.independence_number().0;
    let max_size = ((n.saturating_sub(1)) / 2).min(alpha.saturating_sub(1));
    (1..=max_size).find_map(|size| {
        first_subset(n, size, |bits| {
            let s = VertexSet::from_bits(bits);
            s.intersection(endpoints).is_empty()
                && h.components_after_removing(s) == size + 1
                && g.components_after_removing(s) == size
        })
        .map(VertexSet::from_bits)
    })
}

/// S(e) for an edge of a 1-tough graph whose deletion breaks 1-toughness.
///
/// Only the hypotheses that matter for `e` are checked: τ(G) ≥ 1 and
/// τ(G − e) < 1. If they hold and no witness exists the claim is falsified.
pub fn witness_1tough(g: &Graph, e: EdgeId) -> Result<VertexSet, MinimalityError> {
    if !g.has_edge(e.u(), e.v()) {
        return Err(MinimalityError::NotAnEdge(e.u(), e.v()));
    }
    if !is_t_tough(g, Rational::ONE) {
        return Err(MinimalityError::Precondition {
            edge: e,
            reason: "the graph is not 1-tough".into(),
        });
    }
    if is_t_tough(&g.without_edge(e), Rational::ONE) {
        return Err(MinimalityError::Precondition {
            edge: e,
            reason: "deleting the edge keeps the graph 1-tough".into(),
        });
    }
    search_witness(g, e).ok_or_else(|| MinimalityError::ClaimViolation {
        graph6: g.reproducer(),
        edge: e,
    })
}

/// k(e) = |S(e)|.
pub fn k_of_edge(g: &Graph, e: EdgeId) -> Result<usize, MinimalityError> {
    witness_1tough(g, e).map(VertexSet::len)
}

/// Decides whether τ(G) = t and τ(G − e) < t for every edge.
///
/// All edges are examined even after a non-critical one is found, so the
/// report is complete. The only error is a falsification of the t = 1 witness
/// claim.
pub fn is_minimally_t_tough(g: &Graph, t: Rational) -> Result<MinimalityReport, MinimalityError> {
    let tau = toughness_value(g);
    if tau != t {
        return Ok(MinimalityReport {
            t,
            tau,
            is_minimal: false,
            per_edge: Vec::new(),
        });
    }
    let mut per_edge = Vec::with_capacity(g.edge_count());
    for e in g.edges() {
        let h = g.without_edge(e);
        let tau_minus_e = toughness_value(&h);
        let witness = if tau_minus_e < t {
            find_violating_cutset(&h, t)
        } else {
            None
        };
        per_edge.push(EdgeVerdict {
            edge: e,
            tau_minus_e,
            witness,
            k: None,
        });
    }
    let is_minimal = per_edge.iter().all(|v| v.tau_minus_e < t);
    if is_minimal && t == Rational::ONE {
        for verdict in &mut per_edge {
            let s = search_witness(g, verdict.edge).ok_or_else(|| MinimalityError::ClaimViolation {
                graph6: g.reproducer(),
                edge: verdict.edge,
            })?;
            verdict.witness = Some(s);
            verdict.k = Some(s.len());
        }
    }
    Ok(MinimalityReport {
        t,
        tau,
        is_minimal,
        per_edge,
    })
}

/// Cheaper yes/no variant of [`is_minimally_t_tough`] (no per-edge τ values).
pub fn check_minimally_t_tough(g: &Graph, t: Rational) -> bool {
    toughness_value(g) == t && g.edges().all(|e| !is_t_tough(&g.without_edge(e), t))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KConnectivityReport {
    pub k: usize,
    pub kappa: usize,
    pub minimal: bool,
    /// κ(G − e) for every edge, in lexicographic order.
    pub per_edge: Vec<(EdgeId, usize)>,
}

/// Whether κ(G) = k and κ(G − e) < k for every edge.
pub fn is_minimally_k_connected(g: &Graph, k: usize) -> KConnectivityReport {
    let kappa = g.vertex_connectivity();
    let per_edge: Vec<(EdgeId, usize)> = g
        .edges()
        .map(|e| (e, g.without_edge(e).vertex_connectivity()))
        .collect();
    let minimal = k >= 1 && kappa == k && per_edge.iter().all(|&(_, c)| c < k);
    KConnectivityReport {
        k,
        kappa,
        minimal,
        per_edge,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    /// All minimum-size S with the two component counts, by brute force.
    fn brute_force_witnesses(g: &Graph, e: EdgeId) -> Vec<VertexSet> {
        let h = g.without_edge(e);
        let n = g.order();
        let all: Vec<VertexSet> = (0u64..1 << n)
            .map(VertexSet::from_bits)
            .filter(|&s| g.components_after_removing(s) == s.len() && h.components_after_removing(s) == s.len() + 1)
            .collect();
        let min = all.iter().map(|s| s.len()).min().unwrap_or(0);
        let mut out: Vec<_> = all.into_iter().filter(|s| s.len() == min).collect();
        out.sort_by(|a, b| a.lex_cmp(*b));
        out
    }

    #[test]
    fn c4_witness() {
        let c4 = cycle(4);
        let e = EdgeId::new(&c4, 0, 1).unwrap();
        assert_eq!(brute_force_witnesses(&c4, e)[0], VertexSet::singleton(2));
        assert_eq!(witness_1tough(&c4, e), Ok(VertexSet::singleton(2)));
        for e in c4.edges() {
            assert_eq!(k_of_edge(&c4, e), Ok(1));
        }
    }

    #[test]
    fn c6_witnesses_have_size_one() {
        let c6 = cycle(6);
        for e in c6.edges() {
            let s = witness_1tough(&c6, e).unwrap();
            assert_eq!(s, brute_force_witnesses(&c6, e)[0]);
            assert_eq!(s.len(), 1);
        }
    }

    #[test]
    fn fixture_witnesses_match_brute_force() {
        let g = min1tough_not_min2conn();
        for e in g.edges() {
            let s = witness_1tough(&g, e).unwrap();
            let brute = brute_force_witnesses(&g, e);
            assert_eq!(s, brute[0], "edge {e}");
            assert_eq!(g.components_after_removing(s), s.len());
            assert_eq!(g.without_edge(e).components_after_removing(s), s.len() + 1);
        }
        // k(a1b1) fixed by the brute-force scan.
        let spoke = EdgeId::new(&g, 0, 5).unwrap();
        assert_eq!(brute_force_witnesses(&g, spoke)[0], VertexSet::from_iter([1, 4]));
        assert_eq!(k_of_edge(&g, spoke), Ok(2));
    }

    #[test]
    fn witness_preconditions() {
        let k4 = complete(4);
        assert!(matches!(
            witness_1tough(&k4, EdgeId::new(&k4, 0, 1).unwrap()),
            Err(MinimalityError::Precondition { .. })
        ));
        let s3 = star(3);
        assert!(matches!(
            witness_1tough(&s3, EdgeId::new(&s3, 0, 1).unwrap()),
            Err(MinimalityError::Precondition { .. })
        ));
        assert_eq!(
            witness_1tough(&cycle(4), EdgeId::unchecked(0, 2)),
            Err(MinimalityError::NotAnEdge(0, 2))
        );
    }

    #[test]
    fn minimally_one_tough_examples() {
        let report = is_minimally_t_tough(&cycle(5), Rational::ONE).unwrap();
        assert!(report.is_minimal);
        assert_eq!(report.per_edge.len(), 5);
        assert!(report.per_edge.iter().all(|v| v.k == Some(1)));

        let report = is_minimally_t_tough(&min1tough_not_min2conn(), Rational::ONE).unwrap();
        assert!(report.is_minimal);

        let report = is_minimally_t_tough(&complete(4), Rational::ONE).unwrap();
        assert!(!report.is_minimal);
        assert_eq!(report.tau, Toughness::Infinite);
        assert!(report.per_edge.is_empty());

        // C5 plus a chord: τ = 1 but the chord is not critical.
        let mut g = cycle(5);
        g.add_edge(0, 2).unwrap();
        let report = is_minimally_t_tough(&g, Rational::ONE).unwrap();
        assert_eq!(report.tau, Rational::ONE);
        assert!(!report.is_minimal);
        let chord = report.per_edge.iter().find(|v| v.edge.endpoints() == (0, 2)).unwrap();
        assert_eq!(chord.tau_minus_e, Rational::ONE);
        assert_eq!(chord.witness, None);
        assert!(!check_minimally_t_tough(&g, Rational::ONE));
        assert!(check_minimally_t_tough(&cycle(5), Rational::ONE));
    }

    #[test]
    fn general_t_uses_violating_cutsets() {
        // K_{1,3}: τ = 1/3, deleting any edge disconnects it.
        let report = is_minimally_t_tough(&star(3), Rational::new(1, 3).unwrap()).unwrap();
        assert!(report.is_minimal);
        for v in &report.per_edge {
            assert_eq!(v.tau_minus_e, Rational::ZERO);
            assert_eq!(v.witness, Some(VertexSet::EMPTY));
            assert_eq!(v.k, None);
        }
    }

    #[test]
    fn report_json_shape() {
        let report = is_minimally_t_tough(&cycle(4), Rational::ONE).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["t"], "1/1");
        assert_eq!(json["minimal"], true);
        assert_eq!(json["edges"][0]["e"], serde_json::json!([0, 1]));
        assert_eq!(json["edges"][0]["S"], serde_json::json!([2]));
        assert_eq!(json["edges"][0]["k"], 1);
        assert_eq!(json["edges"][0]["tau_minus_e"], "1/2");
    }

    #[test]
    fn minimally_k_connected_examples() {
        assert!(is_minimally_k_connected(&cycle(5), 2).minimal);
        let f = min1tough_not_min2conn();
        let report = is_minimally_k_connected(&f, 2);
        assert!(!report.minimal);
        let spoke = report.per_edge.iter().find(|(e, _)| e.endpoints() == (0, 5)).unwrap();
        assert_eq!(spoke.1, 2);
        let k4 = is_minimally_k_connected(&complete(4), 3);
        assert!(k4.minimal);
        assert!(k4.per_edge.iter().all(|&(_, c)| c == 2));
        assert!(!is_minimally_k_connected(&cycle(5), 3).minimal);
    }
}
