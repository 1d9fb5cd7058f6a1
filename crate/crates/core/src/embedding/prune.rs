//! Greedy edge deletion down to a minimally t-tough graph.

use std::collections::BTreeSet;

use super::EmbeddingError;
use crate::graph::{EdgeId, Graph};
use crate::rational::Rational;
use crate::toughness::{is_t_tough, toughness_value};

fn bug(h: &Graph, reason: String) -> EmbeddingError {
    EmbeddingError::ConstructionBug {
        reproducer: h.reproducer(),
        reason,
    }
}

/// Deletes edges of `h` in lexicographic order while τ stays at `t`,
/// restarting the scan from the first edge after every deletion. Returns the
/// pruned graph and the deleted edges in order.
///
/// Edges found critical are remembered: deleting further edges never raises
/// τ, so a critical edge stays critical and rescanning it is wasted work.
pub fn prune_to_minimal(
    h: &Graph,
    t: Rational,
    protected: &BTreeSet<EdgeId>,
) -> Result<(Graph, Vec<EdgeId>), EmbeddingError> {
    let tau = toughness_value(h);
    if tau != t {
        return Err(bug(h, format!("τ = {tau} but the target is {t}")));
    }
    for &e in protected {
        if !h.has_edge(e.u(), e.v()) {
            return Err(bug(h, format!("protected pair {e} is not an edge")));
        }
        if is_t_tough(&h.without_edge(e), t) {
            return Err(bug(h, format!("deleting protected edge {e} keeps τ ≥ {t}")));
        }
    }
    let mut current = h.clone();
    let mut critical: BTreeSet<EdgeId> = protected.clone();
    let mut pruned = Vec::new();
    'restart: loop {
        let edges: Vec<EdgeId> = current.edges().collect();
        for e in edges {
            if critical.contains(&e) {
                continue;
            }
            let candidate = current.without_edge(e);
            let after = toughness_value(&candidate);
            if after < t {
                critical.insert(e);
                continue;
            }
            if after > t {
                return Err(bug(&current, format!("deleting {e} raised τ to {after}")));
            }
            pruned.push(e);
            current = candidate;
            continue 'restart;
        }
        break;
    }
    Ok((current, pruned))
}
