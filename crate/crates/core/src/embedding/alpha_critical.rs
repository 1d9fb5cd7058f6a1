//! α-critical supergraphs and clique blow-ups.
//!
//! `alpha_criticalize` searches for the smallest supergraph that keeps the
//! input induced: for k = 1, 2, .. added vertices it enumerates the
//! neighbourhoods of the new vertices (old neighbours as a non-decreasing
//! sequence of masks, which removes the k! relabellings of the new part,
//! plus every edge set among the new vertices) and returns the first
//! α-critical candidate.

use super::EmbeddingError;
use crate::graph::{Graph, MAX_VERTICES};

/// Limits for [`alpha_criticalize`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlphaCriticalBudget {
    /// Largest number of vertices that may be added.
    pub max_added: usize,
    /// Largest number of candidate supergraphs that may be tested.
    pub max_candidates: u64,
}

impl Default for AlphaCriticalBudget {
    fn default() -> Self {
        AlphaCriticalBudget {
            max_added: 4,
            max_candidates: 20_000_000,
        }
    }
}

/// Next non-decreasing sequence of masks below `limit`, in lexicographic order.
fn next_multiset(masks: &mut [u64], limit: u64) -> bool {
    for i in (0..masks.len()).rev() {
        if masks[i] + 1 < limit {
            let v = masks[i] + 1;
            for m in &mut masks[i..] {
                *m = v;
            }
            return true;
        }
    }
    false
}

fn assemble(g: &Graph, masks: &[u64], new_edges: u64) -> Graph {
    let n = g.order();
    let k = masks.len();
    let mut h = Graph::empty(n + k).expect("checked against MAX_VERTICES");
    for e in g.edges() {
        h.add_edge(e.u(), e.v()).unwrap();
    }
    for (i, &m) in masks.iter().enumerate() {
        for old in 0..n {
            if m >> old & 1 == 1 {
                h.add_edge(n + i, old).unwrap();
            }
        }
    }
    let mut bit = 0;
    for i in 0..k {
        for j in i + 1..k {
            if new_edges >> bit & 1 == 1 {
                h.add_edge(n + i, n + j).unwrap();
            }
            bit += 1;
        }
    }
    h
}

/// An α-critical graph containing `g` as an induced subgraph on its first
/// `g.order()` vertices. The returned map sends each vertex of `g` to its
/// image (the identity on `0..n`).
pub fn alpha_criticalize(g: &Graph, budget: AlphaCriticalBudget) -> Result<(Graph, Vec<usize>), EmbeddingError> {
    let n = g.order();
    if n == 0 {
        return Err(EmbeddingError::Precondition("the input graph is empty".into()));
    }
    let identity: Vec<usize> = (0..n).collect();
    if g.is_alpha_critical() {
        return Ok((g.clone(), identity));
    }
    let mut tested = 0u64;
    for k in 1..=budget.max_added {
        if n + k > MAX_VERTICES {
            break;
        }
        let limit = 1u64 << n;
        let pair_bits = k * (k - 1) / 2;
        let mut masks = vec![0u64; k];
        loop {
            for new_edges in 0..1u64 << pair_bits {
                let isolated = (0..k).any(|i| {
                    masks[i] == 0 && {
                        let mut bit = 0;
                        let mut touched = false;
                        for a in 0..k {
                            for b in a + 1..k {
                                if (a == i || b == i) && new_edges >> bit & 1 == 1 {
                                    touched = true;
                                }
                                bit += 1;
                            }
                        }
                        !touched
                    }
                });
                if isolated {
                    continue;
                }
                tested += 1;
                if tested > budget.max_candidates {
                    return Err(EmbeddingError::AlphaCriticalBudget {
                        max_added: budget.max_added,
                        tested: tested - 1,
                    });
                }
                let h = assemble(g, &masks, new_edges);
                if h.is_alpha_critical() {
                    return Ok((h, identity));
                }
            }
            if !next_multiset(&mut masks, limit) {
                break;
            }
        }
    }
    Err(EmbeddingError::AlphaCriticalBudget {
        max_added: budget.max_added,
        tested,
    })
}

/// Replaces `v` by a clique of size `c` joined to N(v). Vertex `v` keeps its
/// index as the first clique vertex; the other `c - 1` are appended.
pub fn blow_up(g: &Graph, v: usize, c: usize) -> Result<Graph, EmbeddingError> {
    if v >= g.order() {
        return Err(EmbeddingError::Precondition(format!(
            "vertex {v} out of range for a graph on {} vertices",
            g.order()
        )));
    }
    if c == 0 {
        return Err(EmbeddingError::Precondition("clique size must be at least 1".into()));
    }
    let n = g.order();
    let required = n + c - 1;
    if required > MAX_VERTICES {
        return Err(EmbeddingError::Budget {
            what: "blown-up graph",
            required,
            limit: MAX_VERTICES,
        });
    }
    let mut h = Graph::empty(required).unwrap();
    for e in g.edges() {
        h.add_edge(e.u(), e.v()).unwrap();
    }
    let clique: Vec<usize> = std::iter::once(v).chain(n..required).collect();
    for (i, &x) in clique.iter().enumerate() {
        for &y in &clique[i + 1..] {
            h.add_edge(x, y).unwrap();
        }
        if x != v {
            for u in g.neighbors(v).iter() {
                h.add_edge(x, u).unwrap();
            }
        }
    }
    Ok(h)
}
