//! Maximum independent sets by branch and bound.
//!
//! Branching is on a vertex of maximum degree (exclude it, or take it and
//! drop its closed neighbourhood). Vertices of degree at most one are taken
//! greedily, and a greedy clique cover bounds what the remaining candidates
//! can still contribute.

use serde::Serialize;

use super::{EdgeId, Graph, VertexSet};

/// Outcome of [`Graph::alpha_criticality`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaCriticality {
    pub critical: bool,
    /// Edges whose deletion leaves α unchanged, in lexicographic order.
    pub non_critical_edges: Vec<EdgeId>,
}

struct Search<'g> {
    g: &'g Graph,
    best: u64,
    best_len: usize,
}

impl Search<'_> {
    fn clique_cover_bound(&self, mut cand: u64) -> usize {
        let mut cliques = 0;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= !(1 << v);
            let mut common = cand & self.g.row(v);
            while common != 0 {
                let u = common.trailing_zeros() as usize;
                cand &= !(1 << u);
                common &= self.g.row(u) & !(1 << u);
            }
            cliques += 1;
        }
        cliques
    }

    fn run(&mut self, mut chosen: u64, mut cand: u64) {
        // Vertices with at most one candidate neighbour belong to some maximum set.
        loop {
            let mut changed = false;
            let mut scan = cand;
            while scan != 0 {
                let v = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                if cand >> v & 1 == 0 {
                    continue;
                }
                let nb = self.g.row(v) & cand;
                if nb.count_ones() <= 1 {
                    chosen |= 1 << v;
                    cand &= !(nb | 1 << v);
                    scan &= cand;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }

        let have = chosen.count_ones() as usize;
        if cand == 0 {
            if have > self.best_len {
                self.best = chosen;
                self.best_len = have;
            }
            return;
        }
        if have + (cand.count_ones() as usize) <= self.best_len || have + self.clique_cover_bound(cand) <= self.best_len
        {
            return;
        }

        let mut pivot = 0;
        let mut pivot_deg = 0;
        let mut scan = cand;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let d = (self.g.row(v) & cand).count_ones();
            if d > pivot_deg {
                pivot = v;
                pivot_deg = d;
            }
        }
        self.run(chosen | 1 << pivot, cand & !(self.g.row(pivot) | 1 << pivot));
        self.run(chosen, cand & !(1 << pivot));
    }
}

impl Graph {
    /// α of the subgraph induced by `within`, with a maximum independent set.
    pub fn independence_number_within(&self, within: VertexSet) -> (usize, VertexSet) {
        let mut search = Search {
            g: self,
            best: 0,
            best_len: 0,
        };
        search.run(0, within.bits());
        (search.best_len, VertexSet::from_bits(search.best))
    }

    /// α(G) together with a maximum independent set.
    pub fn independence_number(&self) -> (usize, VertexSet) {
        self.independence_number_within(self.vertices())
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.row(v) & s.bits() == 0)
    }

    /// Whether deleting `e` raises α.
    ///
    /// A larger independent set in `G - uv` must use both `u` and `v`, so the
    /// edge is critical iff `V - (N[u] ∪ N[v])` still holds α - 1 independent
    /// vertices.
    pub fn is_alpha_critical_edge(&self, e: EdgeId, alpha: usize) -> bool {
        let (u, v) = e.endpoints();
        let blocked = self.row(u) | self.row(v) | 1 << u | 1 << v;
        let rest = self.vertices().difference(VertexSet::from_bits(blocked));
        self.independence_number_within(rest).0 + 1 >= alpha
    }

    /// α-criticality: every edge deletion increases α. Edgeless graphs qualify.
    pub fn alpha_criticality(&self) -> AlphaCriticality {
        let alpha = self.independence_number().0;
        let non_critical_edges: Vec<EdgeId> = self
            .edges()
            .filter(|&e| !self.is_alpha_critical_edge(e, alpha))
            .collect();
        AlphaCriticality {
            critical: non_critical_edges.is_empty(),
            non_critical_edges,
        }
    }

    pub fn is_alpha_critical(&self) -> bool {
        let alpha = self.independence_number().0;
        self.edges().all(|e| self.is_alpha_critical_edge(e, alpha))
    }
}
