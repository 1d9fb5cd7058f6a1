//! Vertex connectivity via unit-capacity max-flow on the split graph
//! (each vertex `v` becomes `v_in -> v_out` with capacity 1).

use std::collections::VecDeque;

use super::{Graph, VertexSet};

const INF: i32 = i32::MAX / 4;

struct SplitNetwork {
    size: usize,
    cap: Vec<i32>,
}

impl SplitNetwork {
    fn new(g: &Graph, s: usize, t: usize) -> Self {
        let size = 2 * g.order();
        let mut cap = vec![0; size * size];
        for v in 0..g.order() {
            let c = if v == s || v == t { INF } else { 1 };
            cap[2 * v * size + 2 * v + 1] = c;
            for u in g.neighbors(v).iter() {
                cap[(2 * v + 1) * size + 2 * u] = INF;
            }
        }
        SplitNetwork { size, cap }
    }

    /// Augments until `limit` units flow or no path remains.
    fn max_flow(&mut self, from: usize, to: usize, limit: usize) -> usize {
        let mut flow = 0;
        let mut parent = vec![usize::MAX; self.size];
        while flow < limit {
            parent.fill(usize::MAX);
            parent[from] = from;
            let mut queue = VecDeque::from([from]);
            while let Some(x) = queue.pop_front() {
                if x == to {
                    break;
                }
                let row = &self.cap[x * self.size..(x + 1) * self.size];
                for (y, &c) in row.iter().enumerate() {
                    if parent[y] == usize::MAX && c > 0 {
                        parent[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            if parent[to] == usize::MAX {
                break;
            }
            let mut y = to;
            while y != from {
                let x = parent[y];
                self.cap[x * self.size + y] -= 1;
                self.cap[y * self.size + x] += 1;
                y = x;
            }
            flow += 1;
        }
        flow
    }

    fn reachable(&self, from: usize) -> Vec<bool> {
        let mut seen = vec![false; self.size];
        seen[from] = true;
        let mut stack = vec![from];
        while let Some(x) = stack.pop() {
            let row = &self.cap[x * self.size..(x + 1) * self.size];
            for (y, &c) in row.iter().enumerate() {
                if !seen[y] && c > 0 {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }
}

impl Graph {
    /// Minimum number of vertices separating non-adjacent `s` and `t`,
    /// together with one such separator.
    pub fn local_vertex_cut(&self, s: usize, t: usize) -> (usize, VertexSet) {
        assert!(
            s != t && !self.has_edge(s, t),
            "s and t must be distinct and non-adjacent"
        );
        self.local_cut_bounded(s, t, usize::MAX)
            .expect("unbounded search always yields a cut")
    }

    /// Like `local_vertex_cut`, but gives up (returns `None`) once `limit`
    /// disjoint paths are found.
    fn local_cut_bounded(&self, s: usize, t: usize, limit: usize) -> Option<(usize, VertexSet)> {
        let mut net = SplitNetwork::new(self, s, t);
        let flow = net.max_flow(2 * s + 1, 2 * t, limit);
        if flow >= limit {
            return None;
        }
        let seen = net.reachable(2 * s + 1);
        let cut: VertexSet = (0..self.n).filter(|&v| seen[2 * v] && !seen[2 * v + 1]).collect();
        debug_assert_eq!(cut.len(), flow);
        Some((flow, cut))
    }

    /// A minimum vertex cut, or `None` for complete graphs (which have none).
    /// Disconnected graphs return the empty cut.
    pub fn min_vertex_cut(&self) -> Option<VertexSet> {
        if self.is_complete() {
            return None;
        }
        if !self.is_connected() {
            return Some(VertexSet::EMPTY);
        }
        let mut best: Option<(usize, VertexSet)> = None;
        for s in 0..self.n {
            for t in s + 1..self.n {
                if self.has_edge(s, t) {
                    continue;
                }
                let limit = best.map_or(usize::MAX, |(k, _)| k);
                if let Some(found) = self.local_cut_bounded(s, t, limit) {
                    best = Some(found);
                }
            }
        }
        best.map(|(_, cut)| cut)
    }

    /// κ(G): `n - 1` for complete graphs, 0 for disconnected ones, otherwise
    /// the size of a minimum vertex cut.
    pub fn vertex_connectivity(&self) -> usize {
        match self.min_vertex_cut() {
            None => self.n.saturating_sub(1),
            Some(cut) => cut.len(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use proptest::prelude::*;

    fn brute_force_kappa(g: &Graph) -> usize {
        if g.is_complete() {
            return g.order().saturating_sub(1);
        }
        (0u64..1 << g.order())
            .map(VertexSet::from_bits)
            .filter(|&s| g.components_after_removing(s) >= 2)
            .map(|s| s.len())
            .min()
            .unwrap()
    }

    #[test]
    fn kappa_examples() {
        for n in 3..9 {
            assert_eq!(cycle(n).vertex_connectivity(), 2);
        }
        assert_eq!(complete(5).vertex_connectivity(), 4);
        assert_eq!(complete(1).vertex_connectivity(), 0);
        assert_eq!(petersen().vertex_connectivity(), 3);
        assert_eq!(brute_force_kappa(&petersen()), 3);
        assert_eq!(Graph::empty(3).unwrap().vertex_connectivity(), 0);
        assert_eq!(path(4).vertex_connectivity(), 1);
    }

    #[test]
    fn local_cut_separates() {
        let g = petersen();
        let (k, cut) = g.local_vertex_cut(0, 2);
        assert_eq!(k, 3);
        assert_eq!(cut.len(), 3);
        assert!(g.components_after_removing(cut) >= 2);
    }

    proptest! {
        #[test]
        fn kappa_matches_brute_force(n in 1usize..=10, p in 0.2f64..0.95, seed in any::<u64>()) {
            let g = crate::testutil::random_graph(n, p, seed);
            let kappa = g.vertex_connectivity();
            prop_assert_eq!(kappa, brute_force_kappa(&g));
            if !g.is_complete() {
                prop_assert!(kappa <= g.min_degree().unwrap());
                let cut = g.min_vertex_cut().unwrap();
                prop_assert!(g.components_after_removing(cut) >= 2);
            }
        }
    }
}
