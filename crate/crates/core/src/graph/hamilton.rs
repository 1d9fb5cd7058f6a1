use super::{Graph, VertexSet};
use crate::error::GraphError;

/// A Hamiltonian cycle as a vertex sequence starting at 0; the closing edge
/// back to 0 is implied.
pub type HamiltonCycle = Vec<usize>;

struct Backtrack<'g> {
    g: &'g Graph,
    path: Vec<usize>,
}

impl Backtrack<'_> {
    fn extend(&mut self, visited: u64) -> bool {
        let g = self.g;
        let end = *self.path.last().unwrap();
        let all = g.vertices().bits();
        if visited == all {
            return g.has_edge(end, 0);
        }
        // Every unvisited vertex still needs two usable neighbours.
        let open = (all & !visited) | 1 | 1 << end;
        let mut rest = all & !visited;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (g.row(u) & open).count_ones() < 2 {
                return false;
            }
        }
        let mut next = g.row(end) & !visited;
        while next != 0 {
            let v = next.trailing_zeros() as usize;
            next &= next - 1;
            self.path.push(v);
            if self.extend(visited | 1 << v) {
                return true;
            }
            self.path.pop();
        }
        false
    }
}

impl Graph {
    /// Searches for a Hamiltonian cycle by backtracking from vertex 0.
    pub fn hamiltonian_cycle(&self) -> Result<Option<HamiltonCycle>, GraphError> {
        if self.n < 3 {
            return Err(GraphError::TooSmallForCycle(self.n));
        }
        if self.min_degree().unwrap_or(0) < 2 || !self.is_connected() {
            return Ok(None);
        }
        let mut bt = Backtrack { g: self, path: vec![0] };
        Ok(bt.extend(1).then_some(bt.path))
    }

    pub fn is_hamiltonian(&self) -> Result<bool, GraphError> {
        Ok(self.hamiltonian_cycle()?.is_some())
    }

    /// Checks that `cycle` visits every vertex once along edges and closes up.
    pub fn is_hamiltonian_cycle(&self, cycle: &[usize]) -> bool {
        let seen: VertexSet = cycle.iter().copied().collect();
        cycle.len() == self.n
            && self.n >= 3
            && seen == self.vertices()
            && (0..cycle.len()).all(|i| self.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use proptest::prelude::*;

    #[test]
    fn hamiltonian_examples() {
        for n in 3..10 {
            let c = cycle(n).hamiltonian_cycle().unwrap().unwrap();
            assert!(cycle(n).is_hamiltonian_cycle(&c));
        }
        assert!(!petersen().is_hamiltonian().unwrap());
        assert!(complete(4).is_hamiltonian().unwrap());
        assert!(!star(3).is_hamiltonian().unwrap());
        assert_eq!(complete(2).is_hamiltonian(), Err(GraphError::TooSmallForCycle(2)));
    }

    fn brute_force_hamiltonian(g: &Graph) -> bool {
        fn permute(g: &Graph, rest: &mut Vec<usize>, path: &mut Vec<usize>) -> bool {
            if rest.is_empty() {
                return g.is_hamiltonian_cycle(path);
            }
            for i in 0..rest.len() {
                let v = rest.remove(i);
                path.push(v);
                if permute(g, rest, path) {
                    return true;
                }
                path.pop();
                rest.insert(i, v);
            }
            false
        }
        permute(g, &mut (1..g.order()).collect(), &mut vec![0])
    }

    proptest! {
        #[test]
        fn agrees_with_permutation_scan(n in 3usize..=8, p in 0.3f64..0.9, seed in any::<u64>()) {
            let g = crate::testutil::random_graph(n, p, seed);
            let found = g.hamiltonian_cycle().unwrap();
            prop_assert_eq!(found.is_some(), brute_force_hamiltonian(&g));
            if let Some(c) = found {
                prop_assert!(g.is_hamiltonian_cycle(&c));
            }
        }
    }
}
