//! One representative per isomorphism class for n ≤ 7.
//!
//! The canonical code of a graph is the smallest upper-triangle bit string
//! (graph6 column order: (0,1), (0,2), (1,2), (0,3), ..) over all vertex
//! orderings, read as an integer with the first pair as the top bit. Order n
//! is obtained by attaching a new vertex to each order n − 1 representative
//! in every possible way and keeping the distinct codes.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::Graph;

/// Largest order [`enumerate_graphs`] accepts.
pub const MAX_ENUMERATION_ORDER: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("enumeration supports 1 ≤ n ≤ {MAX_ENUMERATION_ORDER}, got {0}; read larger orders from a graph6 file")]
    Unsupported(usize),
}

struct Canon<'a> {
    g: &'a Graph,
    n: usize,
    bits: usize,
    best: u64,
    placed: Vec<usize>,
    used: u64,
}

impl Canon<'_> {
    /// `code` holds the bits of the first `placed.len()` columns, left-aligned
    /// at bit position `bits - 1` downwards.
    fn dfs(&mut self, code: u64, filled: usize) {
        let j = self.placed.len();
        if j == self.n {
            self.best = self.best.min(code);
            return;
        }
        for v in 0..self.n {
            if self.used >> v & 1 == 1 {
                continue;
            }
            let mut next = code;
            for (i, &u) in self.placed.iter().enumerate() {
                if self.g.has_edge(u, v) {
                    next |= 1 << (self.bits - 1 - (filled + i));
                }
            }
            let now = filled + j;
            // Bits below `now` are still free; compare the fixed prefix only.
            let shift = self.bits - now;
            if shift < 64 && next >> shift > self.best >> shift {
                continue;
            }
            self.placed.push(v);
            self.used |= 1 << v;
            self.dfs(next, now);
            self.used &= !(1 << v);
            self.placed.pop();
        }
    }
}

/// Canonical code of a graph on at most 11 vertices.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.order();
    let bits = n * n.saturating_sub(1) / 2;
    assert!(bits <= 63, "canonical codes are limited to 11 vertices");
    if n <= 1 {
        return 0;
    }
    let mut canon = Canon {
        g,
        n,
        bits,
        best: u64::MAX,
        placed: Vec::with_capacity(n),
        used: 0,
    };
    canon.dfs(0, 0);
    canon.best
}

/// The graph whose upper-triangle bit string is `code`.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let bits = n * n.saturating_sub(1) / 2;
    let mut g = Graph::empty(n).unwrap();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (bits - 1 - k) & 1 == 1 {
                g.add_edge(i, j).unwrap();
            }
            k += 1;
        }
    }
    g
}

fn codes_by_order(max_n: usize) -> Vec<Vec<u64>> {
    let mut levels: Vec<Vec<u64>> = vec![Vec::new(), vec![0]];
    for n in 2..=max_n {
        let mut next = BTreeSet::new();
        for &code in &levels[n - 1] {
            let base = graph_from_code(n - 1, code);
            for mask in 0u64..1 << (n - 1) {
                let mut g = Graph::empty(n).unwrap();
                for e in base.edges() {
                    g.add_edge(e.u(), e.v()).unwrap();
                }
                for u in 0..n - 1 {
                    if mask >> u & 1 == 1 {
                        g.add_edge(u, n - 1).unwrap();
                    }
                }
                next.insert(canonical_code(&g));
            }
        }
        levels.push(next.into_iter().collect());
    }
    levels
}

/// All graphs on `n` vertices up to isomorphism, in ascending canonical order.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>, EnumerationError> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(EnumerationError::Unsupported(n));
    }
    Ok(codes_by_order(n)[n].iter().map(|&c| graph_from_code(n, c)).collect())
}

/// All graphs on 1..=`max_n` vertices, grouped by increasing order.
pub fn census(max_n: usize) -> Result<Vec<Graph>, EnumerationError> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&max_n) {
        return Err(EnumerationError::Unsupported(max_n));
    }
    let levels = codes_by_order(max_n);
    Ok((1..=max_n)
        .flat_map(|n| levels[n].iter().map(move |&c| graph_from_code(n, c)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    /// Dedup of all labelled graphs by brute-force minimisation over permutations.
    fn brute_force_classes(n: usize) -> usize {
        let bits = n * (n - 1) / 2;
        let perms = permutations(n);
        let mut seen = BTreeSet::new();
        for code in 0u64..1 << bits {
            let g = graph_from_code(n, code);
            let min = perms
                .iter()
                .map(|p| {
                    let h = g.relabel(p);
                    let mut c = 0u64;
                    for j in 1..n {
                        for i in 0..j {
                            c = c << 1 | h.has_edge(i, j) as u64;
                        }
                    }
                    c
                })
                .min()
                .unwrap();
            seen.insert(min);
        }
        seen.len()
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn class_counts_match_brute_force() {
        for n in 1..=5 {
            assert_eq!(enumerate_graphs(n).unwrap().len(), brute_force_classes(n), "n = {n}");
        }
    }

    #[test]
    fn class_counts_up_to_seven() {
        let counts: Vec<usize> = (1..=7).map(|n| enumerate_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156, 1044]);
    }

    #[test]
    fn larger_orders_are_rejected() {
        assert_eq!(enumerate_graphs(8), Err(EnumerationError::Unsupported(8)));
        assert_eq!(enumerate_graphs(0), Err(EnumerationError::Unsupported(0)));
    }

    #[test]
    fn code_is_invariant_under_relabelling() {
        let g = petersen().induced(&[0, 1, 2, 3, 5, 6, 7, 8]);
        let code = canonical_code(&g);
        let perm = [3, 1, 7, 0, 5, 2, 6, 4];
        assert_eq!(canonical_code(&g.relabel(&perm)), code);
    }

    #[test]
    fn output_is_ascending() {
        let graphs = enumerate_graphs(5).unwrap();
        let codes: Vec<u64> = graphs.iter().map(canonical_code).collect();
        assert!(codes.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(census(4).unwrap().len(), 1 + 2 + 4 + 11);
    }
}
