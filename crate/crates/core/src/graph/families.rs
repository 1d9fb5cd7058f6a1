//! Named graphs used as fixtures and building blocks.

use super::Graph;

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n).expect("order within limit");
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// The cycle `0-1-..-(n-1)-0`; `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

/// The path `0-1-..-(n-1)`.
pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

/// `K_{1,k}` with center 0.
pub fn star(k: usize) -> Graph {
    Graph::from_edges(k + 1, (1..=k).map(|i| (0, i))).unwrap()
}

/// Petersen graph: outer cycle `0..5`, inner pentagram `5..10`, spokes `i-(i+5)`.
pub fn petersen() -> Graph {
    let mut g = Graph::empty(10).unwrap();
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5).unwrap();
        g.add_edge(5 + i, 5 + (i + 2) % 5).unwrap();
        g.add_edge(i, i + 5).unwrap();
    }
    g
}

/// A minimally 1-tough graph that is not minimally 2-connected.
///
/// Outer 5-cycle `a1..a5` = `0..5`, inner pentagram `b1..b5` = `5..10`, and
/// only three spokes: `a1b1`, `a2b2`, `a5b5`. Deleting `a1b1`
/// ([`MIN1TOUGH_NOT_MIN2CONN_EDGE`]) keeps the graph 2-connected.
pub fn min1tough_not_min2conn() -> Graph {
    let mut g = Graph::empty(10).unwrap();
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5).unwrap();
        g.add_edge(5 + i, 5 + (i + 2) % 5).unwrap();
    }
    for i in [0, 1, 4] {
        g.add_edge(i, i + 5).unwrap();
    }
    g
}

/// The spoke `a1b1` of [`min1tough_not_min2conn`].
pub const MIN1TOUGH_NOT_MIN2CONN_EDGE: (usize, usize) = (0, 5);

/// Disjoint union; vertices of `b` are shifted by `a.order()`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let n = a.order();
    let mut g = Graph::empty(n + b.order()).expect("union too large");
    for e in a.edges() {
        g.add_edge(e.u(), e.v()).unwrap();
    }
    for e in b.edges() {
        g.add_edge(n + e.u(), n + e.v()).unwrap();
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        assert_eq!(complete(5).edge_count(), 10);
        assert_eq!(cycle(6).edge_count(), 6);
        assert_eq!(path(4).edge_count(), 3);
        assert_eq!(star(3).degree(0), 3);
        let p = petersen();
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
        let f = min1tough_not_min2conn();
        assert_eq!(f.edge_count(), 13);
        assert!(f.has_edge(0, 5) && f.has_edge(1, 6) && f.has_edge(4, 9));
        assert!(!f.has_edge(2, 7) && !f.has_edge(3, 8));
    }
}
