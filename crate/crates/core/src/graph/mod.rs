//! Simple undirected graphs on at most 64 vertices.
//!
//! Every vertex subset fits in a single `u64`, so adjacency is stored as one
//! bit row per vertex and all the set algebra in the searches is word-level.

mod claw;
mod connectivity;
mod edgelist;
pub mod families;
mod graph6;
mod hamilton;
mod independence;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::GraphError;

pub use claw::Claw;
pub use edgelist::{emit_edge_list, parse_edge_list};
pub use graph6::{emit_graph6, parse_graph6, MAX_GRAPH6_ORDER};
pub use hamilton::HamiltonCycle;
pub use independence::AlphaCriticality;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices of some graph, stored as a bit mask (bit `v` = vertex `v`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, .., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic comparison of the sorted member lists.
    pub fn lex_cmp(self, other: Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Iterator over the members of a [`VertexSet`] in increasing order.
#[derive(Clone)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Members {}

#[inline]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// An edge `{u, v}` with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId {
    u: usize,
    v: usize,
}

impl EdgeId {
    /// Checks that `{a, b}` is an edge of `g` and normalises the endpoint order.
    pub fn new(g: &Graph, a: usize, b: usize) -> Result<Self, GraphError> {
        g.check_vertex(a)?;
        g.check_vertex(b)?;
        if !g.has_edge(a, b) {
            return Err(GraphError::NotAnEdge(a.min(b), a.max(b)));
        }
        Ok(EdgeId::unchecked(a, b))
    }

    pub(crate) fn unchecked(a: usize, b: usize) -> Self {
        EdgeId {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn u(self) -> usize {
        self.u
    }

    pub fn v(self) -> usize {
        self.v
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.u, self.v)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl Serialize for EdgeId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [self.u, self.v].serialize(serializer)
    }
}

/// A finite simple undirected graph on the vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, rows: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
        Ok(())
    }

    pub(crate) fn remove_edge_unchecked(&mut self, u: usize, v: usize) {
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges in lexicographic order of `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.rows[u] & !low_mask(u + 1))
                .iter()
                .map(move |v| EdgeId { u, v })
        })
    }

    /// True when every pair of distinct vertices is adjacent (including `n <= 1`).
    pub fn is_complete(&self) -> bool {
        let all = low_mask(self.n);
        (0..self.n).all(|v| self.rows[v] | 1 << v == all)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components_count(self.vertices()) == 1
    }

    /// Connected components in increasing order of their minimum vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Components of the subgraph induced by `alive`.
    pub fn components_within(&self, alive: VertexSet) -> Vec<VertexSet> {
        let mut rest = alive.0;
        let mut out = Vec::new();
        while rest != 0 {
            let comp = self.reach(rest & rest.wrapping_neg(), rest);
            out.push(VertexSet(comp));
            rest &= !comp;
        }
        out
    }

    /// Number of components of the subgraph induced by `alive`.
    #[inline]
    pub fn components_count(&self, alive: VertexSet) -> usize {
        let mut rest = alive.0;
        let mut count = 0;
        while rest != 0 {
            let comp = self.reach(rest & rest.wrapping_neg(), rest);
            rest &= !comp;
            count += 1;
        }
        count
    }

    /// Vertices reachable from `start` inside `alive`.
    #[inline]
    pub(crate) fn reach(&self, start: u64, alive: u64) -> u64 {
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.rows[v];
            }
            next &= alive & !comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    /// ω(G − S): the number of components left after deleting `s`.
    #[inline]
    pub fn components_after_removing(&self, s: VertexSet) -> usize {
        self.components_count(self.vertices().difference(s))
    }

    /// The subgraph induced on the complement of `s`, with the surviving
    /// vertices renumbered densely in their original order.
    ///
    /// The returned map sends each old index to its new index, or `None` for
    /// deleted vertices.
    pub fn delete_vertices(&self, s: VertexSet) -> (Graph, Vec<Option<usize>>) {
        let keep: Vec<usize> = self.vertices().difference(s).to_vec();
        let mut map = vec![None; self.n];
        for (new, &old) in keep.iter().enumerate() {
            map[old] = Some(new);
        }
        (self.induced(&keep), map)
    }

    /// The subgraph induced by `vertices`, where vertex `i` of the result is
    /// `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut rows = vec![0u64; vertices.len()];
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate() {
                if self.has_edge(a, b) {
                    rows[i] |= 1 << j;
                }
            }
        }
        Graph {
            n: vertices.len(),
            rows,
        }
    }

    pub fn delete_edge(&self, e: EdgeId) -> Result<Graph, GraphError> {
        if !self.has_edge(e.u, e.v) {
            return Err(GraphError::NotAnEdge(e.u, e.v));
        }
        let mut g = self.clone();
        g.remove_edge_unchecked(e.u, e.v);
        Ok(g)
    }

    /// Copy of `self` with `e` removed; `e` must be an edge.
    pub(crate) fn without_edge(&self, e: EdgeId) -> Graph {
        let mut g = self.clone();
        g.remove_edge_unchecked(e.u, e.v);
        g
    }

    /// Whether the graph is a single cycle through all of its (at least 3) vertices.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && (0..self.n).all(|v| self.degree(v) == 2) && self.is_connected()
    }

    /// True when `map` is injective and `host[map(V)]` reproduces `self`
    /// exactly (an induced embedding).
    pub fn is_induced_in(&self, host: &Graph, map: &[usize]) -> bool {
        if map.len() != self.n || map.iter().any(|&x| x >= host.n) {
            return false;
        }
        let image: VertexSet = map.iter().copied().collect();
        if image.len() != self.n {
            return false;
        }
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.has_edge(i, j) == host.has_edge(map[i], map[j])))
    }

    /// Applies a vertex relabelling: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut g = Graph {
            n: self.n,
            rows: vec![0; self.n],
        };
        for e in self.edges() {
            g.rows[perm[e.u]] |= 1 << perm[e.v];
            g.rows[perm[e.v]] |= 1 << perm[e.u];
        }
        g
    }

    /// Graph6 text for logging; falls back to the edge list when n > 62.
    pub fn reproducer(&self) -> String {
        emit_graph6(self).unwrap_or_else(|_| emit_edge_list(self).replace('\n', ";"))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    #[test]
    fn components_of_small_graphs() {
        assert_eq!(cycle(5).components(), vec![VertexSet::full(5)]);
        let e3 = Graph::empty(3).unwrap();
        assert_eq!(e3.components().len(), 3);
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        assert_eq!(
            g.components(),
            vec![VertexSet::from_bits(0b00111), VertexSet::from_bits(0b11000)]
        );
    }

    #[test]
    fn vertex_and_edge_deletion() {
        let c4 = cycle(4);
        let (p3, map) = c4.delete_vertices(VertexSet::singleton(0));
        assert_eq!(map, vec![None, Some(0), Some(1), Some(2)]);
        assert_eq!(p3, path(3));

        let p4 = c4.delete_edge(EdgeId::new(&c4, 3, 0).unwrap()).unwrap();
        assert_eq!(p4, path(4));

        let (k3, _) = complete(4).delete_vertices(VertexSet::singleton(0));
        assert_eq!(k3, complete(3));
    }

    #[test]
    fn edge_id_rejects_non_edges() {
        let c4 = cycle(4);
        assert_eq!(EdgeId::new(&c4, 0, 2), Err(GraphError::NotAnEdge(0, 2)));
        assert!(c4.delete_edge(EdgeId::unchecked(0, 2)).is_err());
        assert!(matches!(
            EdgeId::new(&c4, 0, 9),
            Err(GraphError::VertexOutOfRange { vertex: 9, n: 4 })
        ));
    }

    #[test]
    fn rejects_oversized_graphs() {
        assert_eq!(Graph::empty(65), Err(GraphError::TooManyVertices(65)));
        let g = Graph::empty(64).unwrap();
        assert_eq!(g.components().len(), 64);
    }

    #[test]
    fn edges_are_lexicographic() {
        let g = Graph::from_edges(4, [(3, 2), (0, 3), (1, 0)]).unwrap();
        let edges: Vec<_> = g.edges().map(EdgeId::endpoints).collect();
        assert_eq!(edges, vec![(0, 1), (0, 3), (2, 3)]);
    }

    #[test]
    fn lex_order_of_vertex_sets() {
        let a = VertexSet::from_iter([0, 3]);
        let b = VertexSet::from_iter([1, 2]);
        assert_eq!(a.lex_cmp(b), std::cmp::Ordering::Less);
    }

    #[test]
    fn induced_embedding_check() {
        let c5 = cycle(5);
        let p3 = path(3);
        assert!(p3.is_induced_in(&c5, &[0, 1, 2]));
        assert!(!p3.is_induced_in(&complete(3), &[0, 1, 2]));
        assert!(!p3.is_induced_in(&c5, &[0, 1, 1]));
    }
}
