//! The two host constructions.
//!
//! t = a/b ≥ 1 (requires b | n):
//!   V carries G; for every vertex i an N-clique U_i joined to v_i and to all
//!   of W; W is independent of size (t − 1)n + α(G).
//!
//! t = a/b < 1:
//!   every vertex i becomes an a-clique V_i (G sits on the first vertices
//!   v_{i,1}); for every i and j ∈ [b] an N-clique U_{i,j} joined to V_i and
//!   to all of W; W (size a·α(G)) and W' (size (b − 1)·α(G)) are independent
//!   and completely joined to each other.
//!
//! In both cases N = ⌊t·α(H₁)⌋ + 1, where H₁ is the same construction with
//! N = 1 (α(H) does not depend on N).

use serde::Serialize;

use super::EmbeddingError;
use crate::graph::{EdgeId, Graph, VertexSet};
use crate::rational::Rational;

/// Sizes chosen for a host construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingParams {
    pub t: Rational,
    pub a: u64,
    pub b: u64,
    /// Order of the α-critical graph placed on V.
    pub n: usize,
    /// α of that graph.
    pub alpha: usize,
    /// α of the host (independent of N).
    pub alpha_host: usize,
    /// Clique size N of every U-block.
    pub clique_size: usize,
    pub v_size: usize,
    pub u_blocks: usize,
    pub w_size: usize,
    /// |W'|; only present for t < 1.
    pub w_prime_size: Option<usize>,
    pub host_order: usize,
}

/// Where each part of the host lives.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HostLayout {
    /// `v[i]` is V_i (a single vertex when t ≥ 1); `v[i][0]` carries vertex i of G.
    pub v: Vec<Vec<usize>>,
    /// `u[i]` lists the U-blocks attached to vertex i (one block when t ≥ 1).
    pub u: Vec<Vec<Vec<usize>>>,
    pub w: Vec<usize>,
    pub w_prime: Vec<usize>,
}

impl HostLayout {
    fn block_set(block: &[usize]) -> VertexSet {
        block.iter().copied().collect()
    }

    pub fn w_set(&self) -> VertexSet {
        Self::block_set(&self.w)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HostConstruction {
    pub host: Graph,
    /// Vertex i of the core graph sits at `core_map[i]`.
    pub core_map: Vec<usize>,
    pub layout: HostLayout,
    pub params: EmbeddingParams,
}

fn split(t: Rational) -> (u64, u64) {
    (t.numer(), t.denom())
}

fn clique(g: &mut Graph, block: &[usize]) {
    for (i, &x) in block.iter().enumerate() {
        for &y in &block[i + 1..] {
            g.add_edge(x, y).unwrap();
        }
    }
}

fn join(g: &mut Graph, left: &[usize], right: &[usize]) {
    for &x in left {
        for &y in right {
            g.add_edge(x, y).unwrap();
        }
    }
}

fn check_order(required: usize, limit: usize) -> Result<(), EmbeddingError> {
    if required > limit {
        Err(EmbeddingError::Budget {
            what: "host graph",
            required,
            limit,
        })
    } else {
        Ok(())
    }
}

fn require_alpha_critical(g: &Graph) -> Result<(), EmbeddingError> {
    if g.order() == 0 {
        return Err(EmbeddingError::Precondition("the core graph is empty".into()));
    }
    if !g.is_alpha_critical() {
        return Err(EmbeddingError::Precondition(
            "the core graph must be alpha-critical".into(),
        ));
    }
    Ok(())
}

fn build_ge1(g: &Graph, t: Rational, clique_size: usize, limit: usize) -> Result<HostConstruction, EmbeddingError> {
    let (a, b) = split(t);
    let n = g.order();
    let alpha = g.independence_number().0;
    let w_size = ((a - b) as usize) * n / b as usize + alpha;
    let order = n + n * clique_size + w_size;
    check_order(order, limit)?;

    let mut h = Graph::empty(order).unwrap();
    for e in g.edges() {
        h.add_edge(e.u(), e.v()).unwrap();
    }
    let u: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|i| vec![(n + i * clique_size..n + (i + 1) * clique_size).collect()])
        .collect();
    let w: Vec<usize> = (n + n * clique_size..order).collect();
    for (i, blocks) in u.iter().enumerate() {
        let block = &blocks[0];
        clique(&mut h, block);
        join(&mut h, block, &[i]);
        join(&mut h, block, &w);
    }
    Ok(HostConstruction {
        core_map: (0..n).collect(),
        layout: HostLayout {
            v: (0..n).map(|i| vec![i]).collect(),
            u,
            w,
            w_prime: Vec::new(),
        },
        params: EmbeddingParams {
            t,
            a,
            b,
            n,
            alpha,
            alpha_host: 0,
            clique_size,
            v_size: n,
            u_blocks: n,
            w_size,
            w_prime_size: None,
            host_order: order,
        },
        host: h,
    })
}

fn build_lt1(g: &Graph, t: Rational, clique_size: usize, limit: usize) -> Result<HostConstruction, EmbeddingError> {
    let (a, b) = split(t);
    let (a, b) = (a as usize, b as usize);
    let n = g.order();
    let alpha = g.independence_number().0;
    let u_start = a * n;
    let w_start = u_start + b * n * clique_size;
    let w_prime_start = w_start + a * alpha;
    let order = w_prime_start + (b - 1) * alpha;
    check_order(order, limit)?;

    let mut h = Graph::empty(order).unwrap();
    for e in g.edges() {
        h.add_edge(e.u(), e.v()).unwrap();
    }
    let v: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            std::iter::once(i)
                .chain((0..a - 1).map(|r| n + i * (a - 1) + r))
                .collect()
        })
        .collect();
    let u: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|i| {
            (0..b)
                .map(|j| {
                    let base = u_start + (i * b + j) * clique_size;
                    (base..base + clique_size).collect()
                })
                .collect()
        })
        .collect();
    let w: Vec<usize> = (w_start..w_prime_start).collect();
    let w_prime: Vec<usize> = (w_prime_start..order).collect();
    for i in 0..n {
        clique(&mut h, &v[i]);
        for block in &u[i] {
            clique(&mut h, block);
            join(&mut h, block, &v[i]);
            join(&mut h, block, &w);
        }
    }
    join(&mut h, &w, &w_prime);
    Ok(HostConstruction {
        core_map: (0..n).collect(),
        layout: HostLayout { v, u, w, w_prime },
        params: EmbeddingParams {
            t,
            a: a as u64,
            b: b as u64,
            n,
            alpha,
            alpha_host: 0,
            clique_size,
            v_size: a * n,
            u_blocks: b * n,
            w_size: a * alpha,
            w_prime_size: Some((b - 1) * alpha),
            host_order: order,
        },
        host: h,
    })
}

type Builder = fn(&Graph, Rational, usize, usize) -> Result<HostConstruction, EmbeddingError>;

/// Builds with N = 1 to read off α(H), then rebuilds with N = ⌊t·α(H)⌋ + 1.
fn with_large_cliques(
    g: &Graph,
    t: Rational,
    limit: usize,
    build: Builder,
) -> Result<HostConstruction, EmbeddingError> {
    // The N = 1 draft is at most as large as the final host; allow it to
    // exceed `limit` so the error can report the real required size.
    let draft = build(g, t, 1, crate::graph::MAX_VERTICES)?;
    let alpha_host = draft.host.independence_number().0;
    let clique_size = t.floor_mul(alpha_host as u64) as usize + 1;
    let mut done = build(g, t, clique_size, limit)?;
    done.params.alpha_host = alpha_host;
    Ok(done)
}

/// Host for t ≥ 1. `g` must be α-critical with `b | n`.
pub fn construct_host_ge1(g: &Graph, t: Rational, limit: usize) -> Result<HostConstruction, EmbeddingError> {
    if t < Rational::ONE {
        return Err(EmbeddingError::Precondition(format!("t = {t} is below 1")));
    }
    require_alpha_critical(g)?;
    if !(g.order() as u64).is_multiple_of(t.denom()) {
        return Err(EmbeddingError::Precondition(format!(
            "the denominator {} of t must divide n = {}; blow up a vertex first",
            t.denom(),
            g.order()
        )));
    }
    with_large_cliques(g, t, limit, build_ge1)
}

/// Host for 0 < t < 1. `g` must be α-critical.
pub fn construct_host_lt1(g: &Graph, t: Rational, limit: usize) -> Result<HostConstruction, EmbeddingError> {
    if t >= Rational::ONE || t == Rational::ZERO {
        return Err(EmbeddingError::Precondition(format!("t = {t} is not in (0, 1)")));
    }
    require_alpha_critical(g)?;
    with_large_cliques(g, t, limit, build_lt1)
}

/// An explicit cutset with its size and the number of components it leaves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutsetWitness {
    pub set: VertexSet,
    pub size: usize,
    pub components: usize,
}

/// The cutsets that pin τ(H) from above and break t-toughness after deleting
/// an edge of the core graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InternalClaims {
    /// τ(H) ≤ t: |X| = tn (t ≥ 1) or an (t < 1), leaving n or bn components.
    pub upper: CutsetWitness,
    /// For each core edge e: a cutset of H − e with ratio below t
    /// (|X| = tn − 1 with n components, or (n − 1)a with (n − 1)b + 1).
    pub per_core_edge: Vec<(EdgeId, CutsetWitness)>,
}

impl HostConstruction {
    fn removal_for(&self, keep: VertexSet) -> VertexSet {
        // V-blocks of vertices outside `keep`, plus W.
        let mut x = self.layout.w_set();
        for (i, block) in self.layout.v.iter().enumerate() {
            if !keep.contains(i) {
                x = x.union(HostLayout::block_set(block));
            }
        }
        x
    }

    /// Evaluates the explicit cutsets on the unpruned host. `core` is the
    /// α-critical graph the host was built from.
    pub fn internal_claims(&self, core: &Graph) -> InternalClaims {
        let (_, independent) = core.independence_number();
        let x = self.removal_for(independent);
        let upper = CutsetWitness {
            set: x,
            size: x.len(),
            components: self.host.components_after_removing(x),
        };
        let alpha = self.params.alpha;
        let per_core_edge = core
            .edges()
            .map(|e| {
                let (i, j) = e.endpoints();
                let blocked = core.neighbors(i).union(core.neighbors(j));
                let rest = core
                    .vertices()
                    .difference(blocked)
                    .difference(VertexSet::from_iter([i, j]));
                let (size, others) = core.independence_number_within(rest);
                debug_assert!(size + 1 >= alpha, "core graph is alpha-critical");
                let keep = others.union(VertexSet::from_iter([i, j]));
                let x = self.removal_for(keep);
                let host_edge = EdgeId::unchecked(self.core_map[i], self.core_map[j]);
                let comps = self.host.without_edge(host_edge).components_after_removing(x);
                (
                    host_edge,
                    CutsetWitness {
                        set: x,
                        size: x.len(),
                        components: comps,
                    },
                )
            })
            .collect();
        InternalClaims { upper, per_core_edge }
    }

    /// Expected (size, components) of the upper cutset and of each per-edge cutset.
    pub fn expected_claim_counts(&self) -> ((usize, usize), (usize, usize)) {
        let p = &self.params;
        let (a, b, n) = (p.a as usize, p.b as usize, p.n);
        if p.t >= Rational::ONE {
            let tn = a * n / b;
            ((tn, n), (tn - 1, n))
        } else {
            ((a * n, b * n), ((n - 1) * a, (n - 1) * b + 1))
        }
    }
}
