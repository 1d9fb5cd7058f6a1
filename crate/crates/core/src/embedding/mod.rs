//! Embedding an arbitrary graph as an induced subgraph of a minimally
//! t-tough graph.
//!
//! The pipeline is [`alpha_criticalize`], then (for t ≥ 1, when the
//! denominator of t does not divide the order) one [`blow_up`], then
//! [`construct_host_ge1`] or [`construct_host_lt1`], then
//! [`prune_to_minimal`] with the input's edges protected.

mod alpha_critical;
mod host;
mod prune;

use std::collections::BTreeSet;

use serde::{Serialize, Serializer};
use thiserror::Error;

pub use alpha_critical::{alpha_criticalize, blow_up, AlphaCriticalBudget};
pub use host::{
    construct_host_ge1, construct_host_lt1, CutsetWitness, EmbeddingParams, HostConstruction, HostLayout,
    InternalClaims,
};
pub use prune::prune_to_minimal;

use crate::error::GraphError;
use crate::graph::{EdgeId, Graph, MAX_VERTICES};
use crate::minimality::check_minimally_t_tough;
use crate::rational::Rational;
use crate::toughness::{is_t_tough, toughness_value};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("t must be positive")]
    NonPositiveT,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("{what} needs {required} vertices, the limit is {limit}")]
    Budget {
        what: &'static str,
        required: usize,
        limit: usize,
    },
    #[error("no alpha-critical supergraph with at most {max_added} extra vertices found after {tested} candidates")]
    AlphaCriticalBudget { max_added: usize, tested: u64 },
    #[error("construction check failed on {reproducer}: {reason}")]
    ConstructionBug { reproducer: String, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl EmbeddingError {
    /// Whether the failure is a resource limit rather than a defect.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            EmbeddingError::Budget { .. } | EmbeddingError::AlphaCriticalBudget { .. }
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EmbedConfig {
    /// Largest host order accepted.
    pub max_host_order: usize,
    pub alpha_critical: AlphaCriticalBudget,
}

impl Default for EmbedConfig {
    fn default() -> Self {
        EmbedConfig {
            max_host_order: MAX_VERTICES,
            alpha_critical: AlphaCriticalBudget::default(),
        }
    }
}

/// Intermediate graphs of one embedding run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingStages {
    pub alpha_critical: Graph,
    /// Present when a vertex was blown up to make the order divisible.
    pub blown_up: Option<BlowUp>,
    pub unpruned: Graph,
    pub claims: InternalClaims,
    pub layout: HostLayout,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlowUp {
    pub vertex: usize,
    pub clique_size: usize,
    #[serde(serialize_with = "as_reproducer")]
    pub graph: Graph,
}

fn as_reproducer<S: Serializer>(g: &Graph, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.serialize_str(&g.reproducer())
}

impl Serialize for EmbeddingStages {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("EmbeddingStages", 5)?;
        st.serialize_field("alpha_critical", &self.alpha_critical.reproducer())?;
        st.serialize_field("blown_up", &self.blown_up)?;
        st.serialize_field("unpruned", &self.unpruned.reproducer())?;
        st.serialize_field("claims", &self.claims)?;
        st.serialize_field("layout", &self.layout)?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingResult {
    pub host: Graph,
    /// Vertex i of the input sits at `map[i]` in the host.
    pub map: Vec<usize>,
    pub params: EmbeddingParams,
    /// Removed edges in removal order.
    pub pruned_edges: Vec<EdgeId>,
    pub stages: EmbeddingStages,
}

impl Serialize for EmbeddingResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("EmbeddingResult", 6)?;
        st.serialize_field("t", &self.params.t)?;
        st.serialize_field("host_graph6", &self.host.reproducer())?;
        st.serialize_field("map", &self.map)?;
        st.serialize_field("pruned", &self.pruned_edges)?;
        st.serialize_field("params", &self.params)?;
        st.serialize_field("stages", &self.stages)?;
        st.end()
    }
}

fn bug(g: &Graph, reason: impl Into<String>) -> EmbeddingError {
    EmbeddingError::ConstructionBug {
        reproducer: g.reproducer(),
        reason: reason.into(),
    }
}

/// Checks the explicit cutsets and both toughness claims on an unpruned host.
fn verify_construction(hc: &HostConstruction, core: &Graph, claims: &InternalClaims) -> Result<(), EmbeddingError> {
    let t = hc.params.t;
    let (upper, per_edge) = hc.expected_claim_counts();
    if (claims.upper.size, claims.upper.components) != upper {
        return Err(bug(
            &hc.host,
            format!(
                "upper cutset has size {} and {} components, expected {upper:?}",
                claims.upper.size, claims.upper.components
            ),
        ));
    }
    for (e, w) in &claims.per_core_edge {
        if (w.size, w.components) != per_edge {
            return Err(bug(
                &hc.host,
                format!(
                    "cutset for {e} has size {} and {} components, expected {per_edge:?}",
                    w.size, w.components
                ),
            ));
        }
    }
    let tau = toughness_value(&hc.host);
    if tau != t {
        return Err(bug(&hc.host, format!("τ(H) = {tau}, expected {t}")));
    }
    debug_assert_eq!(claims.per_core_edge.len(), core.edge_count());
    for (e, _) in &claims.per_core_edge {
        if is_t_tough(&hc.host.without_edge(*e), t) {
            return Err(bug(&hc.host, format!("deleting core edge {e} keeps τ ≥ {t}")));
        }
    }
    Ok(())
}

/// Embeds `g` as an induced subgraph of a minimally `t`-tough graph.
pub fn embed_minimally_t_tough(g: &Graph, t: Rational, config: EmbedConfig) -> Result<EmbeddingResult, EmbeddingError> {
    if t == Rational::ZERO {
        return Err(EmbeddingError::NonPositiveT);
    }
    let (critical, map) = alpha_criticalize(g, config.alpha_critical)?;
    let mut core = critical.clone();
    let mut blown = None;
    if t >= Rational::ONE {
        let b = t.denom() as usize;
        let r = core.order() % b;
        // K1 is blown up to K2 even when b = 1.
        let clique_size = match (core.order(), r) {
            (1, 0) => 2,
            (_, 0) => 1,
            _ => b - r + 1,
        };
        if clique_size > 1 {
            core = blow_up(&core, 0, clique_size)?;
            blown = Some(BlowUp {
                vertex: 0,
                clique_size,
                graph: core.clone(),
            });
        }
    }
    let hc = if t >= Rational::ONE {
        construct_host_ge1(&core, t, config.max_host_order)?
    } else {
        construct_host_lt1(&core, t, config.max_host_order)?
    };
    let claims = hc.internal_claims(&core);
    verify_construction(&hc, &core, &claims)?;

    // The input and the α-critical graph share indices, blow-ups keep vertex
    // indices, and the hosts put core vertex i at `core_map[i]`.
    let map: Vec<usize> = map.iter().map(|&i| hc.core_map[i]).collect();
    let protected: BTreeSet<EdgeId> = g.edges().map(|e| EdgeId::unchecked(map[e.u()], map[e.v()])).collect();
    if !g.is_induced_in(&hc.host, &map) {
        return Err(bug(&hc.host, "the input is not induced in the unpruned host"));
    }
    let (host, pruned_edges) = prune_to_minimal(&hc.host, t, &protected)?;
    if !g.is_induced_in(&host, &map) {
        return Err(bug(&host, "pruning broke the induced embedding"));
    }
    if !check_minimally_t_tough(&host, t) {
        return Err(bug(&host, format!("the pruned host is not minimally {t}-tough")));
    }
    Ok(EmbeddingResult {
        host,
        map,
        params: hc.params.clone(),
        pruned_edges,
        stages: EmbeddingStages {
            alpha_critical: critical,
            blown_up: blown,
            unpruned: hc.host.clone(),
            claims,
            layout: hc.layout,
        },
    })
}
