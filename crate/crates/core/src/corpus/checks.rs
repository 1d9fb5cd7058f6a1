use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::graph::{Graph, VertexSet};
use crate::minimality::{is_minimally_k_connected, search_witness};
use crate::rational::Rational;
use crate::toughness::{is_t_tough, toughness_exact, Toughness, ToughnessCertificate};

/// A named predicate evaluated on every applicable graph of a corpus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    /// Minimally 1-tough ⇒ δ ≤ n/3 + 1.
    Theorem2,
    /// Minimally 1-tough ⇒ some vertex has degree 2 (open conjecture).
    Kriesell,
    /// Minimally 1-tough, claw-free, n ≥ 4 ⇒ cycle.
    Theorem3,
    /// Every edge of a minimally 1-tough graph has a witness set S(e).
    ClaimWitness,
    /// Minimally 1-tough and Hamiltonian ⇒ cycle.
    HamMin1Tough,
    /// Hamiltonian ⇒ 1-tough.
    HamImplies1Tough,
    /// Connected, non-complete ⇒ κ ≥ 2τ.
    TwoTConnected,
    /// Minimally k-connected ⇒ some vertex has degree k.
    Mader,
    /// Minimally 1-tough ⇒ every triangle vertex has degree ≥ 3.
    TriangleDeg3,
    /// Claw-free: each tough-set vertex meets exactly two components, each
    /// component has exactly 2τ neighbours in the set.
    ToughSetStructure,
    /// 2-connected with 3δ ≥ n + κ ⇒ Hamiltonian.
    HnSufficiency,
    /// Claw-free, non-complete ⇒ 2τ = κ.
    ClawFreeKappa,
}

impl Check {
    pub const ALL: [Check; 12] = [
        Check::Theorem2,
        Check::Kriesell,
        Check::Theorem3,
        Check::ClaimWitness,
        Check::HamMin1Tough,
        Check::HamImplies1Tough,
        Check::TwoTConnected,
        Check::Mader,
        Check::TriangleDeg3,
        Check::ToughSetStructure,
        Check::HnSufficiency,
        Check::ClawFreeKappa,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Theorem2 => "theorem2",
            Check::Kriesell => "kriesell",
            Check::Theorem3 => "theorem3",
            Check::ClaimWitness => "claim-witness",
            Check::HamMin1Tough => "ham-min1tough",
            Check::HamImplies1Tough => "ham-implies-1tough",
            Check::TwoTConnected => "2t-connected",
            Check::Mader => "mader",
            Check::TriangleDeg3 => "triangle-deg3",
            Check::ToughSetStructure => "toughset-structure",
            Check::HnSufficiency => "hn-sufficiency",
            Check::ClawFreeKappa => "clawfree-kappa",
        }
    }

    /// Whether a failure is a conjecture status rather than a falsification.
    pub fn is_conjecture(self) -> bool {
        self == Check::Kriesell
    }

    /// Parses a comma-separated list; `all` selects every check.
    pub fn parse_list(text: &str) -> Result<Vec<Check>, UnknownCheck> {
        if text.trim() == "all" {
            return Ok(Check::ALL.to_vec());
        }
        let mut out: Vec<Check> = text
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(str::parse)
            .collect::<Result<_, _>>()?;
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown check {0:?}")]
pub struct UnknownCheck(pub String);

impl FromStr for Check {
    type Err = UnknownCheck;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| UnknownCheck(s.to_string()))
    }
}

impl Serialize for Check {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// Outcome of one check on one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    NotApplicable,
    Pass,
    Fail(String),
}

/// Lazily computed invariants of one graph, shared by all checks.
pub(crate) struct Profile<'a> {
    pub g: &'a Graph,
    cert: OnceCell<ToughnessCertificate>,
    min1tough: OnceCell<bool>,
    claw_free: OnceCell<bool>,
    kappa: OnceCell<usize>,
    hamiltonian: OnceCell<bool>,
}

impl<'a> Profile<'a> {
    pub fn new(g: &'a Graph) -> Self {
        Profile {
            g,
            cert: OnceCell::new(),
            min1tough: OnceCell::new(),
            claw_free: OnceCell::new(),
            kappa: OnceCell::new(),
            hamiltonian: OnceCell::new(),
        }
    }

    pub fn cert(&self) -> &ToughnessCertificate {
        self.cert.get_or_init(|| toughness_exact(self.g))
    }

    pub fn tau(&self) -> Toughness {
        self.cert().value
    }

    pub fn min1tough(&self) -> bool {
        *self.min1tough.get_or_init(|| {
            self.tau() == Rational::ONE
                && self
                    .g
                    .edges()
                    .all(|e| !is_t_tough(&self.g.without_edge(e), Rational::ONE))
        })
    }

    pub fn claw_free(&self) -> bool {
        *self.claw_free.get_or_init(|| self.g.is_claw_free())
    }

    pub fn kappa(&self) -> usize {
        *self.kappa.get_or_init(|| self.g.vertex_connectivity())
    }

    pub fn hamiltonian(&self) -> bool {
        *self
            .hamiltonian
            .get_or_init(|| self.g.order() >= 3 && self.g.is_hamiltonian().unwrap_or(false))
    }

    fn min_degree(&self) -> usize {
        self.g.min_degree().unwrap_or(0)
    }
}

fn verdict(applicable: bool, holds: impl FnOnce() -> Result<(), String>) -> Verdict {
    if !applicable {
        return Verdict::NotApplicable;
    }
    match holds() {
        Ok(()) => Verdict::Pass,
        Err(detail) => Verdict::Fail(detail),
    }
}

fn ensure(ok: bool, detail: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

fn triangle_vertices(g: &Graph) -> VertexSet {
    let mut out = VertexSet::EMPTY;
    for e in g.edges() {
        if !g.neighbors(e.u()).intersection(g.neighbors(e.v())).is_empty() {
            out.insert(e.u());
            out.insert(e.v());
        }
    }
    out
}

fn tough_set_structure(p: &Profile) -> Result<(), String> {
    let g = p.g;
    let Toughness::Finite(tau) = p.tau() else {
        unreachable!("applicability excludes complete graphs")
    };
    let twice = tau.mul_int(2);
    for &s in &p.cert().tough_sets {
        let comps = g.components_within(g.vertices().difference(s));
        for v in s.iter() {
            let touched = comps
                .iter()
                .filter(|c| !g.neighbors(v).intersection(**c).is_empty())
                .count();
            ensure(touched == 2, || {
                format!("tough set {:?}: vertex {v} meets {touched} components", s.to_vec())
            })?;
        }
        for c in &comps {
            let attach = s
                .iter()
                .filter(|&v| !g.neighbors(v).intersection(*c).is_empty())
                .count();
            ensure(Rational::integer(attach as u64) == twice, || {
                format!(
                    "tough set {:?}: component {:?} has {attach} neighbours, 2τ = {twice}",
                    s.to_vec(),
                    c.to_vec()
                )
            })?;
        }
    }
    Ok(())
}

pub(crate) fn evaluate(check: Check, p: &Profile) -> Verdict {
    let g = p.g;
    let n = g.order();
    match check {
        Check::Theorem2 => verdict(p.min1tough(), || {
            let d = p.min_degree();
            ensure(3 * d <= n + 3, || format!("δ = {d} > n/3 + 1 with n = {n}"))
        }),
        Check::Kriesell => verdict(p.min1tough(), || {
            let d = p.min_degree();
            ensure(d == 2, || format!("δ = {d}"))
        }),
        Check::Theorem3 => verdict(n >= 4 && p.claw_free() && p.min1tough(), || {
            ensure(g.is_cycle(), || "claw-free minimally 1-tough but not a cycle".into())
        }),
        Check::ClaimWitness => verdict(p.min1tough(), || {
            for e in g.edges() {
                let Some(s) = search_witness(g, e) else {
                    return Err(format!("no witness set for edge {e}"));
                };
                let h = g.without_edge(e);
                ensure(
                    g.components_after_removing(s) == s.len() && h.components_after_removing(s) == s.len() + 1,
                    || format!("witness {:?} for edge {e} has the wrong component counts", s.to_vec()),
                )?;
            }
            Ok(())
        }),
        Check::HamMin1Tough => verdict(p.min1tough() && p.hamiltonian(), || {
            ensure(g.is_cycle(), || "Hamiltonian minimally 1-tough but not a cycle".into())
        }),
        Check::HamImplies1Tough => verdict(p.hamiltonian(), || {
            let tau = p.tau();
            ensure(tau >= Rational::ONE, || format!("Hamiltonian with τ = {tau}"))
        }),
        Check::TwoTConnected => verdict(g.is_connected() && !g.is_complete(), || {
            let tau = p.tau().finite().expect("non-complete");
            let kappa = p.kappa();
            ensure(Rational::integer(kappa as u64) >= tau.mul_int(2), || {
                format!("κ = {kappa} < 2τ = {}", tau.mul_int(2))
            })
        }),
        Check::Mader => {
            let applicable = n >= 2 && g.is_connected() && {
                let k = p.kappa();
                k >= 1 && is_minimally_k_connected(g, k).minimal
            };
            verdict(applicable, || {
                let k = p.kappa();
                ensure((0..n).any(|v| g.degree(v) == k), || {
                    format!("minimally {k}-connected without a vertex of degree {k}")
                })
            })
        }
        Check::TriangleDeg3 => verdict(p.min1tough(), || {
            match triangle_vertices(g).iter().find(|&v| g.degree(v) < 3) {
                None => Ok(()),
                Some(v) => Err(format!("triangle vertex {v} has degree {}", g.degree(v))),
            }
        }),
        Check::ToughSetStructure => verdict(g.is_connected() && !g.is_complete() && p.claw_free(), || {
            tough_set_structure(p)
        }),
        Check::HnSufficiency => {
            let applicable = n >= 3 && p.kappa() >= 2 && 3 * p.min_degree() >= n + p.kappa();
            verdict(applicable, || ensure(p.hamiltonian(), || "no Hamiltonian cycle".into()))
        }
        Check::ClawFreeKappa => verdict(!g.is_complete() && p.claw_free(), || {
            let tau = p.tau().finite().expect("non-complete");
            let kappa = p.kappa();
            ensure(tau.mul_int(2) == Rational::integer(kappa as u64), || {
                format!("2τ = {} but κ = {kappa}", tau.mul_int(2))
            })
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::graph::EdgeId;

    #[test]
    fn names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert_eq!(
            Check::parse_list("theorem3, theorem2,theorem3").unwrap(),
            vec![Check::Theorem2, Check::Theorem3]
        );
        assert!(Check::parse_list("theorem9").is_err());
        assert_eq!(Check::parse_list("all").unwrap().len(), Check::ALL.len());
    }

    #[test]
    fn c5_passes_everything_applicable() {
        let g = cycle(5);
        let p = Profile::new(&g);
        for c in Check::ALL {
            assert!(!matches!(evaluate(c, &p), Verdict::Fail(_)), "{c}");
        }
        assert_eq!(evaluate(Check::Theorem3, &p), Verdict::Pass);
        assert_eq!(evaluate(Check::Kriesell, &p), Verdict::Pass);
        assert_eq!(evaluate(Check::HnSufficiency, &p), Verdict::NotApplicable);
    }

    #[test]
    fn k4_minus_edge_checks() {
        let g = complete(4)
            .delete_edge(EdgeId::new(&complete(4), 0, 1).unwrap())
            .unwrap();
        let p = Profile::new(&g);
        assert!(!p.min1tough());
        assert_eq!(evaluate(Check::ClawFreeKappa, &p), Verdict::Pass);
        assert_eq!(evaluate(Check::HamImplies1Tough, &p), Verdict::Pass);
        assert_eq!(evaluate(Check::Theorem2, &p), Verdict::NotApplicable);
    }

    #[test]
    fn structure_failure_on_a_claw() {
        // The centre of the claw meets three components.
        let g = star(3);
        let p = Profile::new(&g);
        assert!(tough_set_structure(&p).is_err());
    }
}
