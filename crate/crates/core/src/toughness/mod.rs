//! Exact toughness: τ(G) = min |S| / ω(G − S) over all cutsets S.
//!
//! Cutsets are scanned by increasing size and, within a size, in
//! lexicographic order. Two facts bound the scan:
//!
//! * ω(G − S) ≤ min(α(G), n − |S|), so once `|S| / min(α, n − |S|)` exceeds
//!   the best ratio seen (or the target `t`) no larger set can help;
//! * a vertex of S that touches at most one component of G − S can be
//!   dropped from S for a strictly smaller ratio, so only cutsets whose every
//!   vertex touches two or more components are candidates. Every tough set
//!   has this property.
//!
//! Each size is split into independent chunks by the two smallest members
//! and scanned on the rayon pool; results are merged by exact comparison, so
//! the output does not depend on the number of workers.
//!
//! [`toughness_value`] and [`is_t_tough`] instead use [`cutset_profile`],
//! whose cost grows with the frontier width of the graph rather than with α,
//! so they stay fast on sparse hosts with large independent sets.

mod frontier;

pub use frontier::cutset_profile;

use std::cmp::Ordering;
use std::fmt;
use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Claw, Graph, VertexSet};
use crate::rational::Rational;

/// τ(G): a non-negative rational, or infinity for complete graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Toughness {
    Finite(Rational),
    Infinite,
}

impl Toughness {
    pub fn finite(self) -> Option<Rational> {
        match self {
            Toughness::Finite(r) => Some(r),
            Toughness::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Toughness::Infinite
    }
}

impl Ord for Toughness {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Toughness::Infinite, Toughness::Infinite) => Ordering::Equal,
            (Toughness::Infinite, _) => Ordering::Greater,
            (_, Toughness::Infinite) => Ordering::Less,
            (Toughness::Finite(a), Toughness::Finite(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for Toughness {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq<Rational> for Toughness {
    fn eq(&self, other: &Rational) -> bool {
        *self == Toughness::Finite(*other)
    }
}

impl PartialOrd<Rational> for Toughness {
    fn partial_cmp(&self, other: &Rational) -> Option<Ordering> {
        Some(self.cmp(&Toughness::Finite(*other)))
    }
}

impl fmt::Display for Toughness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Toughness::Finite(r) => write!(f, "{r}"),
            Toughness::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Toughness {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// τ(G) with every minimising cutset.
///
/// Disconnected graphs get τ = 0 with `disconnected` set and the empty set as
/// the sole witness. Complete graphs get [`Toughness::Infinite`] and no sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToughnessCertificate {
    pub value: Toughness,
    pub disconnected: bool,
    /// Minimising cutsets in lexicographic order.
    pub tough_sets: Vec<VertexSet>,
}

impl Serialize for ToughnessCertificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let tau = if self.disconnected {
            "0 (disconnected)".to_string()
        } else {
            self.value.to_string()
        };
        let mut st = serializer.serialize_struct("ToughnessCertificate", 2)?;
        st.serialize_field("tau", &tau)?;
        st.serialize_field("tough_sets", &self.tough_sets)?;
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ToughnessError {
    #[error("the graph is complete: it has no cutset")]
    Complete,
    #[error("the graph is disconnected")]
    Disconnected,
    #[error("the graph contains a claw centred at {} with leaves {:?}", .0.center, .0.leaves)]
    HasClaw(Claw),
}

/// Calls `visit` on every `k`-subset of `{start, .., n-1}` unioned with
/// `prefix`, in lexicographic order.
fn scan_suffixes<F>(prefix: u64, start: usize, k: usize, n: usize, visit: &mut F) -> ControlFlow<()>
where
    F: FnMut(u64) -> ControlFlow<()>,
{
    if k == 0 {
        return visit(prefix);
    }
    for v in start..=n - k {
        scan_suffixes(prefix | 1 << v, v + 1, k - 1, n, visit)?;
    }
    ControlFlow::Continue(())
}

/// Work units for the `size`-subsets of `0..n`, in lexicographic order:
/// `(fixed prefix, next free vertex, members still to choose)`.
fn chunks(n: usize, size: usize) -> Vec<(u64, usize, usize)> {
    match size {
        0 => vec![(0, 0, 0)],
        1 => (0..n).map(|i| (1u64 << i, i + 1, 0)).collect(),
        _ => (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (1u64 << i | 1u64 << j, j + 1, size - 2)))
            .filter(|&(_, next, rest)| next + rest <= n)
            .collect(),
    }
}

/// Below this order the subset scans run on the calling thread.
const PARALLEL_MIN_ORDER: usize = 16;

/// The lexicographically first `size`-subset of `0..n` satisfying `pred`.
pub(crate) fn first_subset<P>(n: usize, size: usize, pred: P) -> Option<u64>
where
    P: Fn(u64) -> bool + Sync,
{
    let scan_chunk = |(prefix, start, rest): (u64, usize, usize)| {
        let mut hit = None;
        let _ = scan_suffixes(prefix, start, rest, n, &mut |bits| {
            if pred(bits) {
                hit = Some(bits);
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        hit
    };
    let work = chunks(n, size);
    if n >= PARALLEL_MIN_ORDER {
        work.into_par_iter().find_map_first(scan_chunk)
    } else {
        work.into_iter().find_map(scan_chunk)
    }
}

/// Whether every vertex of `s` has neighbours in at least two components of G − S.
fn every_member_splits(g: &Graph, s: VertexSet) -> bool {
    let comps = g.components_within(g.vertices().difference(s));
    s.iter().all(|v| {
        let nb = g.neighbors(v);
        comps.iter().filter(|c| !c.intersection(nb).is_empty()).take(2).count() >= 2
    })
}

/// `a/b < c/d` on counts.
#[inline]
fn ratio_lt((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    a * d < c * b
}

#[derive(Default)]
struct Best {
    ratio: Option<(usize, usize)>,
    sets: Vec<u64>,
}

impl Best {
    fn offer(&mut self, ratio: (usize, usize), set: u64) {
        match self.ratio {
            Some(r) if ratio_lt(r, ratio) => {}
            Some(r) if !ratio_lt(ratio, r) => self.sets.push(set),
            _ => {
                self.ratio = Some(ratio);
                self.sets.clear();
                self.sets.push(set);
            }
        }
    }

    fn merge(mut self, other: Best) -> Best {
        let Some(r) = other.ratio else { return self };
        match self.ratio {
            Some(mine) if ratio_lt(mine, r) => self,
            Some(mine) if !ratio_lt(r, mine) => {
                self.sets.extend(other.sets);
                self
            }
            _ => other,
        }
    }
}

/// τ(G) with all tough sets.
pub fn toughness_exact(g: &Graph) -> ToughnessCertificate {
    if g.is_complete() {
        return ToughnessCertificate {
            value: Toughness::Infinite,
            disconnected: false,
            tough_sets: Vec::new(),
        };
    }
    if !g.is_connected() {
        return ToughnessCertificate {
            value: Toughness::Finite(Rational::ZERO),
            disconnected: true,
            tough_sets: vec![VertexSet::EMPTY],
        };
    }
    let n = g.order();
    let alpha = g.independence_number().0;
    let mut best = Best::default();
    for size in 1..n - 1 {
        let cap = alpha.min(n - size);
        if let Some(r) = best.ratio {
            if ratio_lt(r, (size, cap)) {
                break;
            }
        }
        let threshold = best.ratio;
        let scan_chunk = |(prefix, start, rest): (u64, usize, usize)| {
            let mut local = Best::default();
            let _ = scan_suffixes(prefix, start, rest, n, &mut |bits| {
                let s = VertexSet::from_bits(bits);
                let omega = g.components_after_removing(s);
                if omega >= 2 {
                    let ratio = (size, omega);
                    let bar = match (threshold, local.ratio) {
                        (Some(a), Some(b)) => Some(if ratio_lt(a, b) { a } else { b }),
                        (a, b) => a.or(b),
                    };
                    if bar.is_none_or(|b| !ratio_lt(b, ratio)) && every_member_splits(g, s) {
                        local.offer(ratio, bits);
                    }
                }
                ControlFlow::Continue(())
            });
            local
        };
        let work = chunks(n, size);
        let found = if n >= PARALLEL_MIN_ORDER {
            work.into_par_iter().map(scan_chunk).reduce(Best::default, Best::merge)
        } else {
            work.into_iter().map(scan_chunk).fold(Best::default(), Best::merge)
        };
        best = best.merge(found);
    }
    let (num, den) = best.ratio.expect("a connected non-complete graph has a cutset");
    let mut tough_sets: Vec<VertexSet> = best.sets.into_iter().map(VertexSet::from_bits).collect();
    tough_sets.sort_by(|a, b| a.lex_cmp(*b));
    ToughnessCertificate {
        value: Toughness::Finite(Rational::ratio(num, den)),
        disconnected: false,
        tough_sets,
    }
}

/// τ(G) alone, from [`cutset_profile`].
pub fn toughness_value(g: &Graph) -> Toughness {
    cutset_profile(g)
        .iter()
        .enumerate()
        .skip(2)
        .filter_map(|(c, s)| s.map(|s| Rational::ratio(s, c)))
        .min()
        .map_or(Toughness::Infinite, Toughness::Finite)
}

/// The first cutset S (smallest, then lexicographic) with ω(G − S) > |S| / t,
/// or `None` when G is t-tough. The empty set is returned for disconnected G.
pub fn find_violating_cutset(g: &Graph, t: Rational) -> Option<VertexSet> {
    if is_t_tough(g, t) {
        return None;
    }
    if !g.is_connected() {
        return Some(VertexSet::EMPTY);
    }
    let n = g.order();
    (1..n - 1).find_map(|size| {
        first_subset(n, size, |bits| {
            let omega = g.components_after_removing(VertexSet::from_bits(bits));
            omega >= 2 && t.exceeds_ratio(size, omega)
        })
        .map(VertexSet::from_bits)
    })
}

/// Whether ω(G − S) ≤ |S| / t for every cutset S.
pub fn is_t_tough(g: &Graph, t: Rational) -> bool {
    cutset_profile(g)
        .iter()
        .enumerate()
        .skip(2)
        .all(|(c, s)| s.is_none_or(|s| !t.exceeds_ratio(s, c)))
}

/// Every minimising cutset of a connected, non-complete graph.
pub fn all_tough_sets(g: &Graph) -> Result<Vec<VertexSet>, ToughnessError> {
    if g.is_complete() {
        return Err(ToughnessError::Complete);
    }
    if !g.is_connected() {
        return Err(ToughnessError::Disconnected);
    }
    Ok(toughness_exact(g).tough_sets)
}

/// τ(G) = κ(G)/2, valid for non-complete claw-free graphs.
pub fn toughness_clawfree(g: &Graph) -> Result<Rational, ToughnessError> {
    if let Some(claw) = g.find_claw() {
        return Err(ToughnessError::HasClaw(claw));
    }
    if g.is_complete() {
        return Err(ToughnessError::Complete);
    }
    Ok(Rational::ratio(g.vertex_connectivity(), 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use proptest::prelude::*;

    /// Unrestricted scan over all 2^n subsets.
    fn naive(g: &Graph) -> Toughness {
        if g.is_complete() {
            return Toughness::Infinite;
        }
        let n = g.order();
        (0u64..1 << n)
            .filter_map(|bits| {
                let s = VertexSet::from_bits(bits);
                let omega = g.components_after_removing(s);
                (omega >= 2).then(|| Rational::ratio(s.len(), omega))
            })
            .min()
            .map(Toughness::Finite)
            .unwrap()
    }

    fn r(a: u64, b: u64) -> Rational {
        Rational::new(a, b).unwrap()
    }

    #[test]
    fn complete_graphs_are_infinitely_tough() {
        for n in 1..=6 {
            let cert = toughness_exact(&complete(n));
            assert_eq!(cert.value, Toughness::Infinite);
            assert!(cert.tough_sets.is_empty());
        }
        assert!(is_t_tough(&complete(5), Rational::integer(1000)));
    }

    #[test]
    fn cycle_five() {
        let cert = toughness_exact(&cycle(5));
        assert_eq!(cert.value, Rational::ONE);
        assert_eq!(naive(&cycle(5)), Rational::ONE);
        // the tough sets are exactly the 5 non-adjacent pairs
        assert_eq!(cert.tough_sets.len(), 5);
        for s in &cert.tough_sets {
            let v = s.to_vec();
            assert_eq!(v.len(), 2);
            assert!(!cycle(5).has_edge(v[0], v[1]));
        }
    }

    #[test]
    fn star_and_path() {
        let cert = toughness_exact(&star(3));
        assert_eq!(cert.value, r(1, 3));
        assert_eq!(cert.tough_sets, vec![VertexSet::singleton(0)]);
        assert_eq!(all_tough_sets(&path(3)).unwrap(), vec![VertexSet::singleton(1)]);
    }

    #[test]
    fn c4_tough_sets_are_opposite_pairs() {
        assert_eq!(
            all_tough_sets(&cycle(4)).unwrap(),
            vec![VertexSet::from_iter([0, 2]), VertexSet::from_iter([1, 3])]
        );
        assert!(is_t_tough(&cycle(4), Rational::ONE));
        assert!(!is_t_tough(&cycle(4), r(9, 8)));
        assert_eq!(
            find_violating_cutset(&cycle(4), r(9, 8)),
            Some(VertexSet::from_iter([0, 2]))
        );
    }

    #[test]
    fn petersen_and_fixture() {
        assert_eq!(naive(&petersen()), r(4, 3));
        assert_eq!(toughness_exact(&petersen()).value, r(4, 3));
        let f = min1tough_not_min2conn();
        assert_eq!(naive(&f), Rational::ONE);
        assert_eq!(toughness_exact(&f).value, Rational::ONE);
    }

    #[test]
    fn disconnected_convention() {
        let g = disjoint_union(&complete(3), &complete(2));
        let cert = toughness_exact(&g);
        assert!(cert.disconnected);
        assert_eq!(cert.value, Rational::ZERO);
        assert_eq!(cert.tough_sets, vec![VertexSet::EMPTY]);
        assert!(!is_t_tough(&g, r(1, 100)));
        assert_eq!(all_tough_sets(&g), Err(ToughnessError::Disconnected));
        let json = serde_json::to_string(&cert).unwrap();
        assert_eq!(json, r#"{"tau":"0 (disconnected)","tough_sets":[[]]}"#);
    }

    #[test]
    fn certificate_json() {
        let json = serde_json::to_string(&toughness_exact(&star(3))).unwrap();
        assert_eq!(json, r#"{"tau":"1/3","tough_sets":[[0]]}"#);
        let json = serde_json::to_string(&toughness_exact(&complete(3))).unwrap();
        assert_eq!(json, r#"{"tau":"inf","tough_sets":[]}"#);
    }

    #[test]
    fn clawfree_shortcut() {
        assert_eq!(toughness_clawfree(&cycle(6)), Ok(Rational::ONE));
        assert_eq!(toughness_clawfree(&cycle(5)), Ok(Rational::ONE));
        assert!(matches!(
            toughness_clawfree(&star(3)),
            Err(ToughnessError::HasClaw(Claw { center: 0, .. }))
        ));
        assert_eq!(toughness_clawfree(&complete(4)), Err(ToughnessError::Complete));
    }

    proptest! {
        #[test]
        fn matches_naive_scan(n in 1usize..=9, p in 0.15f64..0.95, seed in any::<u64>()) {
            let g = crate::testutil::random_graph(n, p, seed);
            let cert = toughness_exact(&g);
            prop_assert_eq!(cert.value, naive(&g));
            prop_assert_eq!(toughness_value(&g), naive(&g));
            if let Toughness::Finite(t) = cert.value {
                for s in &cert.tough_sets {
                    prop_assert!(t.equals_ratio(s.len(), g.components_after_removing(*s)));
                }
                if t > Rational::ZERO {
                    prop_assert!(is_t_tough(&g, t));
                    prop_assert!(!is_t_tough(&g, Rational::new(t.numer() * 100 + 1, t.denom() * 100).unwrap()));
                }
            }
        }

        #[test]
        fn tough_sets_are_complete_list(n in 3usize..=8, p in 0.3f64..0.9, seed in any::<u64>()) {
            let g = crate::testutil::random_graph(n, p, seed);
            prop_assume!(g.is_connected() && !g.is_complete());
            let t = toughness_exact(&g).value.finite().unwrap();
            let brute: Vec<VertexSet> = (0u64..1 << n)
                .map(VertexSet::from_bits)
                .filter(|&s| {
                    let w = g.components_after_removing(s);
                    w >= 2 && t.equals_ratio(s.len(), w)
                })
                .collect();
            let mut brute = brute;
            brute.sort_by(|a, b| a.lex_cmp(*b));
            prop_assert_eq!(all_tough_sets(&g).unwrap(), brute);
        }
    }
}
