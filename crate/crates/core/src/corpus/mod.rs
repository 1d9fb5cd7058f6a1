//! Exhaustive small-graph corpora and the theorem sweep.

mod checks;
mod enumerate;
mod stream;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

pub use checks::{Check, UnknownCheck, Verdict};
pub use enumerate::{
    canonical_code, census, enumerate_graphs, graph_from_code, EnumerationError, MAX_ENUMERATION_ORDER,
};
pub use stream::{read_graph6_stream, Graph6Stream, NumberedGraph, OnError, StreamError};

use crate::graph::Graph;
use checks::{evaluate, Profile};

/// Graph counts for one order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OrderCounts {
    pub graphs: usize,
    pub connected: usize,
    pub minimally_1_tough: usize,
    pub claw_free: usize,
}

/// One CSV row: the outcome of one check over all graphs of one order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub n: usize,
    pub check: Check,
    pub applicable: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Falsification {
    pub check: Check,
    pub n: usize,
    pub graph6: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureStatus {
    pub check: Check,
    pub examined: usize,
    pub counterexamples: Vec<Falsification>,
    pub summary: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub checks: Vec<Check>,
    pub per_n: BTreeMap<usize, OrderCounts>,
    pub tallies: Vec<Tally>,
    /// Sorted by check, order and graph6; conjecture counterexamples are
    /// listed under `conjectures` instead.
    pub falsifications: Vec<Falsification>,
    pub conjectures: Vec<ConjectureStatus>,
    /// Minimum degree → number of minimally 1-tough graphs.
    pub min_degree_histogram: BTreeMap<usize, usize>,
}

impl CorpusReport {
    pub fn all_passed(&self) -> bool {
        self.falsifications.is_empty()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,check,applicable,passed,failed\n");
        for t in &self.tallies {
            writeln!(out, "{},{},{},{},{}", t.n, t.check, t.applicable, t.passed, t.failed).unwrap();
        }
        out
    }
}

struct GraphOutcome {
    n: usize,
    connected: bool,
    min1tough: bool,
    claw_free: bool,
    min_degree: usize,
    verdicts: Vec<Verdict>,
}

fn examine(g: &Graph, checks: &[Check]) -> GraphOutcome {
    let p = Profile::new(g);
    GraphOutcome {
        n: g.order(),
        connected: g.is_connected(),
        min1tough: p.min1tough(),
        claw_free: p.claw_free(),
        min_degree: g.min_degree().unwrap_or(0),
        verdicts: checks.iter().map(|&c| evaluate(c, &p)).collect(),
    }
}

fn conjecture_summary(check: Check, examined: usize, found: usize, histogram: &BTreeMap<usize, usize>) -> String {
    match check {
        Check::Kriesell if found == 0 && histogram.keys().all(|&d| d == 2) => {
            format!("no counterexample, all minimally 1-tough graphs have δ = 2 ({examined} examined)")
        }
        _ if found == 0 => format!("no counterexample ({examined} examined)"),
        _ => format!("COUNTEREXAMPLE: {found} of {examined} graphs violate the conjecture"),
    }
}

/// Evaluates `checks` on every graph using `workers` threads (0 = rayon's
/// default). The report does not depend on the number of workers.
pub fn run_checks(graphs: &[Graph], checks: &[Check], workers: usize) -> CorpusReport {
    let mut checks = checks.to_vec();
    checks.sort();
    checks.dedup();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool");
    let outcomes: Vec<GraphOutcome> = pool.install(|| graphs.par_iter().map(|g| examine(g, &checks)).collect());

    let mut per_n: BTreeMap<usize, OrderCounts> = BTreeMap::new();
    let mut tallies: BTreeMap<(usize, Check), Tally> = BTreeMap::new();
    let mut histogram = BTreeMap::new();
    let mut falsifications = Vec::new();
    let mut conjectures: BTreeMap<Check, (usize, Vec<Falsification>)> = BTreeMap::new();
    for &c in checks.iter().filter(|c| c.is_conjecture()) {
        conjectures.insert(c, (0, Vec::new()));
    }
    for (g, out) in graphs.iter().zip(&outcomes) {
        let counts = per_n.entry(out.n).or_default();
        counts.graphs += 1;
        counts.connected += out.connected as usize;
        counts.minimally_1_tough += out.min1tough as usize;
        counts.claw_free += out.claw_free as usize;
        if out.min1tough {
            *histogram.entry(out.min_degree).or_insert(0) += 1;
        }
        for (&check, verdict) in checks.iter().zip(&out.verdicts) {
            let tally = tallies.entry((out.n, check)).or_insert(Tally {
                n: out.n,
                check,
                applicable: 0,
                passed: 0,
                failed: 0,
            });
            if *verdict == Verdict::NotApplicable {
                continue;
            }
            tally.applicable += 1;
            if let Some(entry) = conjectures.get_mut(&check) {
                entry.0 += 1;
            }
            match verdict {
                Verdict::Pass => tally.passed += 1,
                Verdict::Fail(detail) => {
                    tally.failed += 1;
                    let record = Falsification {
                        check,
                        n: out.n,
                        graph6: g.reproducer(),
                        detail: detail.clone(),
                    };
                    match conjectures.get_mut(&check) {
                        Some(entry) => entry.1.push(record),
                        None => falsifications.push(record),
                    }
                }
                Verdict::NotApplicable => unreachable!(),
            }
        }
    }
    falsifications.sort();
    let conjectures = conjectures
        .into_iter()
        .map(|(check, (examined, mut found))| {
            found.sort();
            ConjectureStatus {
                check,
                examined,
                summary: conjecture_summary(check, examined, found.len(), &histogram),
                counterexamples: found,
            }
        })
        .collect();
    CorpusReport {
        checks,
        per_n,
        tallies: tallies.into_values().collect(),
        falsifications,
        conjectures,
        min_degree_histogram: histogram,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn c5_alone() {
        let report = run_checks(&[cycle(5)], &Check::ALL, 1);
        assert!(report.all_passed());
        assert_eq!(report.per_n[&5].minimally_1_tough, 1);
        assert_eq!(report.min_degree_histogram, BTreeMap::from([(2, 1)]));
        assert!(report.conjectures[0].summary.starts_with("no counterexample, all"));
    }

    #[test]
    fn sweep_to_six_is_clean_and_worker_independent() {
        let graphs = census(6).unwrap();
        let one = run_checks(&graphs, &Check::ALL, 1);
        let four = run_checks(&graphs, &Check::ALL, 4);
        assert!(one.all_passed(), "{:?}", one.falsifications);
        assert_eq!(one.to_csv(), four.to_csv());
        assert_eq!(one, four);
        assert_eq!(one.per_n[&6].graphs, 156);
    }

    #[test]
    fn csv_layout() {
        let report = run_checks(&[complete(3), cycle(4)], &[Check::Theorem2], 1);
        assert_eq!(
            report.to_csv(),
            "n,check,applicable,passed,failed\n3,theorem2,0,0,0\n4,theorem2,1,1,0\n"
        );
    }
}
