//! Fewest removed vertices for every component count, by dynamic programming
//! over a vertex ordering.
//!
//! Vertices are decided one at a time (removed or kept). The frontier holds
//! the decided vertices that still have undecided neighbours. A state labels
//! each frontier vertex as removed (0) or by the block of kept vertices it is
//! connected to through decided vertices. A block whose last frontier vertex
//! retires can never grow again and is counted as a finished component.

use std::collections::HashMap;

use crate::graph::Graph;

const UNREACHABLE: u16 = u16::MAX;

/// Frontier after deciding `v`, given the frontier and decided set before.
fn advance(g: &Graph, decided: u64, frontier: u64, v: usize) -> u64 {
    let now = decided | 1 << v;
    let mut next = frontier | 1 << v;
    let mut rest = next;
    while rest != 0 {
        let x = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if g.row(x) & !now == 0 {
            next &= !(1 << x);
        }
    }
    next
}

/// Builds an ordering from `start`, repeatedly taking the undecided vertex
/// with the best `score` (lowest index on ties). Returns the order and the
/// summed table-size estimate Σ 2^|frontier|.
fn greedy_order<F>(g: &Graph, start: usize, score: F) -> (Vec<usize>, f64)
where
    F: Fn(usize, u64, u64) -> (u32, u32),
{
    let n = g.order();
    let mut decided = 0u64;
    let mut frontier = 0u64;
    let mut order = Vec::with_capacity(n);
    let mut cost = 0.0;
    let mut next = Some(start);
    while let Some(v) = next {
        frontier = advance(g, decided, frontier, v);
        decided |= 1 << v;
        order.push(v);
        cost += (frontier.count_ones() as f64).exp2();
        next = (0..n)
            .filter(|&u| decided >> u & 1 == 0)
            .min_by_key(|&u| score(u, decided, frontier));
    }
    (order, cost)
}

/// The cheapest of two greedy strategies tried from every start vertex:
/// most decided neighbours first, and smallest next frontier first.
fn vertex_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut best: Option<(f64, Vec<usize>)> = None;
    for start in 0..n {
        let by_neighbours = greedy_order(g, start, |u, decided, _| {
            let row = g.row(u);
            (n as u32 - (row & decided).count_ones(), (row & !decided).count_ones())
        });
        let by_frontier = greedy_order(g, start, |u, decided, frontier| {
            (advance(g, decided, frontier, u).count_ones(), 0)
        });
        for (order, cost) in [by_neighbours, by_frontier] {
            if best.as_ref().is_none_or(|(c, _)| cost < *c) {
                best = Some((cost, order));
            }
        }
    }
    best.map(|(_, order)| order).unwrap_or_default()
}

fn normalise(labels: &mut [u8]) {
    let mut map = [0u8; 66];
    let mut next = 1u8;
    for l in labels.iter_mut() {
        if *l == 0 {
            continue;
        }
        if map[*l as usize] == 0 {
            map[*l as usize] = next;
            next += 1;
        }
        *l = map[*l as usize];
    }
}

type Table = HashMap<Vec<u8>, Vec<u16>>;

fn emit(table: &mut Table, labels: &[u8], keep: &[usize], costs: &[u16], removed: u16) {
    let mut key: Vec<u8> = keep.iter().map(|&i| labels[i]).collect();
    let mut finished = 0usize;
    let mut seen = 0u128;
    for (i, &l) in labels.iter().enumerate() {
        if l == 0 || seen >> l & 1 == 1 || keep.contains(&i) {
            continue;
        }
        seen |= 1 << l;
        if !key.contains(&l) {
            finished += 1;
        }
    }
    normalise(&mut key);
    let entry = table.entry(key).or_default();
    let len = costs.len() + finished;
    if entry.len() < len {
        entry.resize(len, UNREACHABLE);
    }
    for (c, &s) in costs.iter().enumerate() {
        if s != UNREACHABLE {
            let slot = &mut entry[c + finished];
            *slot = (*slot).min(s + removed);
        }
    }
}

/// `profile[c]` is the fewest vertices whose removal leaves exactly `c`
/// components, or `None` when no vertex set does.
pub fn cutset_profile(g: &Graph) -> Vec<Option<usize>> {
    let n = g.order();
    let mut table: Table = HashMap::from([(Vec::new(), vec![0u16])]);
    let mut frontier: Vec<usize> = Vec::new();
    let mut decided = 0u64;
    for v in vertex_order(g) {
        decided |= 1 << v;
        let neighbours: Vec<usize> = (0..frontier.len()).filter(|&i| g.has_edge(frontier[i], v)).collect();
        frontier.push(v);
        let keep: Vec<usize> = (0..frontier.len())
            .filter(|&i| g.row(frontier[i]) & !decided != 0)
            .collect();
        let mut next = Table::with_capacity(table.len() * 2);
        for (labels, costs) in &table {
            let mut out = labels.clone();
            out.push(0);
            emit(&mut next, &out, &keep, costs, 1);

            let mut merged = 0u128;
            for &i in &neighbours {
                merged |= 1 << labels[i];
            }
            merged &= !1;
            let target = if merged == 0 {
                labels.iter().copied().max().unwrap_or(0) + 1
            } else {
                merged.trailing_zeros() as u8
            };
            let last = out.len() - 1;
            for l in out.iter_mut() {
                if merged >> *l & 1 == 1 {
                    *l = target;
                }
            }
            out[last] = target;
            emit(&mut next, &out, &keep, costs, 0);
        }
        frontier = keep.iter().map(|&i| frontier[i]).collect();
        table = next;
    }
    let costs = table.remove(&Vec::new()).unwrap_or_default();
    let mut profile: Vec<Option<usize>> = costs
        .into_iter()
        .map(|s| (s != UNREACHABLE).then_some(s as usize))
        .collect();
    profile.resize(n + 1, None);
    profile
}
