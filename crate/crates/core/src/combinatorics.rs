//! Exhaustive counting of maximal sets over all small labeled graphs.
//!
//! `M_p(N)` denotes the largest number of maximal sets satisfying `p` in any
//! N-vertex graph. With a prefix of size `k`, graphs have `N + k` vertices and
//! only maximal sets containing a fixed k-set are counted; iterating over all
//! labeled graphs makes the choice of prefix irrelevant.

use serde::Serialize;

use crate::bitset::{bits, VertexSet};
use crate::error::{Error, Result};
use crate::generators;
use crate::graph::Graph;
use crate::io::write_edge_list;
use crate::oracle::{count_maximal, full_scan_mask};
use crate::predicate::Predicate;
use crate::util::binomial;

pub const EXHAUSTIVE_LIMIT: usize = 7;
const ARGMAX_CAP: usize = 16;

/// Growth constant used for forests and 1-degenerate graphs.
pub const FOREST_BASE: f64 = 1.8638;

const KAPPA_TABLE: [f64; 5] = [1.618, 1.839, 1.928, 1.966, 1.984];

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Kappa {
    pub d: usize,
    /// Root in `(1, 2)` of `x^(d+4) - 2x^(d+3) + 1`.
    pub root: f64,
    /// Root in `(1, 2)` of `x^(d+3) - 2x^(d+2) + 1`.
    pub shifted_root: f64,
    /// Tabulated value for `d <= 4`.
    pub table: Option<f64>,
}

fn root_in_unit_interval(exp: i32) -> f64 {
    // f(x) = x^exp (x - 2) + 1 vanishes at 1, dips below zero, and is positive at 2.
    let f = |x: f64| x.powi(exp) * (x - 2.0) + 1.0;
    let (mut lo, mut hi) = (1.0 + 1e-3, 2.0);
    debug_assert!(f(lo) < 0.0 && f(hi) > 0.0);
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

pub fn kappa(d: usize) -> Kappa {
    Kappa {
        d,
        root: root_in_unit_interval(d as i32 + 3),
        shifted_root: root_in_unit_interval(d as i32 + 2),
        table: KAPPA_TABLE.get(d).copied(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundRecord {
    #[serde(rename = "N")]
    pub n: usize,
    pub predicate: Predicate,
    pub prefix_size: usize,
    pub max_count: u64,
    /// Number of labeled graphs attaining the maximum.
    pub argmax_total: u64,
    /// Up to 16 attaining graphs, as canonical edge lists.
    pub argmax_graphs: Vec<String>,
    /// Closed-form upper bound, where one is known for the predicate.
    pub bound_value: Option<f64>,
}

impl BoundRecord {
    pub fn within_bound(&self) -> bool {
        self.bound_value.is_none_or(|b| self.max_count as f64 <= b + 1e-9)
    }
}

/// Closed-form bound on maximal sets in an N-vertex graph, for predicates with one.
pub fn closed_form_bound(p: Predicate, n: usize, prefix_size: usize) -> Option<f64> {
    let nf = n as f64;
    match p {
        Predicate::IndependentSet | Predicate::Clique if prefix_size == 0 => Some(3f64.powf(nf / 3.0)),
        Predicate::MaxDegree(1) if prefix_size == 0 => Some(10f64.powf(nf / 5.0)),
        Predicate::MaxDegree(d) => {
            let k = kappa(d);
            Some(k.table.unwrap_or(k.root).powf(nf))
        }
        Predicate::Forest | Predicate::DegenerateAtMost(1) if prefix_size == 0 => Some(FOREST_BASE.powf(nf)),
        _ => None,
    }
}

/// Fixed vertex pairs for decoding an edge mask into a graph.
fn pairs(v: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..v {
        for b in a + 1..v {
            out.push((a, b));
        }
    }
    out
}

fn decode(pairs: &[(usize, usize)], code: u64, adj: &mut [u64]) {
    adj.iter_mut().for_each(|r| *r = 0);
    for i in bits(code) {
        let (a, b) = pairs[i];
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
}

/// Counts maximal sets containing `prefix` under a hereditary predicate, with
/// `sat` as scratch space of size `2^v`.
fn count_with_prefix(adj: &[u64], v: usize, p: Predicate, prefix: u64, sat: &mut [bool]) -> u64 {
    let size = 1usize << v;
    sat[0] = p.holds_mask(adj, 0);
    for m in 1..size {
        let high = 63 - (m as u64).leading_zeros() as usize;
        sat[m] = sat[m & !(1 << high)] && p.holds_mask(adj, m as u64);
    }
    let mut count = 0;
    for m in 0..size {
        if m as u64 & prefix != prefix || !sat[m] {
            continue;
        }
        if (0..v).all(|b| m >> b & 1 == 1 || !sat[m | 1 << b]) {
            count += 1;
        }
    }
    count
}

/// Largest number of maximal sets satisfying `p` and containing a prefix of
/// `prefix_size` vertices, over all labeled graphs on `n + prefix_size` vertices.
pub fn max_count_over_all_graphs(n: usize, p: Predicate, prefix_size: usize) -> Result<BoundRecord> {
    let v = n + prefix_size;
    if v > EXHAUSTIVE_LIMIT {
        return Err(Error::SizeLimit {
            what: "exhaustive graph scan",
            n: v,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    if !p.is_hereditary() {
        return Err(Error::InvalidParameter(format!("{p} is not hereditary")));
    }
    let pairs = pairs(v);
    let prefix: u64 = ((1u64 << prefix_size) - 1) << n;
    let mut adj = vec![0u64; v];
    let mut sat = vec![false; 1 << v];
    let mut best = 0;
    let mut argmax = Vec::new();
    let mut argmax_total = 0;
    for code in 0u64..1 << pairs.len() {
        decode(&pairs, code, &mut adj);
        let count = count_with_prefix(&adj, v, p, prefix, &mut sat);
        if count > best {
            best = count;
            argmax.clear();
            argmax_total = 0;
        }
        if count == best {
            argmax_total += 1;
            if argmax.len() < ARGMAX_CAP {
                argmax.push(write_edge_list(&Graph::from_masks(&adj)));
            }
        }
    }
    Ok(BoundRecord {
        n,
        predicate: p,
        prefix_size,
        max_count: best,
        argmax_total,
        argmax_graphs: argmax,
        bound_value: closed_form_bound(p, n, prefix_size),
    })
}

/// CSV with columns `N, predicate, max_count, bound, argmax_graph`, one row per
/// record; edge lists are written on one line with `;` separators.
pub fn records_to_csv(records: &[BoundRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["N", "predicate", "prefix_size", "max_count", "bound", "argmax_graph"]).unwrap();
    for r in records {
        let bound = r.bound_value.map(|b| format!("{b:.6}")).unwrap_or_default();
        let graph = r.argmax_graphs.first().map(|g| g.trim_end().replace('\n', ";")).unwrap_or_default();
        w.write_record([
            r.n.to_string(),
            r.predicate.to_string(),
            r.prefix_size.to_string(),
            r.max_count.to_string(),
            bound,
            graph,
        ])
        .unwrap();
    }
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}

/// Results of checking the structural facts about maximal sets of maximum
/// degree at most one on a single graph.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct M1LemmaReport {
    /// The count is multiplicative over a component and the rest.
    pub disconnected: bool,
    /// Deleting the edge between adjacent vertices with equal closed
    /// neighbourhoods never decreases the count.
    pub twin: bool,
    /// An unmatched member `v` never has a neighbour `u` with `N(u) ⊆ N[v]`.
    pub domination: bool,
    /// A set is maximal iff every outside vertex sees a matched member or two unmatched members.
    pub sees_two: bool,
    pub failures: Vec<String>,
}

impl M1LemmaReport {
    pub fn all_hold(&self) -> bool {
        self.disconnected && self.twin && self.domination && self.sees_two
    }
}

const M1: Predicate = Predicate::MaxDegree(1);

fn m1_count(g: &Graph) -> u64 {
    full_scan_mask(&g.masks(), g.n(), M1).len() as u64
}

pub fn verify_m1_lemmas(g: &Graph) -> Result<M1LemmaReport> {
    let n = g.n();
    if n > crate::oracle::FULL_SCAN_LIMIT {
        return Err(Error::SizeLimit {
            what: "lemma verification",
            n,
            limit: crate::oracle::FULL_SCAN_LIMIT,
        });
    }
    let mut rep = M1LemmaReport {
        disconnected: true,
        twin: true,
        domination: true,
        sees_two: true,
        failures: Vec::new(),
    };
    let total = m1_count(g);

    for comp in g.components() {
        let inside = m1_count(&g.induced(&comp).0);
        let outside = m1_count(&g.induced(&comp.complement()).0);
        if inside * outside != total {
            rep.disconnected = false;
            rep.failures.push(format!("component {comp:?}: {inside} * {outside} != {total}"));
        }
    }

    for (u, v) in g.edges() {
        let same = g.closed_pair_neighborhood(u, u) == g.closed_pair_neighborhood(v, v);
        if same {
            let mut h = g.clone();
            h.remove_edge(u, v);
            let after = m1_count(&h);
            if total > after {
                rep.twin = false;
                rep.failures.push(format!("twins {u},{v}: {total} > {after}"));
            }
        }
    }

    let adj = g.masks();
    let maximal = full_scan_mask(&adj, n, M1);
    let closed = |v: usize| adj[v] | 1 << v;
    for &s in &maximal {
        for v in bits(s) {
            let matched = adj[v] & s != 0;
            let dominated = bits(adj[v]).any(|u| adj[u] & !closed(v) == 0);
            if !matched && dominated {
                rep.domination = false;
                rep.failures.push(format!("domination: set {s:#b}, vertex {v}"));
            }
        }
    }

    let full = (1u64 << n) - 1;
    for s in 0..=full {
        if !M1.holds_mask(&adj, s) {
            continue;
        }
        let matched = bits(s).filter(|&v| adj[v] & s != 0).fold(0u64, |m, v| m | 1 << v);
        let unmatched = s & !matched;
        let criterion = bits(full & !s).all(|w| adj[w] & matched != 0 || (adj[w] & unmatched).count_ones() >= 2);
        let is_max = maximal.binary_search(&s).is_ok();
        if criterion != is_max {
            rep.sees_two = false;
            rep.failures.push(format!("sees-two: set {s:#b}"));
        }
    }
    Ok(rep)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Example1Record {
    pub l: usize,
    pub n: usize,
    pub c: usize,
    pub count: u64,
    /// `C(n, l)`.
    pub lower_bound: f64,
    pub meets_lower_bound: bool,
}

/// Counts maximal sets with at most as many non-edges as vertices in the
/// clique-plus-independent-set construction.
pub fn verify_example1(l: usize, n: usize) -> Result<Example1Record> {
    let (g, c) = generators::example1(l, n);
    let count = count_maximal(&g, Predicate::NonEdgesAtMostSize)?;
    let lower_bound = binomial(n, l);
    Ok(Example1Record {
        l,
        n,
        c,
        count,
        lower_bound,
        meets_lower_bound: count as f64 >= lower_bound,
    })
}

/// All labeled graphs on `n <= 7` vertices, as adjacency masks.
pub fn all_graph_masks(n: usize) -> impl Iterator<Item = Vec<u64>> {
    assert!(n <= EXHAUSTIVE_LIMIT + 1);
    let pairs = pairs(n);
    (0u64..1 << pairs.len()).map(move |code| {
        let mut adj = vec![0; n];
        decode(&pairs, code, &mut adj);
        adj
    })
}

/// A vertex set's members, for messages.
pub fn describe(s: &VertexSet) -> String {
    format!("{:?}", s.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kappa_values() {
        let k = kappa(0);
        assert!((k.root - 1.839286755214161).abs() < 1e-9);
        assert!((k.shifted_root - 1.618033988749895).abs() < 1e-9);
        assert_eq!(k.table, Some(1.618));
        for d in 0..5 {
            let k = kappa(d);
            assert!((k.shifted_root - k.table.unwrap()).abs() < 1e-3, "d = {d}");
        }
        assert_eq!(kappa(7).table, None);
    }

    #[test]
    fn small_moon_moser() {
        let r = max_count_over_all_graphs(3, Predicate::IndependentSet, 0).unwrap();
        assert_eq!(r.max_count, 3);
        assert_eq!(r.argmax_total, 1);
        assert!(r.within_bound());
    }

    #[test]
    fn prefix_count() {
        // A fixed vertex plus two others: at most two maximal independent sets contain it.
        let r = max_count_over_all_graphs(2, Predicate::IndependentSet, 1).unwrap();
        assert_eq!(r.max_count, 2);
    }

    #[test]
    fn lemmas_on_k5() {
        let rep = verify_m1_lemmas(&generators::k5_union(5).unwrap()).unwrap();
        assert!(rep.all_hold(), "{:?}", rep.failures);
    }

    #[test]
    fn csv_header() {
        let r = max_count_over_all_graphs(2, Predicate::Clique, 0).unwrap();
        let csv = records_to_csv(&[r]);
        assert!(csv.starts_with("N,predicate,prefix_size,max_count,bound,argmax_graph\n"));
    }
}
