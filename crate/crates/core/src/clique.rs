//! Maximal cliques of c-closed graphs.
//!
//! Vertices are processed in a fixed order `v1, ..., vn`; the maximal cliques
//! of `G_i = G[v1..vi]` are derived from those of `G_{i-1}`. A maximal clique
//! `K` of `G_i` is either
//!
//! * inherited: `K` or `K - vi` is a maximal clique of `G_{i-1}`, or
//! * new: `K - vi` is not maximal in `G_{i-1}`, so some `u` non-adjacent to
//!   `vi` extends it and `K - vi` is a maximal clique of
//!   `G_{i-1}[N(vi) ∩ N(u)]`, a set of at most `c - 1` vertices.
//!
//! New cliques are found by a pivoting Bron–Kerbosch search inside each
//! common neighbourhood, so at most `(i-1) 3^((c-1)/3)` candidates arise at
//! level `i`.

use std::collections::BTreeSet;

use crate::bitset::VertexSet;
use crate::closure::closure_number;
use crate::graph::Graph;
use crate::report::EnumerationReport;

/// `n^2 3^((c-1)/3)`.
pub fn clique_count_bound(n: usize, c: usize) -> f64 {
    (n * n) as f64 * 3f64.powf(c.saturating_sub(1) as f64 / 3.0)
}

/// Descending degree, ties by index.
pub fn vertex_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

/// Pivoting Bron–Kerbosch restricted to `p`, tracking `ext`, the vertices
/// outside the search space adjacent to all of `r`. Leaves report whether `ext`
/// ended empty.
fn kernel_search(g: &Graph, r: &VertexSet, mut p: VertexSet, mut x: VertexSet, ext: &VertexSet, out: &mut Vec<(VertexSet, bool)>) {
    if p.is_empty() && x.is_empty() {
        out.push((r.clone(), ext.is_empty()));
        return;
    }
    let pivot = (&p | &x).iter().max_by_key(|&u| g.neighbors(u).intersection_len(&p)).unwrap();
    for v in &(&p - g.neighbors(pivot)) {
        let nv = g.neighbors(v);
        kernel_search(g, &r.with(v), &p & nv, &x & nv, &(ext & nv), out);
        p.remove(v);
        x.insert(v);
    }
}

/// Enumerates all maximal cliques.
///
/// `candidates_generated` counts the cliques produced by kernel searches plus
/// the single starting clique (none for the empty graph); inherited cliques
/// are not recounted. Kernel candidates whose extension set is non-empty count
/// as maximality rejections. The reported bound is `n^2 3^((c-1)/3) + n`.
pub fn enumerate_max_cliques(g: &Graph) -> EnumerationReport {
    let n = g.n();
    let c = closure_number(g).c;
    let mut report = EnumerationReport {
        results: Vec::new(),
        candidates_generated: 0,
        duplicates_removed: 0,
        maximality_rejections: 0,
        predicate_rejections: 0,
        closure: c,
        bound_value: clique_count_bound(n, c) + n as f64,
    };
    if n == 0 {
        report.results.push(VertexSet::new(0));
        return report;
    }
    let order = vertex_order(g);
    let mut processed = VertexSet::new(n);
    let mut current: BTreeSet<VertexSet> = BTreeSet::new();
    let mut leaves = Vec::new();
    for &v in &order {
        if processed.is_empty() {
            current.insert(VertexSet::from_vertices(n, [v]));
            report.candidates_generated += 1;
            processed.insert(v);
            continue;
        }
        let nv = g.neighbors(v) & &processed;
        let mut next = BTreeSet::new();
        for k in current {
            if k.is_subset(&nv) {
                next.insert(k.with(v));
            } else {
                next.insert(k);
            }
        }
        for u in &(&processed - g.neighbors(v)) {
            let kernel = &nv & g.neighbors(u);
            leaves.clear();
            kernel_search(g, &VertexSet::new(n), kernel, VertexSet::new(n), &nv, &mut leaves);
            for (q, maximal) in leaves.drain(..) {
                report.candidates_generated += 1;
                if !maximal {
                    report.maximality_rejections += 1;
                } else if !next.insert(q.with(v)) {
                    report.duplicates_removed += 1;
                }
            }
        }
        current = next;
        processed.insert(v);
    }
    report.results = current.into_iter().collect();
    report
}

/// Maximal independent sets, as maximal cliques of the complement. The
/// reported closure is that of the complement.
pub fn enumerate_max_independent_sets(g: &Graph) -> EnumerationReport {
    enumerate_max_cliques(&g.complement())
}

/// Maximal independent sets of `g[within]`, in the vertex labels of `g`.
pub fn independent_sets_within(g: &Graph, within: &VertexSet) -> Vec<VertexSet> {
    let (h, map) = g.induced(within);
    let mut out: Vec<VertexSet> = enumerate_max_independent_sets(&h)
        .results
        .into_iter()
        .map(|s| VertexSet::from_vertices(g.n(), s.iter().map(|i| map[i])))
        .collect();
    out.sort();
    out
}
