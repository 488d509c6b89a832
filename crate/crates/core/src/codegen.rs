//! Maximal sets of bounded degeneracy, and maximal forests, in the complement
//! of a c-closed graph.
//!
//! A d-degenerate graph has a vertex cover of size at most `4d` or a good
//! (4d, 2d)-partition. Sets of the second kind are found by the same kernel
//! search as for treewidth, anchored at `2d` disjoint edges. Sets of the first
//! kind are found per head `A`: the tails lie in one maximal independent set
//! `B` of `H - A`, and the set is maximal among d-degenerate sets between `A`
//! and `A ∪ B`. Listing only the star with all of `B` as tails would miss sets
//! whose tails cannot all be kept.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::clique::independent_sets_within;
use crate::closure::closure_number;
use crate::combinatorics::FOREST_BASE;
use crate::cotw::{partition_candidates, MaximalityCheck};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::enumerate_maximal_within;
use crate::predicate::Predicate;
use crate::report::{Collector, EnumerationReport};
use crate::sparse::{detect_good_partition, find_kstar, GoodPartition, KStar};
use crate::util::for_each_subset_up_to;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegenConfig {
    pub d: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DegenBound {
    pub value: f64,
    /// False when the base of the exponential term is the d = 1 constant
    /// standing in for an unknown one.
    pub established: bool,
}

/// `n^(8d) γ^(2dc) + 2 n^(4d+1) 3^((c-1)/3)` with `γ = 1.8638`.
pub fn degen_count_bounds(n: usize, c: usize, d: usize) -> DegenBound {
    let nf = n as f64;
    let partition = nf.powi(8 * d as i32) * FOREST_BASE.powi((2 * d * c) as i32);
    let stars = 2.0 * nf.powi(4 * d as i32 + 1) * 3f64.powf(c.saturating_sub(1) as f64 / 3.0);
    DegenBound {
        value: partition + stars,
        established: d <= 1,
    }
}

/// `3 n^3 (c-1) 1.8638^(2c-3)`, and `n^3` for `c = 1`.
pub fn forest_count_bound(n: usize, c: usize) -> f64 {
    let n3 = (n as f64).powi(3);
    if c <= 1 {
        return n3;
    }
    3.0 * n3 * (c - 1) as f64 * FOREST_BASE.powi(2 * c as i32 - 3)
}

/// Tuples of `k` pairwise disjoint edges in increasing order.
fn disjoint_edge_tuples(h: &Graph, k: usize) -> Vec<Vec<(usize, usize)>> {
    let edges: Vec<_> = h.edges().collect();
    let mut out = Vec::new();
    fn rec(edges: &[(usize, usize)], k: usize, start: usize, used: &mut VertexSet, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..edges.len() {
            let (a, b) = edges[i];
            if used.contains(a) || used.contains(b) {
                continue;
            }
            used.insert(a);
            used.insert(b);
            cur.push((a, b));
            rec(edges, k, i + 1, used, cur, out);
            cur.pop();
            used.remove(a);
            used.remove(b);
        }
    }
    rec(&edges, k, 0, &mut h.empty_set(), &mut Vec::new(), &mut out);
    out
}

fn check_size(h: &Graph) -> Result<()> {
    if h.n() > 64 {
        return Err(Error::SizeLimit {
            what: "maximality testing",
            n: h.n(),
            limit: 64,
        });
    }
    Ok(())
}

/// Maximal sets `S` of `g` whose complement-induced subgraph is d-degenerate.
pub fn enumerate_bounded_codegen(g: &Graph, cfg: &DegenConfig) -> Result<EnumerationReport> {
    let d = cfg.d;
    if d == 0 {
        return Err(Error::InvalidParameter("degeneracy cap must be at least 1".into()));
    }
    let h = g.complement();
    check_size(&h)?;
    let n = h.n();
    let c = closure_number(g).c;
    let keep = Predicate::DegenerateAtMost(d);
    let check = MaximalityCheck::new(&h, keep);
    let mut col = Collector::default();
    let all: Vec<usize> = (0..n).collect();
    let mut heads = Vec::new();
    for_each_subset_up_to::<()>(&all, 4 * d, &mut |a| {
        let a = VertexSet::from_vertices(n, a.iter().copied());
        if keep.holds(&h, &a).unwrap_or(false) {
            heads.push(a);
        }
        Ok(())
    })
    .unwrap();
    for a in &heads {
        for b in independent_sets_within(&h, &a.complement()) {
            for s in enumerate_maximal_within(&h, a, &b, keep)? {
                col.consider(s, |s| Ok(check.verdict(s)))?;
            }
        }
    }
    let tuples = disjoint_edge_tuples(&h, 2 * d);
    for s in partition_candidates(&h, &tuples, 4 * d, keep, c)? {
        col.consider(s, |s| Ok(check.verdict(s)))?;
    }
    Ok(col.finish(c, degen_count_bounds(n, c, d).value))
}

/// How a d-degenerate set is covered by the structural dichotomy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Certificate {
    Star(KStar),
    Partition(GoodPartition),
}

/// Certifies that `h[s]` is a 4d-star or has a good (4d, 2d)-partition.
/// Returned objects are in the local numbering of `h[s]`.
pub fn dichotomy_certificate(h: &Graph, s: &VertexSet, d: usize) -> Result<Option<Certificate>> {
    let (sub, _) = h.induced(s);
    if let Some(star) = find_kstar(&sub, 4 * d, false) {
        return Ok(Some(Certificate::Star(star)));
    }
    Ok(detect_good_partition(&sub, 4 * d, 2 * d)?.map(Certificate::Partition))
}

/// Maximal sets `S` of `g` whose complement-induced subgraph is a forest.
///
/// A maximal forest is independent, a star plus isolated vertices, has two
/// non-trivial components, or contains an induced path on four vertices. In
/// the last two cases every other vertex misses one of two fixed edges, which
/// confines it to at most `2(c - 1)` candidates.
pub fn enumerate_max_coforests(g: &Graph) -> Result<EnumerationReport> {
    let h = g.complement();
    check_size(&h)?;
    let n = h.n();
    let c = closure_number(g).c;
    let keep = Predicate::Forest;
    let check = MaximalityCheck::new(&h, keep);
    let mut col = Collector::default();
    let mut offer = |s: VertexSet| col.consider(s, |s| Ok(check.verdict(s)));
    for b in independent_sets_within(&h, &h.vertices()) {
        offer(b)?;
    }
    for v in 0..n {
        let rest = h.vertices().without(v);
        for b in independent_sets_within(&h, &rest) {
            offer(b.with(v))?;
        }
    }
    for (a, b) in h.edges() {
        let far = h.closed_pair_neighborhood(a, b).complement();
        for (x, y) in h.edges() {
            if (x, y) < (a, b) || !far.contains(x) || !far.contains(y) {
                continue;
            }
            let pool = &far | &h.closed_pair_neighborhood(x, y).complement();
            let prefix = VertexSet::from_vertices(n, [a, b, x, y]);
            for s in enumerate_maximal_within(&h, &prefix, &pool, keep)? {
                offer(s)?;
            }
        }
    }
    for b in 0..n {
        let nb = h.neighbors(b).to_vec();
        for &a in &nb {
            for &cv in &nb {
                if a == cv || h.has_edge(a, cv) {
                    continue;
                }
                let near_ab = h.closed_pair_neighborhood(a, b);
                for dv in h.neighbors(cv) {
                    if near_ab.contains(dv) || dv < a {
                        continue;
                    }
                    let mut pool = near_ab.complement();
                    pool.union_with(&h.closed_pair_neighborhood(cv, dv).complement());
                    pool.insert(b);
                    pool.insert(cv);
                    let prefix = VertexSet::from_vertices(n, [a, b, cv, dv]);
                    for s in enumerate_maximal_within(&h, &prefix, &pool, keep)? {
                        offer(s)?;
                    }
                }
            }
        }
    }
    Ok(col.finish(c, forest_count_bound(n, c)))
}
