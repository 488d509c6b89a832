//! Stars with small heads and good partitions.
//!
//! A k-star is a graph with a vertex cover `A` (the head) of size at most `k`;
//! the remaining vertices are its tails. It is proper when every tail is
//! adjacent to at most `k - 1` head vertices.
//!
//! A good (l, k)-partition of `H` consists of `k` edges `e1..ek` and a
//! partition `A0, A1, ..., Ak` of the remaining vertices with `|A0| <= l` and
//! no vertex of `Ai` adjacent to `ei`. Given the edges, such a partition exists
//! exactly when at most `l` vertices are adjacent to all `k` edges.

use std::collections::HashMap;

use serde::Serialize;

use crate::bitset::{bits, VertexSet};
use crate::clique::independent_sets_within;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{enumerate_maximal_within, pivot_cliques};
use crate::predicate::Predicate;
use crate::util::for_each_subset_up_to;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KStar {
    pub head: VertexSet,
    pub tails: VertexSet,
    pub proper: bool,
}

impl KStar {
    pub fn vertices(&self) -> VertexSet {
        &self.head | &self.tails
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoodPartition {
    pub edges: Vec<(usize, usize)>,
    /// `parts[0]` is `A0`; `parts[i]` avoids the neighbourhood of `edges[i - 1]`.
    pub parts: Vec<VertexSet>,
}

/// Lists the maximal independent sets of an induced subgraph.
pub trait MisEnumerator {
    fn maximal_independent_sets(&self, g: &Graph, within: &VertexSet) -> Vec<VertexSet>;
}

/// Maximal independent sets via the clique enumerator on the complement.
pub struct ComplementCliques;

impl MisEnumerator for ComplementCliques {
    fn maximal_independent_sets(&self, g: &Graph, within: &VertexSet) -> Vec<VertexSet> {
        independent_sets_within(g, within)
    }
}

/// Maximal independent sets via plain pivoting search, for at most 40 vertices.
pub struct PivotSearch;

impl MisEnumerator for PivotSearch {
    fn maximal_independent_sets(&self, g: &Graph, within: &VertexSet) -> Vec<VertexSet> {
        let (h, map) = g.induced(within);
        pivot_cliques(&h.complement())
            .expect("pivot search limited to 40 vertices")
            .into_iter()
            .map(|s| VertexSet::from_vertices(g.n(), s.iter().map(|i| map[i])))
            .collect()
    }
}

/// Vertices outside `e` adjacent to an endpoint of `e`.
pub fn edge_neighborhood(g: &Graph, (a, b): (usize, usize)) -> VertexSet {
    let mut s = g.neighbors(a) | g.neighbors(b);
    s.remove(a);
    s.remove(b);
    s
}

/// Proper k-stars with maximal sets of tails: for every head `A` with
/// `|A| < k` the tails range over maximal independent sets of `g - A`; for
/// `|A| = k` vertices adjacent to all of `A` are excluded first.
pub fn enumerate_proper_kstars(g: &Graph, k: usize, mis: &dyn MisEnumerator) -> Vec<KStar> {
    let mut out = Vec::new();
    let all: Vec<usize> = (0..g.n()).collect();
    for_each_subset_up_to::<()>(&all, k, &mut |head| {
        let head = VertexSet::from_vertices(g.n(), head.iter().copied());
        let mut rest = head.complement();
        if head.len() == k && k > 0 {
            let mut x = rest.clone();
            for a in &head {
                x.intersect_with(g.neighbors(a));
            }
            rest.difference_with(&x);
        }
        for tails in mis.maximal_independent_sets(g, &rest) {
            out.push(KStar {
                head: head.clone(),
                tails,
                proper: true,
            });
        }
        Ok(())
    })
    .unwrap();
    out
}

/// Finds a head of size at most `k` covering all edges of `h`; with `proper`,
/// also requires every tail to see at most `k - 1` head vertices.
pub fn find_kstar(h: &Graph, k: usize, proper: bool) -> Option<KStar> {
    let all: Vec<usize> = (0..h.n()).collect();
    let mut found = None;
    let _ = for_each_subset_up_to(&all, k, &mut |head| {
        let head = VertexSet::from_vertices(h.n(), head.iter().copied());
        let tails = head.complement();
        if !h.is_independent(&tails) {
            return Ok(());
        }
        let is_proper = head.len() < k || tails.iter().all(|b| h.neighbors(b).intersection_len(&head) < k);
        if proper && !is_proper {
            return Ok(());
        }
        found = Some(KStar {
            head,
            tails,
            proper: is_proper,
        });
        Err(())
    });
    found
}

/// Maximum matching by memoised search; graphs up to 64 vertices.
pub fn maximum_matching(h: &Graph) -> Result<Vec<(usize, usize)>> {
    if h.n() > 64 {
        return Err(Error::SizeLimit {
            what: "maximum matching",
            n: h.n(),
            limit: 64,
        });
    }
    let adj = h.masks();
    fn best(adj: &[u64], rem: u64, memo: &mut HashMap<u64, usize>) -> usize {
        let rem = bits(rem).filter(|&v| adj[v] & rem != 0).fold(0u64, |m, v| m | 1 << v);
        if rem == 0 {
            return 0;
        }
        if let Some(&b) = memo.get(&rem) {
            return b;
        }
        let v = rem.trailing_zeros() as usize;
        let mut b = best(adj, rem & !(1 << v), memo);
        for u in bits(adj[v] & rem) {
            b = b.max(1 + best(adj, rem & !(1 << v) & !(1 << u), memo));
        }
        memo.insert(rem, b);
        b
    }
    let mut memo = HashMap::new();
    let full = if h.n() == 64 { u64::MAX } else { (1u64 << h.n()) - 1 };
    let mut rem = full;
    let mut out = Vec::new();
    let mut target = best(&adj, rem, &mut memo);
    while target > 0 {
        let live = bits(rem).filter(|&v| adj[v] & rem != 0).fold(0u64, |m, v| m | 1 << v);
        let v = live.trailing_zeros() as usize;
        if best(&adj, rem & !(1 << v), &mut memo) == target {
            rem &= !(1 << v);
            continue;
        }
        let u = bits(adj[v] & rem)
            .find(|&u| 1 + best(&adj, rem & !(1 << v) & !(1 << u), &mut memo) == target)
            .unwrap();
        out.push((v, u));
        rem &= !(1 << v) & !(1 << u);
        target -= 1;
    }
    Ok(out)
}

/// The good partition for a given edge tuple, if at most `l` vertices are
/// adjacent to all edges. Other vertices go to the least index they avoid.
pub fn partition_for_edges(h: &Graph, edges: &[(usize, usize)], l: usize) -> Option<GoodPartition> {
    let mut rest = h.vertices();
    for &(a, b) in edges {
        rest.remove(a);
        rest.remove(b);
    }
    let nbhs: Vec<VertexSet> = edges.iter().map(|&e| edge_neighborhood(h, e)).collect();
    let mut common = rest.clone();
    for nb in &nbhs {
        common.intersect_with(nb);
    }
    if common.len() > l {
        return None;
    }
    let mut parts = vec![h.empty_set(); edges.len() + 1];
    for v in &rest {
        let i = nbhs.iter().position(|nb| !nb.contains(v)).map_or(0, |i| i + 1);
        parts[i].insert(v);
    }
    Some(GoodPartition {
        edges: edges.to_vec(),
        parts,
    })
}

/// Searches for a good (l, k)-partition of `h`: first edge tuples drawn from a
/// maximum matching, then all tuples of `k` distinct edges.
pub fn detect_good_partition(h: &Graph, l: usize, k: usize) -> Result<Option<GoodPartition>> {
    let matching = maximum_matching(h)?;
    let mut found = None;
    if matching.len() >= k {
        let idx: Vec<usize> = (0..matching.len()).collect();
        let _ = for_each_subset_up_to(&idx, k, &mut |pick| {
            if pick.len() == k {
                let edges: Vec<_> = pick.iter().map(|&i| matching[i]).collect();
                if let Some(p) = partition_for_edges(h, &edges, l) {
                    found = Some(p);
                    return Err(());
                }
            }
            Ok(())
        });
        if found.is_some() {
            return Ok(found);
        }
    }
    let edges: Vec<(usize, usize)> = h.edges().collect();
    let idx: Vec<usize> = (0..edges.len()).collect();
    let _ = for_each_subset_up_to(&idx, k, &mut |pick| {
        if pick.len() == k {
            let tuple: Vec<_> = pick.iter().map(|&i| edges[i]).collect();
            if let Some(p) = partition_for_edges(h, &tuple, l) {
                found = Some(p);
                return Err(());
            }
        }
        Ok(())
    });
    Ok(found)
}

/// Anchors of a good partition: the edges and the set `A0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionAnchor {
    pub edges: Vec<(usize, usize)>,
    pub a0: VertexSet,
    /// Upper bound on `|A0|`.
    pub l: usize,
}

const FREE_LIMIT: usize = 24;

impl PartitionAnchor {
    fn validate(&self, g: &Graph) -> Result<()> {
        for &(u, v) in &self.edges {
            if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
                return Err(Error::NotAnEdge { u, v });
            }
        }
        if self.a0.len() > self.l {
            return Err(Error::InvalidParameter(format!("|A0| = {} exceeds l = {}", self.a0.len(), self.l)));
        }
        Ok(())
    }

    /// `A0` together with the edge endpoints.
    pub fn prefix(&self) -> VertexSet {
        let mut s = self.a0.clone();
        for &(a, b) in &self.edges {
            s.insert(a);
            s.insert(b);
        }
        s
    }

    /// Vertices that may join some part other than `A0`: those outside the
    /// prefix and non-adjacent to at least one anchor edge.
    pub fn free(&self, g: &Graph) -> VertexSet {
        let prefix = self.prefix();
        let rest = prefix.complement();
        let mut free = g.empty_set();
        for &e in &self.edges {
            free.union_with(&(&rest - &edge_neighborhood(g, e)));
        }
        free
    }
}

/// All sets `A0 ∪ edges ∪ X`, `X` a subset of the free vertices, that satisfy
/// `keep`. For hereditary `keep` the search stops below failing sets.
pub fn enumerate_good_partition_sets(g: &Graph, anchor: &PartitionAnchor, keep: Predicate) -> Result<Vec<VertexSet>> {
    anchor.validate(g)?;
    let prefix = anchor.prefix();
    let free = anchor.free(g).to_vec();
    if free.len() > FREE_LIMIT {
        return Err(Error::SizeLimit {
            what: "good-partition free vertices",
            n: free.len(),
            limit: FREE_LIMIT,
        });
    }
    let mut out = Vec::new();
    fn walk(g: &Graph, keep: Predicate, free: &[usize], s: &mut VertexSet, start: usize, out: &mut Vec<VertexSet>) -> Result<()> {
        let ok = keep.holds(g, s)?;
        if ok {
            out.push(s.clone());
        } else if keep.is_hereditary() {
            return Ok(());
        }
        for i in start..free.len() {
            s.insert(free[i]);
            walk(g, keep, free, s, i + 1, out)?;
            s.remove(free[i]);
        }
        Ok(())
    }
    let mut s = prefix;
    walk(g, keep, &free, &mut s, 0, &mut out)?;
    out.sort();
    Ok(out)
}

/// Sets in the anchor's family that are maximal inside `prefix ∪ free`.
pub fn maximal_good_partition_sets(g: &Graph, anchor: &PartitionAnchor, keep: Predicate) -> Result<Vec<VertexSet>> {
    anchor.validate(g)?;
    enumerate_maximal_within(g, &anchor.prefix(), &anchor.free(g), keep)
}
