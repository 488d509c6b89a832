//! Exact treewidth for small graphs.
//!
//! Treewidth is computed over elimination orderings: eliminating `v` after the
//! set `S` creates a bag `{v} ∪ Q(S, v)`, where `Q(S, v)` is the set of
//! uneliminated vertices reachable from `v` through `S`. The decision
//! procedure searches eliminated sets depth first, memoising failures, and
//! eliminates simplicial vertices without branching.

use std::collections::HashSet;

use serde::Serialize;

use crate::bitset::{bits, VertexSet};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_LIMIT: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeDecomposition {
    /// Adjacency lists of the decomposition tree, indexed like `bags`.
    pub tree: Vec<Vec<usize>>,
    pub bags: Vec<VertexSet>,
    pub width: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DecompositionError {
    #[error("tree and bag counts differ")]
    ShapeMismatch,
    #[error("the decomposition tree is not a tree")]
    NotATree,
    #[error("vertex {0} is in no bag")]
    VertexUncovered(usize),
    #[error("edge {{{0}, {1}}} is in no bag")]
    EdgeUncovered(usize, usize),
    #[error("bags containing vertex {0} are not connected")]
    Disconnected(usize),
    #[error("stated width {stated} differs from the largest bag size minus one ({actual})")]
    WrongWidth { stated: usize, actual: usize },
}

fn popcount(x: u64) -> usize {
    x.count_ones() as usize
}

fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Uneliminated vertices reachable from `v` through eliminated ones.
pub(crate) fn q_set(adj: &[u64], verts: u64, elim: u64, v: usize) -> u64 {
    let mut reach = adj[v] & verts;
    let mut seen = bit(v);
    let mut frontier = reach & elim;
    while frontier != 0 {
        seen |= frontier;
        for x in bits(frontier) {
            reach |= adj[x] & verts;
        }
        frontier = reach & elim & !seen;
    }
    reach & !elim & !bit(v)
}

fn is_forest(adj: &[u64], verts: u64) -> bool {
    let mut live = verts;
    loop {
        let mut changed = false;
        for v in bits(live) {
            if popcount(adj[v] & live) <= 1 {
                live &= !bit(v);
                changed = true;
            }
        }
        if live == 0 {
            return true;
        }
        if !changed {
            return false;
        }
    }
}

/// Series-parallel reduction: a graph has treewidth at most 2 exactly when
/// repeatedly deleting vertices of degree at most 1 and suppressing vertices
/// of degree 2 empties it.
fn is_partial_two_tree(adj: &[u64], verts: u64) -> bool {
    let mut g = [0u64; 64];
    for v in bits(verts) {
        g[v] = adj[v] & verts;
    }
    let mut live = verts;
    loop {
        let mut changed = false;
        for v in bits(live) {
            let nb = g[v] & live;
            match popcount(nb) {
                0 | 1 => {}
                2 => {
                    let a = nb.trailing_zeros() as usize;
                    let b = 63 - nb.leading_zeros() as usize;
                    g[a] |= bit(b);
                    g[b] |= bit(a);
                }
                _ => continue,
            }
            live &= !bit(v);
            changed = true;
        }
        if live == 0 {
            return true;
        }
        if !changed {
            return false;
        }
    }
}

struct Decider<'a> {
    adj: &'a [u64],
    verts: u64,
    k: usize,
    failed: HashSet<u64>,
    order: Vec<usize>,
}

impl Decider<'_> {
    fn clique_in_elimination_graph(&self, elim: u64, q: u64) -> bool {
        for x in bits(q) {
            let rest = q & !bit(x) & !((bit(x) << 1).wrapping_sub(1));
            if rest == 0 {
                continue;
            }
            if q_set(self.adj, self.verts, elim, x) & rest != rest {
                return false;
            }
        }
        true
    }

    fn solve(&mut self, elim: u64) -> bool {
        let rem = self.verts & !elim;
        if popcount(rem) <= self.k + 1 {
            self.order.extend(bits(rem));
            return true;
        }
        if self.failed.contains(&elim) {
            return false;
        }
        let mut cands = Vec::new();
        for v in bits(rem) {
            let q = q_set(self.adj, self.verts, elim, v);
            if popcount(q) <= self.k {
                cands.push((v, q));
            }
        }
        if let Some(&(v, _)) = cands.iter().find(|(_, q)| self.clique_in_elimination_graph(elim, *q)) {
            self.order.push(v);
            if self.solve(elim | bit(v)) {
                return true;
            }
            self.order.pop();
            self.failed.insert(elim);
            return false;
        }
        for (v, _) in cands {
            self.order.push(v);
            if self.solve(elim | bit(v)) {
                return true;
            }
            self.order.pop();
        }
        self.failed.insert(elim);
        false
    }
}

/// An elimination ordering of width at most `k`, if one exists.
fn order_at_most(adj: &[u64], verts: u64, k: usize) -> Option<Vec<usize>> {
    let mut d = Decider {
        adj,
        verts,
        k,
        failed: HashSet::new(),
        order: Vec::new(),
    };
    d.solve(0).then_some(d.order)
}

/// Whether the subgraph induced by `verts` has treewidth at most `k`.
pub(crate) fn tw_at_most_mask(adj: &[u64], verts: u64, k: usize) -> bool {
    match k {
        0 => bits(verts).all(|v| adj[v] & verts == 0),
        1 => is_forest(adj, verts),
        2 => is_partial_two_tree(adj, verts),
        _ => {
            if popcount(verts) <= k + 1 {
                return true;
            }
            if min_degree_lower_bound(adj, verts) > k {
                return false;
            }
            order_at_most(adj, verts, k).is_some()
        }
    }
}

/// Contraction degeneracy style lower bound: repeatedly contract a vertex of
/// minimum degree into its minimum-degree neighbour.
fn min_degree_lower_bound(adj: &[u64], verts: u64) -> usize {
    let mut g = [0u64; 64];
    for v in bits(verts) {
        g[v] = adj[v] & verts;
    }
    let mut live = verts;
    let mut lb = 0;
    while popcount(live) > 1 {
        let v = bits(live).min_by_key(|&v| popcount(g[v] & live)).unwrap();
        let nb = g[v] & live;
        lb = lb.max(popcount(nb));
        live &= !bit(v);
        if nb == 0 {
            continue;
        }
        let u = bits(nb).min_by_key(|&u| popcount(g[u] & live)).unwrap();
        for w in bits(nb & !bit(u)) {
            g[u] |= bit(w);
            g[w] |= bit(u);
        }
    }
    lb
}

/// Greedy min-fill ordering and its width.
fn min_fill_order(adj: &[u64], verts: u64) -> (Vec<usize>, usize) {
    let mut elim = 0u64;
    let mut order = Vec::new();
    let mut width = 0;
    while elim != verts {
        let best = bits(verts & !elim)
            .map(|v| {
                let q = q_set(adj, verts, elim, v);
                let mut fill = 0;
                for x in bits(q) {
                    fill += popcount(q & !q_set(adj, verts, elim, x) & !bit(x));
                }
                (fill, popcount(q), v, q)
            })
            .min_by_key(|&(f, d, v, _)| (f, d, v))
            .unwrap();
        width = width.max(popcount(best.3));
        order.push(best.2);
        elim |= bit(best.2);
    }
    (order, width)
}

/// Width of an elimination ordering of the subgraph induced by `verts`.
fn ordering_width(adj: &[u64], verts: u64, order: &[usize]) -> usize {
    let mut elim = 0u64;
    let mut width = 0;
    for &v in order {
        width = width.max(popcount(q_set(adj, verts, elim, v)));
        elim |= bit(v);
    }
    width
}

/// Width of the elimination ordering `order` of `g` (n <= 64).
pub fn elimination_width(g: &Graph, order: &[usize]) -> usize {
    assert!(g.n() <= 64, "elimination_width needs n <= 64");
    let verts = if g.n() == 64 { u64::MAX } else { bit(g.n()) - 1 };
    ordering_width(&g.masks(), verts, order)
}

pub(crate) fn exact_order_mask(adj: &[u64], verts: u64) -> (Vec<usize>, usize) {
    let (greedy, ub) = min_fill_order(adj, verts);
    let lb = min_degree_lower_bound(adj, verts);
    for k in lb..ub {
        if let Some(order) = order_at_most(adj, verts, k) {
            return (order, k);
        }
    }
    (greedy, ub)
}

/// Builds the tree decomposition of an elimination ordering.
pub fn decomposition_from_order(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.n();
    assert!(n <= 64, "decomposition_from_order needs n <= 64");
    let adj = g.masks();
    let verts = if n == 64 { u64::MAX } else { bit(n) - 1 };
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut bags = Vec::with_capacity(n);
    let mut parent = Vec::with_capacity(n);
    let mut elim = 0u64;
    for &v in order {
        let q = q_set(&adj, verts, elim, v);
        bags.push(VertexSet::from_mask(n, q | bit(v)));
        parent.push(bits(q).min_by_key(|&w| pos[w]).map(|w| pos[w]));
        elim |= bit(v);
    }
    let mut tree = vec![Vec::new(); bags.len()];
    let mut prev_root: Option<usize> = None;
    for (i, p) in parent.iter().enumerate() {
        let p = match p {
            Some(p) => Some(*p),
            None => prev_root.replace(i),
        };
        if let Some(p) = p {
            tree[i].push(p);
            tree[p].push(i);
        }
    }
    if bags.is_empty() {
        bags.push(VertexSet::new(n));
        tree.push(Vec::new());
    }
    let width = bags.iter().map(|b| b.len()).max().unwrap_or(0).saturating_sub(1);
    TreeDecomposition { tree, bags, width }
}

/// Exact treewidth with an optimal decomposition. Refuses graphs above `limit` vertices.
pub fn treewidth_exact_with_limit(g: &Graph, limit: usize) -> Result<TreeDecomposition> {
    let limit = limit.min(64);
    if g.n() > limit {
        return Err(Error::SizeLimit {
            what: "exact treewidth",
            n: g.n(),
            limit,
        });
    }
    let adj = g.masks();
    let verts = if g.n() == 64 { u64::MAX } else { bit(g.n()) - 1 };
    let (order, _) = exact_order_mask(&adj, verts);
    Ok(decomposition_from_order(g, &order))
}

pub fn treewidth_exact(g: &Graph) -> Result<TreeDecomposition> {
    treewidth_exact_with_limit(g, DEFAULT_LIMIT)
}

pub fn treewidth(g: &Graph) -> Result<usize> {
    Ok(treewidth_exact(g)?.width)
}

pub fn treewidth_at_most(g: &Graph, k: usize) -> Result<bool> {
    if g.n() > 64 {
        return Err(Error::SizeLimit {
            what: "treewidth decision",
            n: g.n(),
            limit: 64,
        });
    }
    let verts = if g.n() == 64 { u64::MAX } else { bit(g.n()) - 1 };
    Ok(tw_at_most_mask(&g.masks(), verts, k))
}

pub fn validate_decomposition(g: &Graph, td: &TreeDecomposition) -> std::result::Result<(), DecompositionError> {
    let t = td.bags.len();
    if td.tree.len() != t || t == 0 {
        return Err(DecompositionError::ShapeMismatch);
    }
    let mut degree_sum = 0;
    for (i, nb) in td.tree.iter().enumerate() {
        for &j in nb {
            if j >= t || j == i || !td.tree[j].contains(&i) {
                return Err(DecompositionError::NotATree);
            }
        }
        degree_sum += nb.len();
    }
    let reach = |allowed: &dyn Fn(usize) -> bool, start: usize| {
        let mut seen = vec![false; t];
        let mut stack = vec![start];
        seen[start] = true;
        let mut count = 1;
        while let Some(i) = stack.pop() {
            for &j in &td.tree[i] {
                if !seen[j] && allowed(j) {
                    seen[j] = true;
                    count += 1;
                    stack.push(j);
                }
            }
        }
        count
    };
    if degree_sum != 2 * (t - 1) || reach(&|_| true, 0) != t {
        return Err(DecompositionError::NotATree);
    }
    for v in 0..g.n() {
        let holders: Vec<usize> = (0..t).filter(|&i| td.bags[i].contains(v)).collect();
        let Some(&start) = holders.first() else {
            return Err(DecompositionError::VertexUncovered(v));
        };
        if reach(&|j| td.bags[j].contains(v), start) != holders.len() {
            return Err(DecompositionError::Disconnected(v));
        }
    }
    for (u, v) in g.edges() {
        if !td.bags.iter().any(|b| b.contains(u) && b.contains(v)) {
            return Err(DecompositionError::EdgeUncovered(u, v));
        }
    }
    let actual = td.bags.iter().map(|b| b.len()).max().unwrap_or(0).saturating_sub(1);
    if actual != td.width {
        return Err(DecompositionError::WrongWidth { stated: td.width, actual });
    }
    Ok(())
}

/// Local treewidth values `ltw(r) = max_v tw(G[N_r(v)])` for `r = 1..=r_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalTWProfile {
    pub values: Vec<(usize, usize)>,
}

impl LocalTWProfile {
    /// The cap `f(r) = t` for `r = 1..=r_max`.
    pub fn uniform(t: usize, r_max: usize) -> Self {
        LocalTWProfile {
            values: (1..=r_max).map(|r| (r, t)).collect(),
        }
    }

    /// The common value when every radius has the same cap.
    pub fn uniform_value(&self) -> Option<usize> {
        let (_, t) = *self.values.first()?;
        self.values.iter().all(|&(_, v)| v == t).then_some(t)
    }

    pub fn max_radius(&self) -> usize {
        self.values.iter().map(|&(r, _)| r).max().unwrap_or(0)
    }
}

pub fn local_treewidth(g: &Graph, r: usize) -> Result<usize> {
    let mut best = 0;
    for v in 0..g.n() {
        let (h, _) = g.induced(&g.ball(v, r));
        best = best.max(treewidth(&h)?);
    }
    Ok(best)
}

pub fn local_treewidth_profile(g: &Graph, r_max: usize) -> Result<LocalTWProfile> {
    let values = (1..=r_max).map(|r| Ok((r, local_treewidth(g, r)?))).collect::<Result<_>>()?;
    Ok(LocalTWProfile { values })
}
