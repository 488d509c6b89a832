use std::fmt;

use serde::Serialize;

use crate::bitset::{bits, VertexSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::treewidth::tw_at_most_mask;

/// Properties of induced subgraphs `G[S]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Predicate {
    IndependentSet,
    Clique,
    /// Maximum degree at most `d`.
    MaxDegree(usize),
    /// `Plex(d)` is a (d+1)-plex: each member is non-adjacent to at most `d` other members.
    Plex(usize),
    Forest,
    TreewidthAtMost(usize),
    DegenerateAtMost(usize),
    /// Every ball of radius `radius` in `G[S]` induces treewidth at most `t`
    /// (hence so does every smaller radius).
    LocalTreewidthAtMost { t: usize, radius: usize },
    /// At most `|S|` non-edges inside `S`. Not closed under taking subsets.
    NonEdgesAtMostSize,
}

impl Predicate {
    pub fn is_hereditary(&self) -> bool {
        !matches!(self, Predicate::NonEdgesAtMostSize)
    }

    /// Evaluates the predicate on the subgraph induced by the mask `s`.
    pub(crate) fn holds_mask(&self, adj: &[u64], s: u64) -> bool {
        let deg = |v: usize| (adj[v] & s).count_ones() as usize;
        let size = s.count_ones() as usize;
        match *self {
            Predicate::IndependentSet => bits(s).all(|v| adj[v] & s == 0),
            Predicate::Clique => bits(s).all(|v| deg(v) + 1 == size),
            Predicate::MaxDegree(d) => bits(s).all(|v| deg(v) <= d),
            Predicate::Plex(d) => bits(s).all(|v| size - 1 - deg(v) <= d),
            Predicate::Forest => tw_at_most_mask(adj, s, 1),
            Predicate::TreewidthAtMost(t) => tw_at_most_mask(adj, s, t),
            Predicate::DegenerateAtMost(d) => peel(adj, s, d),
            Predicate::LocalTreewidthAtMost { t, radius } => {
                let mut checked: Vec<u64> = Vec::new();
                for v in bits(s) {
                    let ball = mask_ball(adj, s, v, radius);
                    if checked.iter().any(|&b| b & ball == ball) {
                        continue;
                    }
                    if !tw_at_most_mask(adj, ball, t) {
                        return false;
                    }
                    checked.push(ball);
                }
                true
            }
            Predicate::NonEdgesAtMostSize => {
                let edges: usize = bits(s).map(deg).sum::<usize>() / 2;
                size * size.saturating_sub(1) / 2 - edges <= size
            }
        }
    }

    /// Evaluates the predicate on `G[s]`. Treewidth-based predicates need `|s| <= 64`.
    pub fn holds(&self, g: &Graph, s: &VertexSet) -> Result<bool> {
        match *self {
            Predicate::IndependentSet => Ok(g.is_independent(s)),
            Predicate::Clique => Ok(g.is_clique(s)),
            Predicate::MaxDegree(d) => Ok(s.iter().all(|v| g.neighbors(v).intersection_len(s) <= d)),
            Predicate::Plex(d) => Ok(s.iter().all(|v| s.len() - 1 - g.neighbors(v).intersection_len(s) <= d)),
            Predicate::DegenerateAtMost(d) => Ok(g.induced(s).0.degeneracy().0 <= d),
            Predicate::Forest => Ok(g.edges_within(s) + g.components_within(s).len() == s.len()),
            Predicate::NonEdgesAtMostSize => {
                let k = s.len();
                Ok(k * k.saturating_sub(1) / 2 - g.edges_within(s) <= k)
            }
            Predicate::TreewidthAtMost(_) | Predicate::LocalTreewidthAtMost { .. } => {
                if s.len() > 64 {
                    return Err(Error::SizeLimit {
                        what: "treewidth predicate",
                        n: s.len(),
                        limit: 64,
                    });
                }
                let (h, _) = g.induced(s);
                let full = if h.n() == 64 { u64::MAX } else { (1u64 << h.n()) - 1 };
                Ok(self.holds_mask(&h.masks(), full))
            }
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicate::IndependentSet => write!(f, "independent-set"),
            Predicate::Clique => write!(f, "clique"),
            Predicate::MaxDegree(d) => write!(f, "max-degree-{d}"),
            Predicate::Plex(d) => write!(f, "{}-plex", d + 1),
            Predicate::Forest => write!(f, "forest"),
            Predicate::TreewidthAtMost(t) => write!(f, "treewidth-le-{t}"),
            Predicate::DegenerateAtMost(d) => write!(f, "degenerate-le-{d}"),
            Predicate::LocalTreewidthAtMost { t, radius } => write!(f, "local-treewidth-le-{t}-r{radius}"),
            Predicate::NonEdgesAtMostSize => write!(f, "nonedges-le-size"),
        }
    }
}

fn peel(adj: &[u64], s: u64, d: usize) -> bool {
    let mut live = s;
    loop {
        let mut changed = false;
        for v in bits(live) {
            if (adj[v] & live).count_ones() as usize <= d {
                live &= !(1 << v);
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

pub(crate) fn mask_ball(adj: &[u64], within: u64, v: usize, radius: usize) -> u64 {
    let mut ball = 1u64 << v;
    let mut frontier = ball;
    for _ in 0..radius {
        let mut next = 0;
        for x in bits(frontier) {
            next |= adj[x];
        }
        next &= within & !ball;
        if next == 0 {
            break;
        }
        ball |= next;
        frontier = next;
    }
    ball
}
