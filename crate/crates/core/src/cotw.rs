//! Maximal sets of bounded treewidth in the complement of a c-closed graph.
//!
//! Work happens in the complement `H`. A maximal set `S` with
//! `tw(H[S]) <= t` is either a proper (t+1)-star with a maximal set of tails or
//! has a good (t, 2)-partition. In the second case fix the two edges `e, f`:
//! the vertices of `S` adjacent to both edges form `A0`, and every other vertex
//! of `S` is non-adjacent to `e` or to `f`, which leaves at most `2(c - 1)`
//! candidates. `S` is then maximal among sets extending `e ∪ f ∪ A0` within
//! those candidates, and the kernel solver lists all of them.

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::closure::closure_number;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{enumerate_maximal_within, Local};
use crate::predicate::Predicate;
use crate::report::{Collector, EnumerationReport, Verdict};
use crate::sparse::{edge_neighborhood, enumerate_proper_kstars, ComplementCliques};
use crate::treewidth::{LocalTWProfile, DEFAULT_LIMIT};
use crate::util::for_each_subset_up_to;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Mode {
    /// Every maximal set appears; non-maximal sets of the class may too.
    Superset,
    /// Exactly the maximal sets.
    Exact,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwEnumConfig {
    pub t: usize,
    pub mode: Mode,
    /// Cap on local treewidth; must be constant, `f(r) = t` for `r = 1..=5`.
    pub local: Option<LocalTWProfile>,
    /// Largest graph accepted in exact mode.
    pub exact_limit: usize,
}

impl TwEnumConfig {
    pub fn new(t: usize, mode: Mode) -> Self {
        TwEnumConfig {
            t,
            mode,
            local: None,
            exact_limit: DEFAULT_LIMIT,
        }
    }

    pub fn local(t: usize, mode: Mode) -> Self {
        TwEnumConfig {
            local: Some(LocalTWProfile::uniform(t, 5)),
            ..Self::new(t, mode)
        }
    }
}

/// `3 n^(t+4) 2^(2(c-1))`.
pub fn cotw_candidate_bound(n: usize, c: usize, t: usize) -> f64 {
    3.0 * (n as f64).powi(t as i32 + 4) * 2f64.powi(2 * c.saturating_sub(1) as i32)
}

/// `(n^4 + 3 n^(t+4)) 4^(c-1)`.
pub fn local_cotw_candidate_bound(n: usize, c: usize, t: usize) -> f64 {
    let nf = n as f64;
    (nf.powi(4) + 3.0 * nf.powi(t as i32 + 4)) * 4f64.powi(c.saturating_sub(1) as i32)
}

/// Disjoint edge pairs `e < f` of `h` in lexicographic order.
fn disjoint_edge_pairs(h: &Graph) -> Vec<((usize, usize), (usize, usize))> {
    let edges: Vec<_> = h.edges().collect();
    let mut out = Vec::new();
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            if e.0 != f.0 && e.0 != f.1 && e.1 != f.0 && e.1 != f.1 {
                out.push((e, f));
            }
        }
    }
    out
}

/// Kernel-maximal sets for every good (l, k)-partition anchored at pairwise
/// disjoint edges, with `A0` ranging over subsets of size at most `l` of the
/// vertices adjacent to every anchor edge.
pub(crate) fn partition_candidates(
    h: &Graph,
    tuples: &[Vec<(usize, usize)>],
    l: usize,
    keep: Predicate,
    c: usize,
) -> Result<Vec<VertexSet>> {
    let per_tuple: Vec<Result<Vec<VertexSet>>> = tuples
        .par_iter()
        .map(|edges| {
            let mut base = h.empty_set();
            for &(a, b) in edges {
                base.insert(a);
                base.insert(b);
            }
            let rest = base.complement();
            let mut common = rest.clone();
            for &e in edges {
                common.intersect_with(&edge_neighborhood(h, e));
            }
            let free = &rest - &common;
            let mut out = Vec::new();
            for_each_subset_up_to(&common.to_vec(), l, &mut |a0| {
                let mut prefix = base.clone();
                for &v in a0 {
                    prefix.insert(v);
                }
                if prefix.len() + free.len() > crate::oracle::KERNEL_LIMIT {
                    return Err(Error::KernelTooLarge {
                        size: prefix.len() + free.len(),
                        limit: crate::oracle::KERNEL_LIMIT,
                        c,
                    });
                }
                out.extend(enumerate_maximal_within(h, &prefix, &free, keep)?);
                Ok(())
            })?;
            Ok(out)
        })
        .collect();
    let mut all = Vec::new();
    for r in per_tuple {
        all.extend(r?);
    }
    Ok(all)
}

/// Classifies candidates for exact mode by single-vertex extension in `H`.
pub(crate) struct MaximalityCheck {
    local: Local,
    keep: Predicate,
    universe: usize,
}

impl MaximalityCheck {
    pub fn new(h: &Graph, keep: Predicate) -> Self {
        MaximalityCheck {
            local: Local::new(h, &h.vertices()),
            keep,
            universe: h.n(),
        }
    }

    pub fn verdict(&self, s: &VertexSet) -> Verdict {
        let m = self.local.mask_of(s);
        if !self.keep.holds_mask(&self.local.adj, m) {
            return Verdict::FailsPredicate;
        }
        let outside = (0..self.universe).filter(|&i| m >> i & 1 == 0);
        for w in outside {
            if self.keep.holds_mask(&self.local.adj, m | 1 << w) {
                return Verdict::NotMaximal;
            }
        }
        Verdict::Accept
    }
}

fn run(g: &Graph, t: usize, mode: Mode, keep: Predicate, exact_limit: usize, bound: f64, c: usize) -> Result<EnumerationReport> {
    let h = g.complement();
    let check = if mode == Mode::Exact {
        if h.n() > exact_limit.min(64) {
            return Err(Error::SizeLimit {
                what: "exact-mode maximality testing",
                n: h.n(),
                limit: exact_limit.min(64),
            });
        }
        Some(MaximalityCheck::new(&h, keep))
    } else {
        None
    };
    let local_pred = matches!(keep, Predicate::LocalTreewidthAtMost { .. });
    let mut col = Collector::default();
    let mut offer = |s: VertexSet, known_good: bool| -> Result<()> {
        col.consider(s, |s| match &check {
            Some(chk) => Ok(chk.verdict(s)),
            None if known_good || keep.holds(&h, s)? => Ok(Verdict::Accept),
            None => Ok(Verdict::FailsPredicate),
        })
    };
    for star in enumerate_proper_kstars(&h, t + 1, &ComplementCliques) {
        offer(star.vertices(), !local_pred)?;
    }
    let tuples: Vec<Vec<(usize, usize)>> = disjoint_edge_pairs(&h).into_iter().map(|(e, f)| vec![e, f]).collect();
    for s in partition_candidates(&h, &tuples, t, keep, c)? {
        offer(s, true)?;
    }
    Ok(col.finish(c, bound))
}

/// Maximal sets `S` of `g` whose complement-induced subgraph has treewidth at
/// most `t`. With `cfg.local` set this is the local variant.
pub fn enumerate_bounded_cotw(g: &Graph, cfg: &TwEnumConfig) -> Result<EnumerationReport> {
    if cfg.local.is_some() {
        return enumerate_bounded_local_cotw(g, cfg);
    }
    let c = closure_number(g).c;
    run(
        g,
        cfg.t,
        cfg.mode,
        Predicate::TreewidthAtMost(cfg.t),
        cfg.exact_limit,
        cotw_candidate_bound(g.n(), c, cfg.t),
        c,
    )
}

/// Maximal sets whose complement-induced subgraph has every ball of radius at
/// most 5 of treewidth at most `t`.
///
/// A set outside the bounded-treewidth family has two non-trivial components
/// or a component of diameter at least 6; either way two far-apart edges give
/// a good (0, 2)-partition, which the same kernel search covers.
pub fn enumerate_bounded_local_cotw(g: &Graph, cfg: &TwEnumConfig) -> Result<EnumerationReport> {
    let profile = cfg
        .local
        .clone()
        .unwrap_or_else(|| LocalTWProfile::uniform(cfg.t, 5));
    let t = profile
        .uniform_value()
        .ok_or_else(|| Error::InvalidParameter("local treewidth cap must be the same for every radius".into()))?;
    if t != cfg.t || profile.max_radius() != 5 {
        return Err(Error::InvalidParameter(format!(
            "local treewidth cap must be f(1..5) = t = {}",
            cfg.t
        )));
    }
    let c = closure_number(g).c;
    run(
        g,
        t,
        cfg.mode,
        Predicate::LocalTreewidthAtMost { t, radius: 5 },
        cfg.exact_limit,
        local_cotw_candidate_bound(g.n(), c, t),
        c,
    )
}
