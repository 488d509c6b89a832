//! Maximal (d+1)-plexes of c-closed graphs.
//!
//! A (d+1)-plex of `G` is a set inducing maximum degree at most `d` in the
//! complement `H`, and `H` has the property that every edge `uv` misses at
//! most `c - 1` vertices with `N[u, v]`. All work happens in `H`.
//!
//! A maximal set `S` is either independent in `H` (a maximal clique of `G`,
//! when it is also maximal for the degree bound) or contains an edge `uv`.
//! In the second case `S ∩ N(u, v)` has at most `2d - 2` vertices and the rest
//! of `S` lies in `R = V - N[u, v]`, at most `c - 1` vertices, so `S` is a
//! maximal extension of `{u, v} ∪ (S ∩ N(u, v))` inside `R`.

use crate::bitset::VertexSet;
use crate::clique::{clique_count_bound, enumerate_max_cliques};
use crate::closure::closure_number;
use crate::combinatorics::kappa;
use crate::error::Result;
use crate::graph::Graph;
use crate::report::{Collector, EnumerationReport, Verdict};
use crate::util::for_each_subset_up_to;

/// Extension problem: maximal sets `S` with `prefix ⊆ S ⊆ prefix ∪ free`
/// inducing maximum degree at most `d` in `host`.
#[derive(Clone, Debug)]
pub struct ExtensionInstance<'a> {
    pub host: &'a Graph,
    pub prefix: VertexSet,
    pub free: VertexSet,
    pub d: usize,
}

struct Search<'a> {
    host: &'a Graph,
    d: usize,
    free: Vec<usize>,
    deg: Vec<usize>,
    out: Vec<VertexSet>,
}

impl Search<'_> {
    fn addable(&self, w: usize, s: &VertexSet) -> bool {
        self.deg[w] <= self.d && (self.host.neighbors(w) & s).iter().all(|x| self.deg[x] < self.d)
    }

    /// Whether an excluded, currently addable vertex can still be blocked by
    /// some undecided vertex.
    fn can_block(&self, w: usize, s: &VertexSet, undecided: &[usize]) -> bool {
        let nw = self.host.neighbors(w);
        let mut reach = nw.clone();
        for x in &(nw & s) {
            reach.union_with(self.host.neighbors(x));
        }
        undecided.iter().any(|&y| reach.contains(y))
    }

    fn set_member(&mut self, v: usize, s: &mut VertexSet, add: bool) {
        for x in self.host.neighbors(v).iter() {
            if add {
                self.deg[x] += 1;
            } else {
                self.deg[x] -= 1;
            }
        }
        if add {
            s.insert(v);
        } else {
            s.remove(v);
        }
    }

    fn run(&mut self, i: usize, s: &mut VertexSet, excluded: &mut Vec<usize>) {
        if i == self.free.len() {
            if excluded.iter().all(|&w| !self.addable(w, s)) {
                self.out.push(s.clone());
            }
            return;
        }
        let v = self.free[i];
        if self.addable(v, s) {
            self.set_member(v, s, true);
            self.run(i + 1, s, excluded);
            self.set_member(v, s, false);
            if !self.can_block(v, s, &self.free[i + 1..]) {
                return;
            }
        }
        excluded.push(v);
        self.run(i + 1, s, excluded);
        excluded.pop();
    }
}

/// All maximal extensions of the prefix inside `prefix ∪ free`, in lexicographic
/// order. An infeasible prefix yields no sets.
pub fn extend_bounded_degree(inst: &ExtensionInstance) -> Vec<VertexSet> {
    let host = inst.host;
    if inst.prefix.iter().any(|v| host.neighbors(v).intersection_len(&inst.prefix) > inst.d) {
        return Vec::new();
    }
    let mut deg = vec![0; host.n()];
    for v in &inst.prefix {
        for x in host.neighbors(v) {
            deg[x] += 1;
        }
    }
    let mut search = Search {
        host,
        d: inst.d,
        free: (&inst.free - &inst.prefix).to_vec(),
        deg,
        out: Vec::new(),
    };
    let mut s = inst.prefix.clone();
    search.run(0, &mut s, &mut Vec::new());
    let mut out = search.out;
    out.sort();
    out
}

/// Worst-case number of maximal (d+1)-plexes in an n-vertex c-closed graph.
pub fn plex_count_bound(n: usize, c: usize, d: usize) -> f64 {
    let c1 = c.saturating_sub(1) as f64;
    match d {
        0 => 2.0 * clique_count_bound(n, c),
        1 => 2.0 * (n * n) as f64 * 10f64.powf(c1 / 5.0),
        _ => {
            let k = kappa(d);
            2.0 * (n as f64).powi(2 * d as i32) * k.table.unwrap_or(k.root).powf(c1 + 2.0 * d as f64)
        }
    }
}

fn degree_verdict(h: &Graph, d: usize, s: &VertexSet) -> Verdict {
    let addable = |w: usize| {
        let nb = h.neighbors(w) & s;
        nb.len() <= d && nb.iter().all(|x| h.neighbors(x).intersection_len(s) < d)
    };
    if s.iter().any(|v| h.neighbors(v).intersection_len(s) > d) {
        Verdict::FailsPredicate
    } else if s.complement().iter().any(addable) {
        Verdict::NotMaximal
    } else {
        Verdict::Accept
    }
}

/// All maximal (d+1)-plexes of `g`, i.e. maximal sets in which every vertex
/// misses at most `d` others.
pub fn enumerate_max_plexes(g: &Graph, d: usize) -> EnumerationReport {
    let n = g.n();
    let c = closure_number(g).c;
    let h = g.complement();
    let mut col = Collector::default();
    let check = |s: &VertexSet| Ok(degree_verdict(&h, d, s));
    for s in enumerate_max_cliques(g).results {
        col.consider(s, check).expect("infallible");
    }
    if d > 0 {
        for (u, v) in h.edges() {
            let closed = h.closed_pair_neighborhood(u, v);
            let rest = closed.complement();
            let anchor = VertexSet::from_vertices(n, [u, v]);
            if d == 1 {
                let inst = ExtensionInstance {
                    host: &h,
                    prefix: VertexSet::new(n),
                    free: rest,
                    d: 1,
                };
                for m in extend_bounded_degree(&inst) {
                    col.consider(&m | &anchor, check).expect("infallible");
                }
                continue;
            }
            let around = (&closed - &anchor).to_vec();
            for_each_subset_up_to::<crate::error::Error>(&around, 2 * d - 2, &mut |ns| {
                let mut prefix = anchor.clone();
                for &x in ns {
                    prefix.insert(x);
                }
                let inst = ExtensionInstance {
                    host: &h,
                    prefix,
                    free: rest.clone(),
                    d,
                };
                for s in extend_bounded_degree(&inst) {
                    col.consider(s, check)?;
                }
                Ok(())
            })
            .expect("infallible");
        }
    }
    col.finish(c, plex_count_bound(n, c, d))
}

/// Convenience wrapper returning only the sets.
pub fn max_plexes(g: &Graph, d: usize) -> Result<Vec<VertexSet>> {
    Ok(enumerate_max_plexes(g, d).results)
}
