//! Closure numbers.
//!
//! A graph is c-closed when every pair of non-adjacent vertices has at most
//! `c - 1` common neighbours. The complement of a c-closed graph is exactly a
//! graph in which every edge `uv` leaves at most `c - 1` vertices outside
//! `N[u, v]`.

use serde::Serialize;

use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureNumber {
    /// Smallest `c >= 1` such that the graph is c-closed.
    pub c: usize,
    /// A non-adjacent pair with exactly `c - 1` common neighbours, when `c > 1`.
    pub witness: Option<(usize, usize)>,
}

pub fn closure_number(g: &Graph) -> ClosureNumber {
    let mut best: Option<(usize, (usize, usize))> = None;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.has_edge(u, v) {
                continue;
            }
            let k = g.neighbors(u).intersection_len(g.neighbors(v));
            if best.is_none_or(|(b, _)| k > b) {
                best = Some((k, (u, v)));
            }
        }
    }
    match best {
        Some((k, pair)) if k > 0 => ClosureNumber {
            c: k + 1,
            witness: Some(pair),
        },
        _ => ClosureNumber { c: 1, witness: None },
    }
}

/// Whether `g` is the complement of a c-closed graph. On failure returns the
/// first edge `uv` (lexicographically) with more than `c - 1` vertices outside `N[u, v]`.
pub fn co_closure_check(g: &Graph, c: usize) -> Result<(), (usize, usize)> {
    for (u, v) in g.edges() {
        let outside = g.n() - g.closed_pair_neighborhood(u, v).len();
        if outside + 1 > c {
            return Err((u, v));
        }
    }
    Ok(())
}

/// Smallest `c` for which [`co_closure_check`] passes.
pub fn co_closure_number(g: &Graph) -> usize {
    g.edges()
        .map(|(u, v)| g.n() - g.closed_pair_neighborhood(u, v).len() + 1)
        .max()
        .unwrap_or(1)
}

/// Repeatedly joins the lexicographically smallest non-adjacent pair with at
/// least `c` common neighbours until the graph is c-closed. For `c = 0` the
/// result is complete.
pub fn closure_augment(g: &Graph, c: usize) -> Graph {
    let mut h = g.clone();
    'outer: loop {
        for u in 0..h.n() {
            for v in u + 1..h.n() {
                if !h.has_edge(u, v) && h.neighbors(u).intersection_len(h.neighbors(v)) >= c {
                    h.add_edge(u, v);
                    continue 'outer;
                }
            }
        }
        return h;
    }
}
