//! Graph families used in tests, bounds and benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    let mut g = path(n);
    g.add_edge(n - 1, 0);
    Ok(g)
}

/// Complete multipartite graph; parts are consecutive index ranges.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let n = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, p));
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    complete_multipartite(&[a, b])
}

/// Complete multipartite graph with parts of size 3, which has `3^(N/3)`
/// maximal independent sets.
pub fn moon_moser(n: usize) -> Result<Graph> {
    if !n.is_multiple_of(3) {
        return Err(Error::InvalidParameter(format!("N = {n} is not divisible by 3")));
    }
    Ok(complete_multipartite(&vec![3; n / 3]))
}

/// Disjoint union of `N/5` copies of `K5`.
pub fn k5_union(n: usize) -> Result<Graph> {
    if !n.is_multiple_of(5) {
        return Err(Error::InvalidParameter(format!("N = {n} is not divisible by 5")));
    }
    let mut g = Graph::empty(n);
    for base in (0..n).step_by(5) {
        for u in base..base + 5 {
            for v in u + 1..base + 5 {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// A clique on `c - 1` vertices joined to an independent set of `n` vertices,
/// with `c = l(l+1)/2 + 1`. Clique vertices come first. Returns the graph and `c`.
pub fn example1(l: usize, n: usize) -> (Graph, usize) {
    let c = l * (l + 1) / 2 + 1;
    let k = c - 1;
    let mut g = Graph::empty(k + n);
    for u in 0..k {
        for v in u + 1..k + n {
            g.add_edge(u, v);
        }
    }
    (g, c)
}

/// Erdős–Rényi graph `G(n, p)` from a seeded ChaCha8 stream.
pub fn random(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}
