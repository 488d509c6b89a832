//! Brute-force enumeration of maximal vertex sets.
//!
//! These routines are the reference against which the structured enumerators
//! are tested, and also serve as the kernel solver inside them: once a kernel
//! is small, its maximal sets are listed exhaustively.
//!
//! For hereditary predicates the satisfying sets form a down-closed family, so
//! a depth-first walk that only extends satisfying sets visits each of them
//! once, and maximality reduces to "no single vertex can be added". For the
//! non-hereditary predicate every subset is scanned and maximality means that
//! no proper superset of any size satisfies the predicate.

use crate::bitset::{bits, VertexSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::predicate::Predicate;

pub const HEREDITARY_LIMIT: usize = 20;
pub const FULL_SCAN_LIMIT: usize = 16;
pub const PIVOT_LIMIT: usize = 40;
/// Kernels are solved on 64-bit masks.
pub const KERNEL_LIMIT: usize = 64;

/// A graph on at most 64 vertices, stored as adjacency masks, with the map
/// back to the vertices of the host graph.
pub(crate) struct Local {
    pub adj: Vec<u64>,
    pub map: Vec<usize>,
    index: Vec<usize>,
}

impl Local {
    pub fn new(g: &Graph, kernel: &VertexSet) -> Self {
        let map = kernel.to_vec();
        assert!(map.len() <= 64);
        let mut index = vec![usize::MAX; g.n()];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| g.neighbors(v).iter().filter(|&w| index[w] != usize::MAX).fold(0u64, |m, w| m | 1 << index[w]))
            .collect();
        Local { adj, map, index }
    }

    pub fn mask_of(&self, s: &VertexSet) -> u64 {
        s.iter().fold(0, |m, v| {
            let i = self.index[v];
            debug_assert!(i != usize::MAX, "vertex {v} outside the kernel");
            m | 1 << i
        })
    }

    pub fn set_of(&self, universe: usize, mask: u64) -> VertexSet {
        VertexSet::from_vertices(universe, bits(mask).map(|i| self.map[i]))
    }
}

/// Maximal sets `S` with `prefix ⊆ S ⊆ prefix ∪ pool` for a hereditary predicate.
pub(crate) fn extensions_mask(adj: &[u64], prefix: u64, pool: u64, p: Predicate) -> Vec<u64> {
    debug_assert!(p.is_hereditary());
    let mut out = Vec::new();
    if !p.holds_mask(adj, prefix) {
        return out;
    }
    let pool: Vec<usize> = bits(pool & !prefix).collect();
    fn walk(adj: &[u64], p: Predicate, pool: &[usize], s: u64, start: usize, out: &mut Vec<u64>) {
        let mut extendable = false;
        for (j, &v) in pool.iter().enumerate() {
            if s & 1 << v != 0 {
                continue;
            }
            let t = s | 1 << v;
            if p.holds_mask(adj, t) {
                extendable = true;
                if j >= start {
                    walk(adj, p, pool, t, j + 1, out);
                }
            }
        }
        if !extendable {
            out.push(s);
        }
    }
    walk(adj, p, &pool, prefix, 0, &mut out);
    out
}

/// Maximal sets over all subsets of `0..n` by full scan, valid for any predicate.
pub(crate) fn full_scan_mask(adj: &[u64], n: usize, p: Predicate) -> Vec<u64> {
    let size = 1usize << n;
    let sat: Vec<bool> = (0..size as u64).map(|m| p.holds_mask(adj, m)).collect();
    // above[m]: some proper superset of m satisfies p.
    let mut above = vec![false; size];
    for m in (0..size).rev() {
        let mut free = !m & (size - 1);
        while free != 0 {
            let b = free & free.wrapping_neg();
            free &= free - 1;
            if sat[m | b] || above[m | b] {
                above[m] = true;
                break;
            }
        }
    }
    (0..size).filter(|&m| sat[m] && !above[m]).map(|m| m as u64).collect()
}

fn sorted(mut v: Vec<VertexSet>) -> Vec<VertexSet> {
    v.sort();
    v
}

/// All maximal sets of `g` satisfying `p`, in lexicographic order.
///
/// Hereditary predicates allow `n <= 20`, the non-hereditary one `n <= 16`;
/// cliques and independent sets are listed by a pivoting search up to `n <= 40`.
pub fn enumerate_maximal_bruteforce(g: &Graph, p: Predicate) -> Result<Vec<VertexSet>> {
    let n = g.n();
    match p {
        Predicate::Clique if n <= PIVOT_LIMIT && n > HEREDITARY_LIMIT => return pivot_cliques(g),
        Predicate::IndependentSet if n <= PIVOT_LIMIT && n > HEREDITARY_LIMIT => {
            return pivot_cliques(&g.complement());
        }
        _ => {}
    }
    let (limit, what) = if p.is_hereditary() {
        (HEREDITARY_LIMIT, "brute-force enumeration (hereditary)")
    } else {
        (FULL_SCAN_LIMIT, "brute-force enumeration (full scan)")
    };
    if n > limit {
        return Err(Error::SizeLimit { what, n, limit });
    }
    let adj = g.masks();
    let masks = if p.is_hereditary() {
        extensions_mask(&adj, 0, (1u64 << n) - 1, p)
    } else {
        full_scan_mask(&adj, n, p)
    };
    Ok(sorted(masks.into_iter().map(|m| VertexSet::from_mask(n, m)).collect()))
}

/// Maximal sets satisfying `p` with `prefix ⊆ S ⊆ prefix ∪ pool`, where
/// maximality is relative to `prefix ∪ pool`.
pub fn enumerate_maximal_within(g: &Graph, prefix: &VertexSet, pool: &VertexSet, p: Predicate) -> Result<Vec<VertexSet>> {
    let kernel = prefix | pool;
    if !p.is_hereditary() {
        let free = (pool - prefix).len();
        if free > FULL_SCAN_LIMIT || kernel.len() > KERNEL_LIMIT {
            return Err(Error::SizeLimit {
                what: "full-scan extension",
                n: free,
                limit: FULL_SCAN_LIMIT,
            });
        }
        let free_list = (pool - prefix).to_vec();
        let mut found = Vec::new();
        let universe = g.n();
        let sat_of = |m: usize| {
            let mut s = prefix.clone();
            for (i, &v) in free_list.iter().enumerate() {
                if m >> i & 1 == 1 {
                    s.insert(v);
                }
            }
            s
        };
        let local = Local::new(g, &kernel);
        let adj = &local.adj;
        let size = 1usize << free_list.len();
        let masks: Vec<u64> = (0..size).map(|m| local.mask_of(&sat_of(m))).collect();
        let sat: Vec<bool> = masks.iter().map(|&m| p.holds_mask(adj, m)).collect();
        let mut above = vec![false; size];
        for m in (0..size).rev() {
            for b in 0..free_list.len() {
                let up = m | 1 << b;
                if up != m && (sat[up] || above[up]) {
                    above[m] = true;
                    break;
                }
            }
            if sat[m] && !above[m] {
                found.push(local.set_of(universe, masks[m]));
            }
        }
        return Ok(sorted(found));
    }
    if kernel.len() > KERNEL_LIMIT {
        return Err(Error::SizeLimit {
            what: "kernel extension",
            n: kernel.len(),
            limit: KERNEL_LIMIT,
        });
    }
    let local = Local::new(g, &kernel);
    let pm = local.mask_of(prefix);
    let all = local.mask_of(&kernel);
    Ok(sorted(
        extensions_mask(&local.adj, pm, all, p)
            .into_iter()
            .map(|m| local.set_of(g.n(), m))
            .collect(),
    ))
}

/// Whether `s` is a maximal set satisfying `p`. Errors when `p(s)` is false.
pub fn is_maximal(g: &Graph, p: Predicate, s: &VertexSet) -> Result<bool> {
    if !p.holds(g, s)? {
        return Err(Error::PredicateFails);
    }
    let outside: Vec<usize> = s.complement().to_vec();
    if p.is_hereditary() {
        for &v in &outside {
            if p.holds(g, &s.with(v))? {
                return Ok(false);
            }
        }
        return Ok(true);
    }
    if outside.len() > HEREDITARY_LIMIT {
        return Err(Error::SizeLimit {
            what: "superset scan",
            n: outside.len(),
            limit: HEREDITARY_LIMIT,
        });
    }
    for m in 1u64..1 << outside.len() {
        let mut t = s.clone();
        for i in bits(m) {
            t.insert(outside[i]);
        }
        if p.holds(g, &t)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn count_maximal(g: &Graph, p: Predicate) -> Result<u64> {
    if g.n() <= FULL_SCAN_LIMIT {
        return Ok(full_scan_mask(&g.masks(), g.n(), p).len() as u64);
    }
    Ok(enumerate_maximal_bruteforce(g, p)?.len() as u64)
}

/// Maximal cliques by Bron–Kerbosch with Tomita pivoting, for `n <= 40`.
pub fn pivot_cliques(g: &Graph) -> Result<Vec<VertexSet>> {
    if g.n() > PIVOT_LIMIT {
        return Err(Error::SizeLimit {
            what: "pivoting clique enumeration",
            n: g.n(),
            limit: PIVOT_LIMIT,
        });
    }
    let adj = g.masks();
    let mut out = Vec::new();
    fn bk(adj: &[u64], r: u64, p: u64, x: u64, out: &mut Vec<u64>) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        let pivot = bits(p | x).max_by_key(|&u| (adj[u] & p).count_ones()).unwrap();
        let (mut p, mut x) = (p, x);
        for v in bits(p & !adj[pivot]) {
            bk(adj, r | 1 << v, p & adj[v], x & adj[v], out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    let full = if g.n() == 0 { 0 } else { u64::MAX >> (64 - g.n()) };
    bk(&adj, 0, full, 0, &mut out);
    Ok(sorted(out.into_iter().map(|m| VertexSet::from_mask(g.n(), m)).collect()))
}
