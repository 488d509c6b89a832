//! Reference implementations used only by tests. They share no code with the
//! library beyond the graph type.
#![allow(dead_code)]

use closedgraphs::{generators, Graph, VertexSet};

/// Adjacency masks of the subgraph induced by `s`.
pub fn sub_masks(adj: &[u64], s: u64) -> Vec<u64> {
    adj.iter().map(|&a| a & s).collect()
}

pub fn naive_is_forest(adj: &[u64], s: u64) -> bool {
    // Union-find over the induced edges.
    let n = adj.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for u in 0..n {
        if s >> u & 1 == 0 {
            continue;
        }
        for v in u + 1..n {
            if s >> v & 1 == 1 && adj[u] >> v & 1 == 1 {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a == b {
                    return false;
                }
                parent[a] = b;
            }
        }
    }
    true
}

pub fn naive_degeneracy(adj: &[u64], s: u64) -> usize {
    let mut left = s;
    let mut best = 0;
    while left != 0 {
        let (v, d) = (0..adj.len())
            .filter(|&v| left >> v & 1 == 1)
            .map(|v| (v, (adj[v] & left).count_ones() as usize))
            .min_by_key(|&(_, d)| d)
            .unwrap();
        best = best.max(d);
        left &= !(1 << v);
    }
    best
}

pub fn naive_max_degree(adj: &[u64], s: u64) -> usize {
    (0..adj.len())
        .filter(|&v| s >> v & 1 == 1)
        .map(|v| (adj[v] & s).count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Width of eliminating `order`, a permutation of the members of `s`.
pub fn order_width(adj: &[u64], order: &[usize]) -> usize {
    let mut g: Vec<u64> = adj.to_vec();
    let mut width = 0;
    for &v in order {
        let nb = g[v];
        width = width.max(nb.count_ones() as usize);
        for u in 0..g.len() {
            if nb >> u & 1 == 1 {
                g[u] |= nb & !(1 << u);
                g[u] &= !(1 << v);
            }
        }
        g[v] = 0;
    }
    width
}

/// Treewidth by trying every elimination ordering.
pub fn treewidth_by_permutations(adj: &[u64], s: u64) -> usize {
    let sub = sub_masks(adj, s);
    let mut verts: Vec<usize> = (0..adj.len()).filter(|&v| s >> v & 1 == 1).collect();
    if verts.is_empty() {
        return 0;
    }
    let mut best = usize::MAX;
    permute(&mut verts, 0, &mut |p| best = best.min(order_width(&sub, p)));
    best
}

fn permute(v: &mut [usize], k: usize, f: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, f);
        v.swap(k, i);
    }
}

/// Treewidth by dynamic programming over the set of already eliminated vertices.
pub fn treewidth_by_subsets(adj: &[u64]) -> usize {
    let n = adj.len();
    if n == 0 {
        return 0;
    }
    let full = (1usize << n) - 1;
    let mut best = vec![usize::MAX; 1 << n];
    best[0] = 0;
    for done in 0..=full {
        if best[done] == usize::MAX {
            continue;
        }
        for v in 0..n {
            if done >> v & 1 == 1 {
                continue;
            }
            // Vertices outside `done ∪ {v}` reachable from `v` through `done`.
            let mut seen = 1u64 << v;
            let mut stack = vec![v];
            let mut q = 0u64;
            while let Some(x) = stack.pop() {
                for y in 0..n {
                    if adj[x] >> y & 1 == 0 || seen >> y & 1 == 1 {
                        continue;
                    }
                    seen |= 1 << y;
                    if done >> y & 1 == 1 {
                        stack.push(y);
                    } else {
                        q |= 1 << y;
                    }
                }
            }
            let w = best[done].max(q.count_ones() as usize);
            let next = done | 1 << v;
            best[next] = best[next].min(w);
        }
    }
    best[full]
}

/// Maximal sets among all subsets of the vertices satisfying `keep`, by a
/// plain scan over every subset. For `n <= 16`.
pub fn naive_maximal(adj: &[u64], keep: impl Fn(&[u64], u64) -> bool) -> Vec<u64> {
    let n = adj.len();
    assert!(n <= 16);
    let size = 1u64 << n;
    let ok: Vec<bool> = (0..size).map(|s| keep(adj, s)).collect();
    (0..size)
        .filter(|&s| ok[s as usize])
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 1 || !ok[(s | 1 << v) as usize]))
        .collect()
}

/// Like `naive_maximal`, but rejects a set when any proper superset satisfies
/// `keep`, for predicates not closed under subsets. For `n <= 12`.
pub fn naive_inclusion_maximal(adj: &[u64], keep: impl Fn(&[u64], u64) -> bool) -> Vec<u64> {
    let n = adj.len();
    assert!(n <= 12);
    let full = (1u64 << n) - 1;
    let ok: Vec<bool> = (0..=full).map(|s| keep(adj, s)).collect();
    (0..=full)
        .filter(|&s| ok[s as usize])
        .filter(|&s| {
            let out = full & !s;
            let mut x = out;
            while x != 0 {
                if ok[(s | x) as usize] {
                    return false;
                }
                x = (x - 1) & out;
            }
            true
        })
        .collect()
}

pub fn masks_to_sets(n: usize, masks: &[u64]) -> Vec<VertexSet> {
    let mut v: Vec<VertexSet> = masks.iter().map(|&m| VertexSet::from_mask(n, m)).collect();
    v.sort();
    v
}

/// Every labeled graph on `n` vertices, as adjacency masks.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Vec<u64>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    (0u64..1 << pairs.len()).map(move |code| {
        let mut adj = vec![0u64; n];
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if code >> i & 1 == 1 {
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
        }
        adj
    })
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut v: Vec<usize> = (0..n).collect();
    permute(&mut v, 0, &mut |p| out.push(p.to_vec()));
    out
}

/// Canonical code of a graph: the smallest upper-triangle bit string over all relabelings.
fn canonical(adj: &[u64], perms: &[Vec<usize>]) -> u64 {
    let n = adj.len();
    let mut best = u64::MAX;
    for p in perms {
        let mut code = 0u64;
        let mut i = 0;
        for a in 0..n {
            for b in a + 1..n {
                if adj[p[a]] >> p[b] & 1 == 1 {
                    code |= 1 << i;
                }
                i += 1;
            }
        }
        best = best.min(code);
    }
    best
}

fn decode(n: usize, code: u64) -> Vec<u64> {
    let mut adj = vec![0u64; n];
    let mut i = 0;
    for a in 0..n {
        for b in a + 1..n {
            if code >> i & 1 == 1 {
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
            i += 1;
        }
    }
    adj
}

/// Every way of adding one vertex to one of `graphs`.
pub fn one_vertex_extensions(graphs: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for base in graphs {
        let n = base.len();
        for nb in 0u64..1 << n {
            let mut adj = base.clone();
            for (v, row) in adj.iter_mut().enumerate() {
                if nb >> v & 1 == 1 {
                    *row |= 1 << n;
                }
            }
            adj.push(nb);
            out.push(adj);
        }
    }
    out
}

/// One representative of every isomorphism class of graphs on `n <= 7` vertices.
pub fn isomorphism_classes(n: usize) -> Vec<Vec<u64>> {
    assert!(n <= 7);
    if n <= 5 {
        let perms = all_permutations(n);
        let mut codes: Vec<u64> = labeled_graphs(n).map(|g| canonical(&g, &perms)).collect();
        codes.sort_unstable();
        codes.dedup();
        return codes.into_iter().map(|c| decode(n, c)).collect();
    }
    let perms = all_permutations(n);
    let mut codes: Vec<u64> = one_vertex_extensions(&isomorphism_classes(n - 1))
        .iter()
        .map(|g| canonical(g, &perms))
        .collect();
    codes.sort_unstable();
    codes.dedup();
    codes.into_iter().map(|c| decode(n, c)).collect()
}

/// A set of graphs on `n <= 8` vertices containing every isomorphism class.
pub fn class_cover(n: usize) -> Vec<Vec<u64>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    one_vertex_extensions(&isomorphism_classes(n - 1))
}

/// Seeded random graphs with sizes cycling through `sizes` and densities
/// through `densities`.
pub fn random_instances(count: u64, sizes: &[usize], densities: &[f64]) -> Vec<(u64, Graph)> {
    (0..count)
        .map(|seed| {
            let n = sizes[seed as usize % sizes.len()];
            let p = densities[(seed as usize / sizes.len()) % densities.len()];
            (seed, generators::random(n, p, 1000 + seed).unwrap())
        })
        .collect()
}
