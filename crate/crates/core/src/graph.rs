use std::collections::VecDeque;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n` with bitset adjacency.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    adj: Vec<VertexSet>,
    m: usize,
}

/// Graph diameter; `Infinite` for disconnected graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![VertexSet::new(n); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged; loops and
    /// out-of-range endpoints are errors.
    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph on at most 64 vertices from adjacency masks.
    pub fn from_masks(adj: &[u64]) -> Self {
        let n = adj.len();
        let mut g = Graph::empty(n);
        for (u, &row) in adj.iter().enumerate() {
            for v in crate::bitset::bits(row) {
                if v > u && v < n {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Adds an edge, returning whether it was new.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> bool {
        debug_assert!(u != v);
        if self.adj[u].insert(v) {
            self.adj[v].insert(u);
            self.m += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if self.adj[u].remove(v) {
            self.adj[v].remove(u);
            self.m -= 1;
            true
        } else {
            false
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n())
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Adjacency rows as masks; only for graphs on at most 64 vertices.
    pub fn masks(&self) -> Vec<u64> {
        assert!(self.n() <= 64);
        self.adj.iter().map(|s| s.as_mask()).collect()
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut adj = Vec::with_capacity(n);
        for v in 0..n {
            let mut row = self.adj[v].complement();
            row.remove(v);
            adj.push(row);
        }
        let m = n * n.saturating_sub(1) / 2 - self.m;
        Graph { adj, m }
    }

    /// Open neighbourhood of a set: vertices outside `s` adjacent to some member.
    pub fn neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = self.empty_set();
        for v in s {
            out.union_with(&self.adj[v]);
        }
        out.difference_with(s);
        out
    }

    /// `N[s]`: `s` together with its neighbourhood.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = s.clone();
        for v in s {
            out.union_with(&self.adj[v]);
        }
        out
    }

    /// `N[u, v]`, the closed neighbourhood of a pair.
    pub fn closed_pair_neighborhood(&self, u: usize, v: usize) -> VertexSet {
        let mut out = &self.adj[u] | &self.adj[v];
        out.insert(u);
        out.insert(v);
        out
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> VertexSet {
        &self.adj[u] & &self.adj[v]
    }

    /// Number of edges with both endpoints in `s`.
    pub fn edges_within(&self, s: &VertexSet) -> usize {
        s.iter().map(|v| self.adj[v].intersection_len(s)).sum::<usize>() / 2
    }

    /// Connected components, each listed once, ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertices())
    }

    /// Connected components of the subgraph induced by `within`.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut left = within.clone();
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::new(self.n());
            comp.insert(start);
            let mut frontier = comp.clone();
            while !frontier.is_empty() {
                let mut next = self.empty_set();
                for v in &frontier {
                    next.union_with(&self.adj[v]);
                }
                next.intersect_with(within);
                next.difference_with(&comp);
                comp.union_with(&next);
                frontier = next;
            }
            left.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Vertices at distance at most `r` from `v`.
    pub fn ball(&self, v: usize, r: usize) -> VertexSet {
        let mut ball = VertexSet::new(self.n());
        ball.insert(v);
        let mut frontier = ball.clone();
        for _ in 0..r {
            let mut next = self.neighborhood(&frontier);
            next.difference_with(&ball);
            if next.is_empty() {
                break;
            }
            ball.union_with(&next);
            frontier = next;
        }
        ball
    }

    pub fn diameter(&self) -> Distance {
        let mut best = 0;
        for v in 0..self.n() {
            for d in self.distances_from(v) {
                match d {
                    None => return Distance::Infinite,
                    Some(d) => best = best.max(d),
                }
            }
        }
        Distance::Finite(best)
    }

    /// The subgraph induced by `s`, relabelled to `0..|s|` in increasing order,
    /// together with the map from new to old indices.
    pub fn induced(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let map = s.to_vec();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let mut h = Graph::empty(map.len());
        for (i, &v) in map.iter().enumerate() {
            for w in self.adj[v].iter() {
                let j = index[w];
                if j != usize::MAX && j > i {
                    h.add_edge(i, j);
                }
            }
        }
        (h, map)
    }

    /// Degeneracy and a smallest-last peeling order (ties broken by index).
    pub fn degeneracy(&self) -> (usize, Vec<usize>) {
        let n = self.n();
        let mut deg: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut d = 0;
        for _ in 0..n {
            let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| (deg[v], v)).unwrap();
            d = d.max(deg[v]);
            removed[v] = true;
            order.push(v);
            for w in &self.adj[v] {
                if !removed[w] {
                    deg[w] -= 1;
                }
            }
        }
        (d, order)
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].intersection_len(s) + 1 == s.len())
    }
}
