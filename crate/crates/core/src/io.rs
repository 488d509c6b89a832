//! Plain edge-list and DIMACS graph formats.
//!
//! Edge lists start with a header line `n m` followed by `m` lines `u v`
//! (0-indexed). Blank lines and lines starting with `#` are ignored.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn numbers(line_no: usize, text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| parse_err(line_no, format!("not a vertex index: {t:?}"))))
        .collect()
}

fn build(n: usize, edges: Vec<(usize, usize, usize)>) -> Result<Graph> {
    let mut g = Graph::empty(n);
    for (line, u, v) in edges {
        for x in [u, v] {
            if x >= n {
                return Err(parse_err(line, format!("vertex {x} out of range for n = {n}")));
            }
        }
        if u == v {
            return Err(parse_err(line, format!("self-loop at vertex {u}")));
        }
        if !g.add_edge(u, v) {
            log::warn!("line {line}: duplicate edge {{{u}, {v}}} ignored");
        }
    }
    Ok(g)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let h = numbers(hline, header)?;
    let [n, m] = h[..] else {
        return Err(parse_err(hline, "header must be `n m`"));
    };
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let e = numbers(line, l)?;
        let [u, v] = e[..] else {
            return Err(parse_err(line, "edge line must be `u v`"));
        };
        edges.push((line, u, v));
    }
    if edges.len() != m {
        return Err(parse_err(hline, format!("header announces {m} edges, found {}", edges.len())));
    }
    build(n, edges)
}

/// Writes the canonical edge list: header, then edges `u < v` in lexicographic order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// DIMACS `p edge n m` format with 1-indexed `e u v` lines.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut tok = raw.split_whitespace();
        match tok.next() {
            None | Some("c") => {}
            Some("p") => {
                let kind = tok.next();
                if !matches!(kind, Some("edge") | Some("col")) {
                    return Err(parse_err(line, "expected `p edge n m`"));
                }
                let rest = numbers(line, &tok.collect::<Vec<_>>().join(" "))?;
                let [nv, _m] = rest[..] else {
                    return Err(parse_err(line, "expected `p edge n m`"));
                };
                n = Some(nv);
            }
            Some("e") => {
                if n.is_none() {
                    return Err(parse_err(line, "edge before problem line"));
                }
                let e = numbers(line, &tok.collect::<Vec<_>>().join(" "))?;
                let [u, v] = e[..] else {
                    return Err(parse_err(line, "edge line must be `e u v`"));
                };
                if u == 0 || v == 0 {
                    return Err(parse_err(line, "DIMACS vertices are 1-indexed"));
                }
                edges.push((line, u - 1, v - 1));
            }
            Some(other) => return Err(parse_err(line, format!("unknown line type {other:?}"))),
        }
    }
    let n = n.ok_or_else(|| parse_err(1, "missing problem line"))?;
    build(n, edges)
}

/// Picks DIMACS when the first meaningful line starts with `p` or `c`.
pub fn parse_auto(text: &str) -> Result<Graph> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.starts_with("p ") || l.starts_with("c ") || l == "c" => parse_dimacs(text),
        _ => parse_edge_list(text),
    }
}
