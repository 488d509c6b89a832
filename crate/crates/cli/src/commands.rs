use std::io::{Read, Write};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use closedgraphs::clique::{enumerate_max_cliques, enumerate_max_independent_sets};
use closedgraphs::closure::{closure_augment, closure_number};
use closedgraphs::codegen::{enumerate_bounded_codegen, enumerate_max_coforests, DegenConfig};
use closedgraphs::combinatorics::{
    all_graph_masks, closed_form_bound, kappa, max_count_over_all_graphs, records_to_csv, verify_example1,
    verify_m1_lemmas, EXHAUSTIVE_LIMIT,
};
use closedgraphs::cotw::{enumerate_bounded_cotw, Mode, TwEnumConfig};
use closedgraphs::io::{parse_auto, write_edge_list};
use closedgraphs::oracle::enumerate_maximal_bruteforce;
use closedgraphs::plex::enumerate_max_plexes;
use closedgraphs::{generators, EnumerationReport, Graph, Predicate, VertexSet};

use crate::{Class, Cli, Command, Family, ModeArg, PredicateArg, Suite};

#[derive(Serialize)]
struct RunReport {
    command: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    input_sha256: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    closure: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_time_s: Option<f64>,
    payload: Value,
    bound_satisfied: bool,
}

struct Loaded {
    graph: Graph,
    digest: String,
}

fn read_graph(path: &str, limit_n: Option<usize>) -> Result<Loaded> {
    let mut bytes = Vec::new();
    if path == "-" {
        std::io::stdin().read_to_end(&mut bytes).context("reading standard input")?;
    } else {
        bytes = std::fs::read(path).with_context(|| format!("reading {path}"))?;
    }
    let text = String::from_utf8(bytes).context("input is not UTF-8")?;
    let graph = parse_auto(&text).with_context(|| format!("parsing {path}"))?;
    if let Some(limit) = limit_n {
        if graph.n() > limit {
            bail!("input has {} vertices, above --limit-n {limit}; raise the limit to run it", graph.n());
        }
    }
    let digest = Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect();
    Ok(Loaded { graph, digest })
}

fn sets(results: &[VertexSet]) -> String {
    let mut out = String::new();
    for s in results {
        let v: Vec<String> = s.iter().map(|x| x.to_string()).collect();
        out.push_str(&v.join(" "));
        out.push('\n');
    }
    out
}

/// What `EnumerationReport::bound_value` limits for each class.
fn bounded_quantity(class: Class, r: &EnumerationReport) -> (&'static str, u64) {
    match class {
        Class::Cliques | Class::IndependentSets | Class::CoTreewidth | Class::LocalCoTreewidth => {
            ("candidates", r.candidates_generated)
        }
        _ => ("results", r.results.len() as u64),
    }
}

fn run_class(g: &Graph, class: Class, d: usize, t: usize, mode: ModeArg) -> Result<EnumerationReport> {
    let mode = match mode {
        ModeArg::Superset => Mode::Superset,
        ModeArg::Exact => Mode::Exact,
    };
    Ok(match class {
        Class::Cliques => enumerate_max_cliques(g),
        Class::IndependentSets => enumerate_max_independent_sets(g),
        Class::Plexes => enumerate_max_plexes(g, d),
        Class::CoForests => enumerate_max_coforests(g)?,
        Class::CoTreewidth => enumerate_bounded_cotw(g, &TwEnumConfig::new(t, mode))?,
        Class::LocalCoTreewidth => enumerate_bounded_cotw(g, &TwEnumConfig::local(t, mode))?,
        Class::CoDegeneracy => enumerate_bounded_codegen(g, &DegenConfig { d })?,
    })
}

fn predicate(p: PredicateArg, d: usize, t: usize, radius: usize) -> Predicate {
    match p {
        PredicateArg::IndependentSet => Predicate::IndependentSet,
        PredicateArg::Clique => Predicate::Clique,
        PredicateArg::MaxDegree => Predicate::MaxDegree(d),
        PredicateArg::Plex => Predicate::Plex(d),
        PredicateArg::Forest => Predicate::Forest,
        PredicateArg::Treewidth => Predicate::TreewidthAtMost(t),
        PredicateArg::Degeneracy => Predicate::DegenerateAtMost(d),
        PredicateArg::LocalTreewidth => Predicate::LocalTreewidthAtMost { t, radius },
        PredicateArg::NonedgesLeSize => Predicate::NonEdgesAtMostSize,
    }
}

fn emit(report: &RunReport) -> Result<()> {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, report)?;
    writeln!(out)?;
    Ok(())
}

fn print_csv<T: Serialize>(rows: &[T]) -> Result<()> {
    let mut w = csv::Writer::from_writer(std::io::stdout().lock());
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

/// Runs one command; the result is the process exit code.
pub fn run(cli: &Cli) -> Result<u8> {
    let start = Instant::now();
    let command: Vec<String> = std::env::args().skip(1).collect();
    let mut report = RunReport {
        command,
        input_sha256: None,
        closure: None,
        wall_time_s: None,
        payload: Value::Null,
        bound_satisfied: true,
    };
    let mut csv_out: Option<String> = None;
    let mut violation_exits = false;
    match &cli.command {
        Command::Closure { input, csv } => {
            let l = read_graph(&input.input, cli.limit_n)?;
            let cn = closure_number(&l.graph);
            report.input_sha256 = Some(l.digest);
            report.closure = Some(cn.c);
            report.payload = json!({ "n": l.graph.n(), "m": l.graph.edge_count(), "witness": cn.witness });
            if *csv {
                let (u, v) = cn.witness.map_or((String::new(), String::new()), |(u, v)| (u.to_string(), v.to_string()));
                csv_out = Some(format!("c,u,v\n{},{u},{v}\n", cn.c));
            }
        }
        Command::Enumerate { input, class, d, t, mode, csv } => {
            let l = read_graph(&input.input, cli.limit_n)?;
            let r = run_class(&l.graph, *class, *d, *t, *mode)?;
            let (what, value) = bounded_quantity(*class, &r);
            report.input_sha256 = Some(l.digest);
            report.closure = Some(r.closure);
            report.bound_satisfied = value as f64 <= r.bound_value;
            if *csv {
                csv_out = Some(sets(&r.results));
            }
            report.payload = json!({
                "class": format!("{class:?}"),
                "count": r.results.len(),
                "bound_applies_to": what,
                "report": r,
            });
            violation_exits = true;
        }
        Command::Oracle { input, predicate: p, d, t, radius, csv } => {
            let l = read_graph(&input.input, cli.limit_n)?;
            let p = predicate(*p, *d, *t, *radius);
            let results = enumerate_maximal_bruteforce(&l.graph, p)?;
            let bound = closed_form_bound(p, l.graph.n(), 0);
            report.input_sha256 = Some(l.digest);
            report.closure = Some(closure_number(&l.graph).c);
            report.bound_satisfied = bound.is_none_or(|b| results.len() as f64 <= b + 1e-9);
            if *csv {
                csv_out = Some(sets(&results));
            }
            report.payload = json!({
                "predicate": p.to_string(),
                "count": results.len(),
                "bound_value": bound,
                "results": results,
            });
        }
        Command::VerifyBounds { suite, big_n, prefix, d, l, n, input, csv } => {
            violation_exits = true;
            let upto = EXHAUSTIVE_LIMIT.saturating_sub(*prefix);
            let sizes: Vec<usize> = big_n.map_or((1..=upto).collect(), |n| vec![n]);
            match suite {
                Suite::MoonMoser | Suite::M1 => {
                    let p = if *suite == Suite::M1 {
                        Predicate::MaxDegree(d.unwrap_or(1))
                    } else {
                        Predicate::IndependentSet
                    };
                    let records = sizes
                        .iter()
                        .map(|&n| max_count_over_all_graphs(n, p, *prefix))
                        .collect::<closedgraphs::Result<Vec<_>>>()?;
                    report.bound_satisfied = records.iter().all(|r| r.within_bound());
                    if *csv {
                        csv_out = Some(records_to_csv(&records));
                    }
                    report.payload = json!({ "suite": format!("{suite:?}"), "records": records });
                }
                Suite::Lemmas => {
                    let graphs: Vec<Graph> = match input {
                        Some(path) => {
                            let l = read_graph(path, cli.limit_n)?;
                            report.input_sha256 = Some(l.digest);
                            vec![l.graph]
                        }
                        None => {
                            let top = big_n.unwrap_or(5);
                            if top > 6 {
                                bail!("the lemma suite scans all graphs up to 6 vertices; pass --input for larger graphs");
                            }
                            (1..=top).flat_map(all_graph_masks).map(|adj| Graph::from_masks(&adj)).collect()
                        }
                    };
                    let mut failures = Vec::new();
                    for g in &graphs {
                        let rep = verify_m1_lemmas(g)?;
                        if !rep.all_hold() {
                            failures.push(json!({ "graph": write_edge_list(g), "report": rep }));
                        }
                    }
                    report.bound_satisfied = failures.is_empty();
                    if *csv {
                        csv_out = Some(format!("graphs,failures\n{},{}\n", graphs.len(), failures.len()));
                    }
                    failures.truncate(20);
                    report.payload = json!({ "suite": "Lemmas", "graphs": graphs.len(), "failures": failures });
                }
                Suite::Example1 => {
                    let ns = if n.is_empty() { vec![4, 5, 6] } else { n.clone() };
                    let records = ns
                        .iter()
                        .map(|&n| verify_example1(*l, n))
                        .collect::<closedgraphs::Result<Vec<_>>>()?;
                    report.bound_satisfied = records.iter().all(|r| r.meets_lower_bound);
                    if *csv {
                        print_csv(&records)?;
                        return Ok(exit_code(&report, true));
                    }
                    report.payload = json!({ "suite": "Example1", "records": records });
                }
                Suite::Kappa => {
                    let ks: Vec<_> = (0..=d.unwrap_or(4)).map(kappa).collect();
                    report.bound_satisfied = ks.iter().all(|k| k.table.is_none_or(|t| (k.shifted_root - t).abs() < 1e-3));
                    if *csv {
                        print_csv(&ks)?;
                        return Ok(exit_code(&report, true));
                    }
                    report.payload = json!({ "suite": "Kappa", "values": ks });
                }
            }
        }
        Command::Generate { family, n, parts, l, p, seed, closure } => {
            let mut g = match family {
                Family::Complete => generators::complete(*n),
                Family::Path => generators::path(*n),
                Family::Cycle => generators::cycle(*n)?,
                Family::Multipartite => generators::complete_multipartite(parts),
                Family::MoonMoser => generators::moon_moser(*n)?,
                Family::K5Union => generators::k5_union(*n)?,
                Family::Example1 => generators::example1(*l, *n).0,
                Family::Random => generators::random(*n, *p, *seed)?,
            };
            if let Some(c) = closure {
                g = closure_augment(&g, *c);
            }
            print!("{}", write_edge_list(&g));
            return Ok(0);
        }
        Command::Bench { class, d, t, mode, sizes, p, seed, files } => {
            return bench(cli, *class, *d, *t, *mode, sizes, p, *seed, files);
        }
    }
    if cli.timing {
        report.wall_time_s = Some(start.elapsed().as_secs_f64());
    }
    match csv_out {
        Some(text) => print!("{text}"),
        None => emit(&report)?,
    }
    Ok(exit_code(&report, violation_exits))
}

fn exit_code(report: &RunReport, violation_exits: bool) -> u8 {
    if violation_exits && !report.bound_satisfied {
        2
    } else {
        0
    }
}

#[derive(Serialize)]
struct BenchRow {
    source: String,
    n: usize,
    m: usize,
    c: usize,
    class: String,
    seconds: f64,
    candidates: u64,
    results: usize,
    bound: f64,
    bound_satisfied: bool,
}

#[allow(clippy::too_many_arguments)]
fn bench(cli: &Cli, class: Class, d: usize, t: usize, mode: ModeArg, sizes: &[usize], p: &[f64], seed: u64, files: &[String]) -> Result<u8> {
    let mut inputs: Vec<(String, Graph)> = Vec::new();
    if files.is_empty() {
        let mut s = seed;
        for &n in sizes {
            for &q in p {
                inputs.push((format!("random(n={n},p={q},seed={s})"), generators::random(n, q, s)?));
                s += 1;
            }
        }
    } else {
        for f in files {
            inputs.push((f.clone(), read_graph(f, cli.limit_n)?.graph));
        }
    }
    let mut rows = Vec::new();
    let mut all_ok = true;
    for (source, g) in inputs {
        if cli.limit_n.is_some_and(|lim| g.n() > lim) {
            log::warn!("skipping {source}: above --limit-n");
            continue;
        }
        let start = Instant::now();
        let r = run_class(&g, class, d, t, mode)?;
        let seconds = start.elapsed().as_secs_f64();
        let (_, value) = bounded_quantity(class, &r);
        let ok = value as f64 <= r.bound_value;
        all_ok &= ok;
        rows.push(BenchRow {
            source,
            n: g.n(),
            m: g.edge_count(),
            c: r.closure,
            class: format!("{class:?}"),
            seconds,
            candidates: r.candidates_generated,
            results: r.results.len(),
            bound: r.bound_value,
            bound_satisfied: ok,
        });
    }
    print_csv(&rows)?;
    Ok(if all_ok { 0 } else { 2 })
}
