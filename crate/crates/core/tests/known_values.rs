mod common;

use closedgraphs::clique::{clique_count_bound, enumerate_max_cliques, enumerate_max_independent_sets};
use closedgraphs::closure::{closure_augment, closure_number, co_closure_check};
use closedgraphs::codegen::{enumerate_bounded_codegen, enumerate_max_coforests, forest_count_bound, DegenConfig};
use closedgraphs::combinatorics::{kappa, max_count_over_all_graphs, verify_example1, verify_m1_lemmas};
use closedgraphs::cotw::{enumerate_bounded_cotw, enumerate_bounded_local_cotw, Mode, TwEnumConfig};
use closedgraphs::io::{parse_dimacs, parse_edge_list, write_edge_list};
use closedgraphs::oracle::{count_maximal, enumerate_maximal_bruteforce, is_maximal};
use closedgraphs::plex::{enumerate_max_plexes, extend_bounded_degree, plex_count_bound, ExtensionInstance};
use closedgraphs::sparse::{detect_good_partition, enumerate_proper_kstars, ComplementCliques};
use closedgraphs::treewidth::{local_treewidth, treewidth, validate_decomposition, TreeDecomposition};
use closedgraphs::{generators, Graph, Predicate, VertexSet};
use common::*;

fn sets(n: usize, v: &[&[usize]]) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = v.iter().map(|s| VertexSet::from_vertices(n, s.iter().copied())).collect();
    out.sort();
    out
}

fn disjoint(a: &Graph, b: &Graph) -> Graph {
    let n = a.n() + b.n();
    Graph::from_edges(n, a.edges().chain(b.edges().map(|(u, v)| (u + a.n(), v + a.n())))).unwrap()
}

#[test]
fn complements() {
    assert_eq!(generators::complete(3).complement(), Graph::empty(3));
    let k22 = generators::complete_bipartite(2, 2);
    assert_eq!(k22.complement().components().len(), 2);
    assert_eq!(k22.complement().edge_count(), 2);
    let g = generators::random(9, 0.5, 7).unwrap();
    assert_eq!(g.complement().complement(), g);
}

#[test]
fn basic_queries() {
    assert_eq!(generators::path(4).diameter(), closedgraphs::Distance::Finite(3));
    let k22 = generators::complete_bipartite(2, 2);
    assert_eq!(k22.common_neighbors(0, 1).to_vec(), vec![2, 3]);
    let sizes: Vec<usize> = disjoint(&generators::complete(2), &generators::complete(3))
        .components()
        .iter()
        .map(|c| c.len())
        .collect();
    assert_eq!(sizes, vec![2, 3]);
}

#[test]
fn degeneracy_values() {
    assert_eq!(generators::path(6).degeneracy().0, 1);
    assert_eq!(generators::complete(5).degeneracy().0, 4);
    assert_eq!(generators::cycle(6).unwrap().degeneracy().0, 2);
}

#[test]
fn generator_shapes() {
    let mm = generators::moon_moser(6).unwrap();
    // Two parts of three: K_{3,3}.
    assert_eq!((mm.n(), mm.edge_count()), (6, 9));
    assert_eq!(enumerate_max_cliques(&mm).results.len(), 9);
    let (g, c) = generators::example1(2, 3);
    // A clique of c - 1 = 3 vertices and an independent set of 3.
    assert_eq!((g.n(), c), (6, 4));
    assert!(g.is_clique(&VertexSet::from_vertices(6, [0, 1, 2])));
    assert!(g.is_independent(&VertexSet::from_vertices(6, [3, 4, 5])));
    // K_{2,2} is a 4-cycle: connected and 2-regular.
    let k22 = generators::complete_bipartite(2, 2);
    assert!(k22.components().len() == 1 && (0..4).all(|v| k22.degree(v) == 2));
}

#[test]
fn parsing() {
    assert_eq!(parse_edge_list("3 2\n0 1\n1 2").unwrap(), generators::path(3));
    let g = generators::random(9, 0.4, 3).unwrap();
    assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    assert_eq!(parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap(), generators::complete(3));
    assert!(parse_edge_list("2 1\n0 0").is_err());
    // Duplicate lines are merged into one edge.
    assert_eq!(parse_edge_list("3 2\n0 1\n1 0").unwrap().edge_count(), 1);
}

#[test]
fn closure_values() {
    let k_ab = disjoint(&generators::complete(3), &generators::complete(4));
    assert_eq!(closure_number(&k_ab).c, 1);
    assert_eq!(closure_number(&generators::complete_bipartite(2, 2)).c, 3);
    assert_eq!(closure_number(&generators::complete(6)).c, 1);
    assert!(co_closure_check(&generators::complete_bipartite(3, 4), 1).is_ok());
    assert!(co_closure_check(&generators::path(3), 1).is_ok());
    let g = generators::random(8, 0.4, 1).unwrap();
    assert!(co_closure_check(&g, 8).is_ok());
}

#[test]
fn augmentation() {
    let k22 = generators::complete_bipartite(2, 2);
    assert_eq!(closure_augment(&k22, 3), k22);
    let g = closure_augment(&generators::random(10, 0.3, 5).unwrap(), 1);
    assert_eq!(closure_number(&g).c, 1);
    for comp in g.components() {
        assert!(g.is_clique(&comp));
    }
    assert_eq!(closure_augment(&generators::complete(5), 2), generators::complete(5));
}

#[test]
fn treewidth_values() {
    for a in 1..=4 {
        for b in 1..=4 {
            assert_eq!(treewidth(&generators::complete_bipartite(a, b)).unwrap(), a.min(b));
        }
    }
    assert_eq!(treewidth(&generators::path(7)).unwrap(), 1);
    assert_eq!(treewidth(&generators::complete(6)).unwrap(), 5);
    let c5 = generators::cycle(5).unwrap();
    assert_eq!(treewidth(&c5).unwrap(), 2);
    assert_eq!(treewidth_by_permutations(&c5.masks(), 0b11111), 2);
}

#[test]
fn decomposition_validation() {
    let p4 = generators::path(4);
    let one_bag = TreeDecomposition {
        tree: vec![vec![]],
        bags: vec![p4.vertices()],
        width: 3,
    };
    assert!(validate_decomposition(&p4, &one_bag).is_ok());
    let path = TreeDecomposition {
        tree: vec![vec![1], vec![0, 2], vec![1]],
        bags: sets(4, &[&[0, 1], &[1, 2], &[2, 3]]),
        width: 1,
    };
    assert!(validate_decomposition(&p4, &path).is_ok());
    let broken = TreeDecomposition {
        tree: vec![vec![1], vec![0]],
        bags: sets(4, &[&[0, 1], &[2, 3]]),
        width: 1,
    };
    assert!(validate_decomposition(&p4, &broken).is_err());
}

#[test]
fn local_treewidth_values() {
    let c12 = generators::cycle(12).unwrap();
    assert_eq!(local_treewidth(&c12, 1).unwrap(), 1);
    assert_eq!(local_treewidth(&c12, 6).unwrap(), treewidth(&c12).unwrap());
    assert_eq!(local_treewidth(&generators::complete(5), 1).unwrap(), 4);
}

#[test]
fn oracle_values() {
    let k3 = generators::complete(3);
    assert_eq!(enumerate_maximal_bruteforce(&k3, Predicate::IndependentSet).unwrap(), sets(3, &[&[0], &[1], &[2]]));
    let k5 = generators::complete(5);
    let m = enumerate_maximal_bruteforce(&k5, Predicate::MaxDegree(1)).unwrap();
    assert_eq!(m.len(), 10);
    assert!(m.iter().all(|s| s.len() == 2));
    let c5 = generators::cycle(5).unwrap();
    assert_eq!(
        enumerate_maximal_bruteforce(&c5, Predicate::Plex(1)).unwrap(),
        sets(5, &[&[0, 1, 2], &[1, 2, 3], &[2, 3, 4], &[3, 4, 0], &[4, 0, 1]])
    );
    let k4 = generators::complete(4);
    let forests = enumerate_maximal_bruteforce(&k4, Predicate::Forest).unwrap();
    assert_eq!(forests, k4.edges().map(|(u, v)| VertexSet::from_vertices(4, [u, v])).collect::<Vec<_>>());
    assert!(is_maximal(&k5, Predicate::MaxDegree(1), &VertexSet::from_vertices(5, [0, 1])).unwrap());
    assert!(!is_maximal(&k5, Predicate::MaxDegree(1), &VertexSet::from_vertices(5, [0])).unwrap());
    for s in &m {
        assert!(is_maximal(&k5, Predicate::MaxDegree(1), s).unwrap());
    }
    assert_eq!(count_maximal(&generators::moon_moser(6).unwrap(), Predicate::Clique).unwrap(), 9);
    assert_eq!(count_maximal(&generators::k5_union(10).unwrap(), Predicate::MaxDegree(1)).unwrap(), 100);
}

#[test]
fn clique_enumerator_values() {
    assert_eq!(enumerate_max_cliques(&generators::complete(6)).results, vec![VertexSet::full(6)]);
    let mm9 = generators::moon_moser(9).unwrap();
    assert_eq!(closure_number(&mm9).c, 7);
    assert_eq!(enumerate_max_cliques(&mm9).results.len(), 27);
    let (g, _) = generators::example1(2, 5);
    let want: Vec<VertexSet> = (3..8).map(|i| VertexSet::from_vertices(8, [0, 1, 2, i])).collect();
    assert_eq!(enumerate_max_cliques(&g).results, want);
    let c5 = generators::cycle(5).unwrap();
    let mis = enumerate_max_independent_sets(&c5).results;
    assert_eq!(mis.len(), 5);
    assert!(mis.iter().all(|s| s.len() == 2));
    assert_eq!(enumerate_max_independent_sets(&Graph::empty(4)).results, vec![VertexSet::full(4)]);
    assert_eq!(enumerate_max_independent_sets(&generators::complete(3)).results.len(), 3);
    assert_eq!(clique_count_bound(1, 1), 1.0);
    assert_eq!(clique_count_bound(10, 4), 300.0);
}

#[test]
fn plex_values() {
    let g = generators::random(10, 0.5, 2).unwrap();
    assert_eq!(enumerate_max_plexes(&g, 0).results, enumerate_max_cliques(&g).results);
    let c5 = generators::cycle(5).unwrap();
    assert_eq!(enumerate_max_plexes(&c5, 1).results.len(), 5);
    let (e, _) = generators::example1(2, 5);
    assert_eq!(enumerate_max_plexes(&e, 1).results, enumerate_maximal_bruteforce(&e, Predicate::Plex(1)).unwrap());
    assert!((plex_count_bound(10, 6, 1) - 2000.0).abs() < 1e-6);
    assert_eq!(plex_count_bound(10, 4, 0), 2.0 * clique_count_bound(10, 4));
}

#[test]
fn extension_values() {
    let k3 = generators::complete(3);
    let p = VertexSet::from_vertices(3, [0, 1]);
    let empty = ExtensionInstance { host: &k3, prefix: p.clone(), free: VertexSet::new(3), d: 1 };
    assert_eq!(extend_bounded_degree(&empty), vec![p.clone()]);
    let blocked = ExtensionInstance { host: &k3, prefix: p.clone(), free: VertexSet::from_vertices(3, [2]), d: 1 };
    assert_eq!(extend_bounded_degree(&blocked), vec![p]);
}

#[test]
fn star_values() {
    let stars = enumerate_proper_kstars(&Graph::empty(4), 1, &ComplementCliques);
    assert!(stars.iter().any(|s| s.head.is_empty() && s.tails == VertexSet::full(4)));
    let k13 = generators::complete_bipartite(1, 3);
    let centered = |k| {
        enumerate_proper_kstars(&k13, k, &ComplementCliques)
            .iter()
            .any(|s| s.head.to_vec() == vec![0] && s.tails.to_vec() == vec![1, 2, 3])
    };
    // Leaves see the whole one-vertex head, so this is a proper 2-star only.
    assert!(!centered(1));
    assert!(centered(2));
}

#[test]
fn partition_values() {
    let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
    let p = detect_good_partition(&two_edges, 0, 2).unwrap().unwrap();
    assert!(p.parts[0].is_empty());
    // In K4 two disjoint edges leave nothing behind; in K5 the fifth vertex sees both.
    assert!(detect_good_partition(&generators::complete(4), 0, 2).unwrap().is_some());
    assert!(detect_good_partition(&generators::complete(5), 0, 2).unwrap().is_none());
}

#[test]
fn treewidth_enumerator_values() {
    let g = generators::random(6, 0.6, 9).unwrap();
    let big = enumerate_bounded_cotw(&g, &TwEnumConfig::new(5, Mode::Exact)).unwrap();
    assert_eq!(big.results, vec![g.vertices()]);
    let sup = enumerate_bounded_cotw(&g, &TwEnumConfig::new(6, Mode::Superset)).unwrap();
    assert!(sup.results.contains(&g.vertices()));
    for seed in 0..8 {
        let g = generators::random(11, 0.6, seed).unwrap();
        let a = enumerate_bounded_cotw(&g, &TwEnumConfig::new(1, Mode::Exact)).unwrap();
        assert_eq!(a.results, enumerate_max_coforests(&g).unwrap().results);
    }
}

#[test]
fn local_enumerator_values() {
    let g = generators::random(6, 0.5, 2).unwrap();
    let sup = enumerate_bounded_local_cotw(&g, &TwEnumConfig::local(6, Mode::Superset)).unwrap();
    assert!(sup.results.contains(&g.vertices()));
    for seed in 0..10 {
        let g = generators::random(10, 0.7, seed).unwrap();
        let h = g.complement();
        let p = Predicate::LocalTreewidthAtMost { t: 1, radius: 5 };
        let want = enumerate_maximal_bruteforce(&h, p).unwrap();
        let sup = enumerate_bounded_local_cotw(&g, &TwEnumConfig::local(1, Mode::Superset)).unwrap();
        assert!(want.iter().all(|s| sup.results.binary_search(s).is_ok()), "seed {seed}");
        for s in &sup.results {
            let (sub, _) = h.induced(s);
            for r in 1..=5 {
                assert!(local_treewidth(&sub, r).unwrap() <= 1);
            }
        }
    }
}

#[test]
fn forest_enumerator_values() {
    let tree = generators::path(6).complement();
    assert_eq!(enumerate_max_coforests(&tree).unwrap().results, vec![VertexSet::full(6)]);
    let k33 = generators::complete_bipartite(3, 3);
    assert_eq!(enumerate_max_coforests(&k33).unwrap().results.len(), 9);
    assert!((forest_count_bound(10, 2) - 3.0 * 1000.0 * 1.8638).abs() < 1e-9);
    let g = generators::random(7, 0.3, 4).unwrap();
    let all = enumerate_bounded_codegen(&g, &DegenConfig { d: 6 }).unwrap();
    assert_eq!(all.results, vec![g.vertices()]);
}

#[test]
fn bound_scan_values() {
    let mis = max_count_over_all_graphs(3, Predicate::IndependentSet, 0).unwrap();
    assert_eq!(mis.max_count, 3);
    assert_eq!(mis.argmax_graphs, vec![write_edge_list(&generators::complete(3))]);
    let m5 = max_count_over_all_graphs(5, Predicate::MaxDegree(1), 0).unwrap();
    assert_eq!(m5.max_count, 10);
    assert!(m5.argmax_graphs.contains(&write_edge_list(&generators::complete(5))) || m5.argmax_total > 16);
    assert_eq!(count_maximal(&generators::complete(5), Predicate::MaxDegree(1)).unwrap(), 10);
    let m4 = max_count_over_all_graphs(4, Predicate::MaxDegree(1), 0).unwrap();
    assert!(m4.max_count <= 6);
    assert_eq!(m4.max_count, 6);
}

#[test]
fn kappa_table() {
    assert_eq!(kappa(0).table, Some(1.618));
    assert_eq!(kappa(1).table, Some(1.839));
    for d in 0..5 {
        let k = kappa(d);
        assert!((k.shifted_root - k.table.unwrap()).abs() < 1e-3);
    }
}

#[test]
fn lemma_values() {
    let g = disjoint(&generators::complete(2), &generators::complete(3));
    let m1 = |g: &Graph| count_maximal(g, Predicate::MaxDegree(1)).unwrap();
    assert_eq!(m1(&g), m1(&generators::complete(2)) * m1(&generators::complete(3)));
    assert_eq!(m1(&g), 3);
    let k4 = generators::complete(4);
    let k4e = Graph::from_edges(4, k4.edges().filter(|&e| e != (0, 1))).unwrap();
    assert!(m1(&k4) <= m1(&k4e));
    assert!(verify_m1_lemmas(&g).unwrap().all_hold());
}

#[test]
fn clique_plus_independent_counts() {
    // Every maximal set is the clique plus exactly four independent vertices.
    let counts: Vec<u64> = (4..=6).map(|n| verify_example1(2, n).unwrap().count).collect();
    assert_eq!(counts, vec![1, 5, 15]);
    let (g, _) = generators::example1(2, 5);
    let naive = naive_maximal(&g.masks(), |a, s| {
        let k = s.count_ones() as usize;
        let e: usize = (0..a.len()).filter(|&v| s >> v & 1 == 1).map(|v| (a[v] & s).count_ones() as usize).sum::<usize>() / 2;
        k * k.saturating_sub(1) / 2 - e <= k
    });
    assert!(naive.iter().all(|&s| s.count_ones() == 7 && s & 0b111 == 0b111));
    assert_eq!(naive.len(), 5);
}
