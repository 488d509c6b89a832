mod common;

use std::collections::BTreeSet;

use closedgraphs::closure::{closure_augment, closure_number, co_closure_check, co_closure_number};
use closedgraphs::codegen::{enumerate_bounded_codegen, enumerate_max_coforests, forest_count_bound, DegenConfig};
use closedgraphs::clique::{enumerate_max_cliques, enumerate_max_independent_sets};
use closedgraphs::cotw::{enumerate_bounded_cotw, Mode, TwEnumConfig};
use closedgraphs::io::{parse_edge_list, write_edge_list};
use closedgraphs::oracle::{enumerate_maximal_within, is_maximal};
use closedgraphs::plex::{enumerate_max_plexes, extend_bounded_degree, plex_count_bound, ExtensionInstance};
use closedgraphs::sparse::{enumerate_good_partition_sets, enumerate_proper_kstars, ComplementCliques, PartitionAnchor};
use closedgraphs::treewidth::{decomposition_from_order, elimination_width, treewidth, treewidth_exact, validate_decomposition};
use closedgraphs::{Graph, Predicate, VertexSet};
use common::*;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn complement_involution(g in graph(12)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), g.n() * (g.n() - 1) / 2);
    }

    #[test]
    fn edge_list_round_trip(g in graph(14)) {
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn bitset_matches_btreeset(a in proptest::collection::btree_set(0usize..130, 0..40), b in proptest::collection::btree_set(0usize..130, 0..40)) {
        let sa = VertexSet::from_vertices(130, a.iter().copied());
        let sb = VertexSet::from_vertices(130, b.iter().copied());
        let u: Vec<usize> = a.union(&b).copied().collect();
        let i: Vec<usize> = a.intersection(&b).copied().collect();
        let d: Vec<usize> = a.difference(&b).copied().collect();
        prop_assert_eq!((&sa | &sb).to_vec(), u);
        prop_assert_eq!((&sa & &sb).to_vec(), i.clone());
        prop_assert_eq!((&sa - &sb).to_vec(), d);
        prop_assert_eq!(sa.intersection_len(&sb), i.len());
        prop_assert_eq!(sa.is_subset(&sb), a.is_subset(&b));
        prop_assert_eq!(sa.complement().len(), 130 - a.len());
        prop_assert_eq!(sa.cmp(&sb), a.iter().collect::<Vec<_>>().cmp(&b.iter().collect::<Vec<_>>()));
    }

    #[test]
    fn degeneracy_bounds(g in graph(12), keep in any::<u16>()) {
        let (d, order) = g.degeneracy();
        prop_assert!(d <= g.max_degree());
        prop_assert_eq!(order.len(), g.n());
        prop_assert_eq!(d, naive_degeneracy(&g.masks(), (1u64 << g.n()) - 1));
        let s = VertexSet::from_mask(g.n(), keep as u64 & ((1u64 << g.n()) - 1));
        prop_assert!(g.induced(&s).0.degeneracy().0 <= d);
    }

    #[test]
    fn degenerate_edge_density(g in graph(12), keep in any::<u16>()) {
        // Every induced subgraph of a d-degenerate graph has at most d edges per vertex.
        let (d, _) = g.degeneracy();
        let s = VertexSet::from_mask(g.n(), keep as u64 & ((1u64 << g.n()) - 1));
        prop_assert!(g.edges_within(&s) <= d * s.len());
    }

    #[test]
    fn closure_number_is_tight(g in graph(12)) {
        let cn = closure_number(&g);
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                if !g.has_edge(u, v) {
                    prop_assert!(g.common_neighbors(u, v).len() < cn.c.max(1));
                }
            }
        }
        if let Some((u, v)) = cn.witness {
            prop_assert_eq!(g.common_neighbors(u, v).len(), cn.c - 1);
        }
        let h = g.complement();
        prop_assert!(co_closure_check(&h, cn.c).is_ok());
        prop_assert_eq!(co_closure_number(&h), cn.c);
    }

    #[test]
    fn augmentation_reaches_target(g in graph(12), c in 1usize..5) {
        let a = closure_augment(&g, c);
        prop_assert!(closure_number(&a).c <= c);
        prop_assert!(g.edges().all(|(u, v)| a.has_edge(u, v)));
    }

    #[test]
    fn cliques_are_maximal_and_bounded(g in graph(14)) {
        let r = enumerate_max_cliques(&g);
        let all: BTreeSet<_> = r.results.iter().collect();
        prop_assert_eq!(all.len(), r.results.len());
        for k in &r.results {
            prop_assert!(is_maximal(&g, Predicate::Clique, k).unwrap());
        }
        prop_assert!(r.candidates_generated as f64 <= r.bound_value);
        let mis = enumerate_max_independent_sets(&g.complement()).results;
        prop_assert_eq!(mis, r.results);
    }

    #[test]
    fn plexes_are_maximal_and_bounded(g in graph(11), d in 0usize..3) {
        let r = enumerate_max_plexes(&g, d);
        let c = closure_number(&g).c;
        for s in &r.results {
            prop_assert!(is_maximal(&g, Predicate::Plex(d), s).unwrap());
        }
        prop_assert!(r.results.len() as f64 <= plex_count_bound(g.n(), c, d));
    }

    #[test]
    fn extension_matches_prefix_filtered_oracle(g in graph(10), prefix in any::<u16>(), free in any::<u16>(), d in 1usize..3) {
        let n = g.n();
        let full = (1u64 << n) - 1;
        let p = VertexSet::from_mask(n, prefix as u64 & full);
        let f = VertexSet::from_mask(n, free as u64 & full);
        let inst = ExtensionInstance { host: &g, prefix: p.clone(), free: f.clone(), d };
        let got = extend_bounded_degree(&inst);
        let want = enumerate_maximal_within(&g, &p, &f, Predicate::MaxDegree(d)).unwrap();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn stars_have_maximal_tails(g in graph(9)) {
        for star in enumerate_proper_kstars(&g, 2, &ComplementCliques) {
            prop_assert!(g.is_independent(&star.tails));
            prop_assert!(star.head.is_disjoint(&star.tails));
            for b in &star.tails {
                prop_assert!(star.head.len() < 2 || g.neighbors(b).intersection_len(&star.head) < 2);
            }
            // No vertex can join the tails while keeping the star proper.
            for w in &(&star.head | &star.tails).complement() {
                let independent = g.neighbors(w).is_disjoint(&star.tails);
                let proper = star.head.len() < 2 || g.neighbors(w).intersection_len(&star.head) < 2;
                prop_assert!(!(independent && proper));
            }
        }
    }

    #[test]
    fn partition_family_within_kernel_bound(g in graph(10)) {
        let h = g.complement();
        let c = co_closure_number(&h);
        let edges: Vec<_> = h.edges().collect();
        for (i, &e) in edges.iter().enumerate() {
            for &f in &edges[i + 1..] {
                let anchor = PartitionAnchor { edges: vec![e, f], a0: h.empty_set(), l: 0 };
                let sets = enumerate_good_partition_sets(&h, &anchor, Predicate::Forest).unwrap();
                prop_assert!(sets.len() as f64 <= 2f64.powi(2 * (c as i32 - 1).max(0)));
            }
        }
    }

    #[test]
    fn decompositions_valid(g in graph(10), perm in any::<u64>()) {
        let td = treewidth_exact(&g).unwrap();
        prop_assert!(validate_decomposition(&g, &td).is_ok());
        prop_assert_eq!(td.width, treewidth_by_subsets(&g.masks()));
        let mut order: Vec<usize> = (0..g.n()).collect();
        let mut x = perm;
        for i in (1..order.len()).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1);
            order.swap(i, (x >> 33) as usize % (i + 1));
        }
        let any = decomposition_from_order(&g, &order);
        prop_assert!(validate_decomposition(&g, &any).is_ok());
        prop_assert_eq!(any.width, elimination_width(&g, &order));
        prop_assert_eq!(any.width, order_width(&g.masks(), &order));
        prop_assert!(any.width >= td.width);
        prop_assert!(g.degeneracy().0 <= td.width);
    }

    #[test]
    fn treewidth_monotone(g in graph(10), keep in any::<u16>()) {
        let s = VertexSet::from_mask(g.n(), keep as u64 & ((1u64 << g.n()) - 1));
        prop_assert!(treewidth(&g.induced(&s).0).unwrap() <= treewidth(&g).unwrap());
    }

    #[test]
    fn cotw_superset_contains_exact(g in graph(9), t in 1usize..3) {
        let ex = enumerate_bounded_cotw(&g, &TwEnumConfig::new(t, Mode::Exact)).unwrap();
        let sup = enumerate_bounded_cotw(&g, &TwEnumConfig::new(t, Mode::Superset)).unwrap();
        prop_assert!(ex.results.iter().all(|s| sup.results.binary_search(s).is_ok()));
        let h = g.complement();
        for s in &sup.results {
            prop_assert!(treewidth(&h.induced(s).0).unwrap() <= t);
        }
    }

    #[test]
    fn coforest_results(g in graph(10)) {
        let h = g.complement();
        let hm = h.masks();
        let r = enumerate_max_coforests(&g).unwrap();
        for s in &r.results {
            prop_assert!(naive_is_forest(&hm, s.as_mask()));
        }
        prop_assert!(r.results.len() as f64 <= forest_count_bound(g.n(), closure_number(&g).c));
        let naive = naive_maximal(&hm, naive_is_forest);
        prop_assert_eq!(r.results, masks_to_sets(g.n(), &naive));
    }

    #[test]
    fn codegen_results(g in graph(9), d in 1usize..3) {
        let h = g.complement();
        let hm = h.masks();
        let r = enumerate_bounded_codegen(&g, &DegenConfig { d }).unwrap();
        for s in &r.results {
            prop_assert!(naive_degeneracy(&hm, s.as_mask()) <= d);
        }
        let naive = naive_maximal(&hm, |a, s| naive_degeneracy(a, s) <= d);
        prop_assert_eq!(r.results, masks_to_sets(g.n(), &naive));
    }
}
