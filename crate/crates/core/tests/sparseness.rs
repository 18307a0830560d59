mod common;

use common::*;
use proptest::prelude::*;
use sparse_ramsey::experiments::conversions_hold;
use sparse_ramsey::sparseness::{
    degeneracy_ordering, exact_min_arrangeability, find_light_vertex, measure_certificate, peel_ordering,
    position_stats, PeelOutcome, VertexOrdering,
};
use sparse_ramsey::Graph;

#[test]
fn hereditary_density_bound_makes_peel_succeed() {
    let mut sparse = 0;
    for n in 1..=6 {
        for g in labeled_graphs(n) {
            if !hereditarily_sparse(&g) {
                continue;
            }
            sparse += 1;
            let PeelOutcome::Ordered(o) = peel_ordering(&g, 2, 2).unwrap() else {
                panic!("peel stuck on {:?}", g.edges().collect::<Vec<_>>());
            };
            let c = measure_certificate(&g, &o).unwrap();
            assert!(c.d <= 2 && c.delta <= 3);
        }
    }
    assert!(sparse > 1000);
}

#[test]
fn density_bound_on_whole_graph_is_not_enough() {
    let mut g = Graph::complete(4).edges().collect::<Vec<_>>();
    g.sort();
    let g = Graph::new(6, &g).unwrap();
    assert!(8 * g.edge_count() < 9 * g.n());
    assert!(!hereditarily_sparse(&g));
    assert!(matches!(peel_ordering(&g, 2, 2).unwrap(), PeelOutcome::Stuck { .. }));
}

#[test]
fn standard_families() {
    assert_eq!(degeneracy_ordering(&Graph::complete(6)).1, 5);
    assert_eq!(degeneracy_ordering(&Graph::cycle(9)).1, 2);
    assert_eq!(degeneracy_ordering(&Graph::complete_bipartite(3, 5)).1, 3);
    assert_eq!(degeneracy_ordering(&Graph::empty(4)).1, 0);
    assert_eq!(degeneracy_ordering(&Graph::empty(0)).1, 0);
}

proptest! {
    #[test]
    fn certificate_matches_definition((g, o) in graph_with_ordering(9)) {
        let c = measure_certificate(&g, &o).unwrap();
        prop_assert_eq!((c.d, c.delta, c.p), certificate_oracle(&g, o.order()));
    }

    #[test]
    fn conversions_per_ordering((g, o) in graph_with_ordering(10)) {
        let c = measure_certificate(&g, &o).unwrap();
        prop_assert!(conversions_hold(c.d, c.delta, c.p), "d={} Δ={} p={}", c.d, c.delta, c.p);
    }

    #[test]
    fn degeneracy_is_optimal(g in graph(7)) {
        let (o, k) = degeneracy_ordering(&g);
        prop_assert_eq!(k, degeneracy_oracle(&g));
        prop_assert_eq!(measure_certificate(&g, &o).unwrap().d, k);
    }

    #[test]
    fn degeneracy_matches_ordering_minimum(g in graph(6)) {
        prop_assert_eq!(degeneracy_ordering(&g).1, min_over_orderings(&g, |c| c.0));
    }

    #[test]
    fn exact_arrangeability_matches_enumeration(g in graph(7)) {
        prop_assert_eq!(exact_min_arrangeability(&g, 10).unwrap(), min_over_orderings(&g, |c| c.2));
    }

    #[test]
    fn peel_contract(g in graph(14), s in 1usize..=4, r in 1usize..=4) {
        if let PeelOutcome::Ordered(o) = peel_ordering(&g, s, r).unwrap() {
            let c = measure_certificate(&g, &o).unwrap();
            prop_assert!(c.d <= s && c.delta <= r + 1, "s={} r={} d={} Δ={}", s, r, c.d, c.delta);
        }
    }

    #[test]
    fn peel_stuck_residual_has_no_removable_vertex(g in graph(12)) {
        if let PeelOutcome::Stuck { residual } = peel_ordering(&g, 2, 2).unwrap() {
            let h = g.induced(&residual);
            for v in 0..h.n() {
                let d = h.degree(v);
                prop_assert!(d >= 2);
                prop_assert!(d > 2 || h.neighbors(v).iter().any(|&u| h.degree(u) > 2));
            }
        }
    }

    #[test]
    fn sparse_graphs_have_light_vertices(g in graph(12)) {
        if 8 * g.edge_count() < 9 * g.n() {
            let w = find_light_vertex(&g);
            prop_assert!(w.is_some_and(|w| w.verify(&g)));
        }
    }

    #[test]
    fn position_stats_left_sets_are_sorted_and_distinct((g, o) in graph_with_ordering(9)) {
        for i in 0..g.n() {
            let s = position_stats(&g, &o, i);
            prop_assert!(s.left_sets.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(s.left_sets.iter().all(|set| set.contains(&o.vertex_at(i))));
        }
    }

    #[test]
    fn ordering_serde_round_trip((_g, o) in graph_with_ordering(12)) {
        let json = serde_json::to_string(&o).unwrap();
        prop_assert_eq!(serde_json::from_str::<VertexOrdering>(&json).unwrap(), o);
    }
}
