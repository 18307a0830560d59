mod common;

use std::collections::BTreeSet;

use common::*;
use itertools::Itertools;
use proptest::prelude::*;
use sparse_ramsey::random::{
    arrangeability_witness, check_small_subgraph_density, closure_f, closure_f_with_priority, cool_ordering,
    count_high_degree, count_k23_pairs, sample_gnp, DensityCheckOptions, RandomGraphSpec,
};
use sparse_ramsey::sparseness::measure_certificate;
use sparse_ramsey::{Graph, VertexSet};

/// Adds any outside vertex with two neighbors inside until none is left.
fn closure_oracle(g: &Graph, s: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut set = s.clone();
    loop {
        let next =
            (0..g.n()).find(|&v| !set.contains(&v) && g.neighbors(v).iter().filter(|u| set.contains(u)).count() >= 2);
        match next {
            Some(v) => {
                set.insert(v);
            }
            None => return set,
        }
    }
}

fn graph_and_set(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), proptest::collection::btree_set(0..n.max(1), 0..=n))
            .prop_map(|(g, s)| (g.clone(), VertexSet::from_iter_unsorted(s.into_iter().filter(|&v| v < g.n()))))
    })
}

#[test]
fn sampler_is_deterministic_and_seed_sensitive() {
    let a = sample_gnp(&RandomGraphSpec::gnp(500, 0.02, 9)).unwrap();
    let b = sample_gnp(&RandomGraphSpec::gnp(500, 0.02, 9)).unwrap();
    let c = sample_gnp(&RandomGraphSpec::gnp(500, 0.02, 10)).unwrap();
    assert_eq!(a, b);
    assert_ne!(a, c);
    let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    assert_eq!(single.install(|| sample_gnp(&RandomGraphSpec::gnp(500, 0.02, 9)).unwrap()), a);
}

#[test]
fn sampler_edge_counts_are_binomial() {
    // mean C(2000,2)·0.005 = 9995, sd ≈ 99.7
    for seed in 0..5 {
        let g = sample_gnp(&RandomGraphSpec::gnp(2000, 0.005, seed)).unwrap();
        assert!((g.edge_count() as f64 - 9995.0).abs() < 5.0 * 99.7, "seed {seed}: {}", g.edge_count());
    }
    let full = sample_gnp(&RandomGraphSpec::gnp(30, 1.0, 0)).unwrap();
    assert_eq!(full, Graph::complete(30));
    assert_eq!(sample_gnp(&RandomGraphSpec::gnp(30, 0.0, 0)).unwrap().edge_count(), 0);
    assert!(sample_gnp(&RandomGraphSpec::gnp(30, 1.5, 0)).is_err());
}

#[test]
fn bipartite_sampler_respects_classes() {
    let g = sample_gnp(&RandomGraphSpec::bipartite(200, 0.1, 3)).unwrap();
    assert_eq!(g.n(), 400);
    assert!(g.edges().all(|(u, v)| u < 200 && v >= 200));
    assert_eq!(g.bipartition().unwrap().left.len(), 200);
    // mean 4000, sd ≈ 60
    assert!((g.edge_count() as f64 - 4000.0).abs() < 300.0);
}

#[test]
fn cool_ordering_on_sparse_random_graph() {
    let g = sample_gnp(&RandomGraphSpec::average_degree(3000, 4.0, 1)).unwrap();
    let c = cool_ordering(&g, 4).unwrap();
    assert!(c.certificate.d <= 64 && c.certificate.delta <= 64);
    assert_eq!(c.high_degree.len(), count_high_degree(&g, 64));
    let prefix: BTreeSet<usize> = c.certificate.ordering.order()[..c.closure.len()].iter().copied().collect();
    assert_eq!(prefix, c.closure.iter().collect());
    assert!(cool_ordering(&g, 0).is_err());
}

#[test]
fn density_checker_finds_small_dense_sets() {
    // K4 minus an edge: 5 edges on 4 vertices, 40 >= 36
    let g = Graph::new(10, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (5, 6), (6, 7)]).unwrap();
    let r = check_small_subgraph_density(&g, 4, DensityCheckOptions::default());
    assert!(!r.passed());
    assert_eq!(r.witness.unwrap().as_slice(), &[0, 1, 2, 3]);
    assert!(check_small_subgraph_density(&g, 3, DensityCheckOptions::default()).passed());
    assert!(check_small_subgraph_density(&Graph::cycle(12), 11, DensityCheckOptions::default()).passed());
    // a chorded 8-cycle has exactly 9t/8 edges
    let mut theta: Vec<_> = Graph::cycle(8).edges().collect();
    theta.push((0, 4));
    let theta = Graph::new(8, &theta).unwrap();
    assert!(!check_small_subgraph_density(&theta, 8, DensityCheckOptions::default()).passed());
    assert!(check_small_subgraph_density(&theta, 7, DensityCheckOptions::default()).passed());
}

proptest! {
    #[test]
    fn closure_matches_fixpoint((g, s) in graph_and_set(12)) {
        let r = closure_f(&g, &s).unwrap();
        let want = closure_oracle(&g, &s.iter().collect());
        prop_assert_eq!(r.closure.iter().collect::<BTreeSet<_>>(), want);
        prop_assert_eq!(r.closure.len(), s.len() + r.added.len());
    }

    #[test]
    fn closure_is_idempotent((g, s) in graph_and_set(12)) {
        let once = closure_f(&g, &s).unwrap().closure;
        let twice = closure_f(&g, &once).unwrap();
        prop_assert_eq!(&twice.closure, &once);
        prop_assert!(twice.added.is_empty());
    }

    #[test]
    fn closure_is_monotone((g, s) in graph_and_set(12), extra in proptest::collection::vec(0usize..12, 0..4)) {
        let bigger = s.union(&VertexSet::from_iter_unsorted(extra.into_iter().filter(|&v| v < g.n())));
        let a = closure_f(&g, &s).unwrap().closure;
        let b = closure_f(&g, &bigger).unwrap().closure;
        prop_assert!(a.is_subset(&b));
    }

    #[test]
    fn closure_ignores_insertion_order((g, s) in graph_and_set(12), salt in any::<u64>()) {
        let a = closure_f(&g, &s).unwrap().closure;
        let b = closure_f_with_priority(&g, &s, |v| (v as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ salt).unwrap();
        prop_assert_eq!(a, b.closure);
    }

    #[test]
    fn closure_added_vertices_have_two_earlier_neighbors((g, s) in graph_and_set(12)) {
        let r = closure_f(&g, &s).unwrap();
        let mut inside: BTreeSet<usize> = s.iter().collect();
        for &v in &r.added {
            prop_assert!(g.neighbors(v).iter().filter(|u| inside.contains(u)).count() >= 2);
            inside.insert(v);
        }
    }

    #[test]
    fn k23_count_matches_pairs(g in graph(12)) {
        let naive = (0..g.n()).tuple_combinations()
            .filter(|&(u, v)| (0..g.n()).filter(|&w| g.has_edge(u, w) && g.has_edge(v, w)).count() >= 3)
            .count() as u64;
        prop_assert_eq!(count_k23_pairs(&g), naive);
    }

    #[test]
    fn density_checker_matches_subset_enumeration(g in graph(9), cap in 1usize..=9) {
        let n = g.n();
        let dense = (1..1u32 << n).any(|mask| {
            let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let e = vs.iter().tuple_combinations().filter(|(&a, &b)| g.has_edge(a, b)).count();
            vs.len() <= cap && 8 * e >= 9 * vs.len()
        });
        let r = check_small_subgraph_density(&g, cap, DensityCheckOptions::default());
        prop_assert_eq!(r.passed(), !dense);
        if let Some(w) = r.witness {
            prop_assert!(w.len() <= cap && 8 * g.edges_within(&w) >= 9 * w.len());
        }
    }

    #[test]
    fn arrangeability_witness_is_a_lower_bound((g, o) in graph_with_ordering(14)) {
        let w = arrangeability_witness(&g, &o).unwrap();
        prop_assert!(w.value <= measure_certificate(&g, &o).unwrap().p);
    }
}
