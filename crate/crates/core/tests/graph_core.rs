mod common;

use std::collections::BTreeSet;

use common::*;
use num_rational::Ratio;
use proptest::prelude::*;
use sparse_ramsey::{common_neighborhood, density_between, multi_density, Error, Graph, VertexSet};

fn set(max: usize) -> impl Strategy<Value = BTreeSet<usize>> {
    proptest::collection::btree_set(0..max, 0..max)
}

#[test]
fn parse_errors_are_reported() {
    assert!(matches!(Graph::parse_edge_list("3 1\n0 3\n"), Err(Error::VertexOutOfRange { vertex: 3, n: 3 })));
    assert!(matches!(Graph::parse_edge_list("3 1\n1 1\n"), Err(Error::SelfLoop(1))));
    assert!(matches!(Graph::parse_edge_list("3 2\n0 1\n"), Err(Error::Parse { .. })));
    assert!(matches!(Graph::parse_edge_list("# only a comment\n"), Err(Error::Parse { .. })));
    assert!(matches!(Graph::parse_edge_list("2 1\n0 x\n"), Err(Error::Parse { line: 2, .. })));
}

#[test]
fn bipartite_header_round_trips() {
    let g = Graph::parse_edge_list("# bipartite 2\n4 2\n0 2\n1 3\n").unwrap();
    assert_eq!(g.bipartition().unwrap().left.as_slice(), &[0, 1]);
    assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    assert!(Graph::parse_edge_list("# bipartite 2\n4 1\n0 1\n").is_err());
}

#[test]
fn densities_of_small_cases() {
    let k33 = Graph::complete_bipartite(3, 3);
    let a = VertexSet::from_iter_unsorted([0, 1, 2]);
    let b = VertexSet::from_iter_unsorted([3, 4, 5]);
    assert_eq!(density_between(&k33, &a, &b).unwrap().pair_density, Ratio::from_integer(1));
    assert_eq!(
        density_between(&k33, &a, &a).map_err(|e| e.to_string()).unwrap_err(),
        "precondition violated: parts 0 and 1 overlap"
    );
    let parts =
        [VertexSet::from_iter_unsorted([0]), VertexSet::from_iter_unsorted([1, 2]), VertexSet::from_iter_unsorted([3])];
    let r = multi_density(&k33, &parts).unwrap();
    // pairs: (0|1,2) 0 of 2, (0|3) 1 of 1, (1,2|3) 2 of 2
    assert_eq!(r.multi_density, Ratio::new(3, 5));
    assert_eq!(r.pair_density, Ratio::new(2, 3));
    assert!(multi_density(&k33, &parts[..1]).is_err());
}

proptest! {
    #[test]
    fn set_algebra_matches_btreeset(a in set(40), b in set(40)) {
        let (va, vb) = (VertexSet::from_iter_unsorted(a.iter().copied()), VertexSet::from_iter_unsorted(b.iter().copied()));
        let collect = |s: VertexSet| s.iter().collect::<BTreeSet<_>>();
        prop_assert_eq!(collect(va.union(&vb)), a.union(&b).copied().collect());
        prop_assert_eq!(collect(va.intersection(&vb)), a.intersection(&b).copied().collect());
        prop_assert_eq!(collect(va.difference(&vb)), a.difference(&b).copied().collect());
        prop_assert_eq!(va.is_subset(&vb), a.is_subset(&b));
        prop_assert_eq!(va.is_disjoint(&vb), a.is_disjoint(&b));
        prop_assert_eq!(va.len(), a.len());
    }

    #[test]
    fn edge_list_round_trip(g in graph(15)) {
        let text = g.to_edge_list();
        prop_assert_eq!(Graph::parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn adjacency_is_symmetric_and_sorted(g in graph(15)) {
        for v in 0..g.n() {
            let nb = g.neighbors(v);
            prop_assert!(nb.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(nb.iter().all(|&u| g.has_edge(u, v) && g.neighbors(u).contains(&v)));
        }
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
    }

    #[test]
    fn common_neighborhood_matches_definition(g in graph(14), t in set(14)) {
        let t: BTreeSet<usize> = t.into_iter().filter(|&v| v < g.n()).collect();
        let got = common_neighborhood(&g, &VertexSet::from_iter_unsorted(t.iter().copied())).unwrap();
        let want: BTreeSet<usize> = (0..g.n()).filter(|&w| t.iter().all(|&v| g.has_edge(v, w))).collect();
        prop_assert_eq!(got.iter().collect::<BTreeSet<_>>(), want);
    }

    #[test]
    fn induced_and_counts_agree(g in graph(14), s in set(14), r in set(14)) {
        let s: BTreeSet<usize> = s.into_iter().filter(|&v| v < g.n()).collect();
        let r: BTreeSet<usize> = r.into_iter().filter(|&v| v < g.n() && !s.contains(&v)).collect();
        let vs = VertexSet::from_iter_unsorted(s.iter().copied());
        let vr = VertexSet::from_iter_unsorted(r.iter().copied());
        let within = g.edges().filter(|(u, v)| s.contains(u) && s.contains(v)).count();
        let between = g.edges().filter(|(u, v)| (s.contains(u) && r.contains(v)) || (s.contains(v) && r.contains(u))).count();
        prop_assert_eq!(g.edges_within(&vs), within);
        prop_assert_eq!(g.induced(&vs).edge_count(), within);
        prop_assert_eq!(g.edges_between(&vs, &vr), between);
        if !s.is_empty() && !r.is_empty() {
            let d = density_between(&g, &vs, &vr).unwrap();
            prop_assert_eq!(d.multi_density, Ratio::new(between as u128, (s.len() * r.len()) as u128));
        }
    }

    #[test]
    fn permuting_preserves_edge_count(g in graph(12), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.sort_by_key(|&v| (v as u64).wrapping_mul(seed | 1).rotate_left(17));
        let h = g.permuted(&perm);
        prop_assert_eq!(h.edge_count(), g.edge_count());
        prop_assert!(g.edges().all(|(u, v)| h.has_edge(perm[u], perm[v])));
    }
}
