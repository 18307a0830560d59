//! Strategies and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;
use proptest::prelude::*;
use sparse_ramsey::sparseness::VertexOrdering;
use sparse_ramsey::Graph;

pub fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
        let len = pairs.len();
        proptest::sample::subsequence(pairs, 0..=len).prop_map(move |e| Graph::new(n, &e).unwrap())
    })
}

pub fn graph_with_ordering(max_n: usize) -> impl Strategy<Value = (Graph, VertexOrdering)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|(g, o)| (g, VertexOrdering::new(o).unwrap()))
    })
}

/// All labeled graphs on `n` vertices over lexicographic pairs.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    (0..1u64 << pairs.len()).map(move |mask| {
        let e: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
        Graph::new(n, &e).unwrap()
    })
}

/// `(d, Δ, p)` of an ordering, straight from the definitions.
pub fn certificate_oracle(g: &Graph, order: &[usize]) -> (usize, usize, usize) {
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let (mut d, mut delta, mut p) = (0, 0, 0);
    for (i, &v) in order.iter().enumerate() {
        let back = (0..n).filter(|&u| g.has_edge(u, v) && pos[u] < i).count();
        let mut sets = BTreeSet::new();
        for u in (0..n).filter(|&u| g.has_edge(u, v) && pos[u] > i) {
            let left: BTreeSet<usize> = (0..n).filter(|&w| g.has_edge(u, w) && pos[w] <= i).collect();
            sets.insert(left);
        }
        let union: BTreeSet<usize> = sets.iter().flatten().copied().collect();
        d = d.max(back);
        delta = delta.max(sets.len());
        p = p.max(union.len());
    }
    (d, delta, p)
}

/// Minimum over all orderings of one of the certificate quantities.
pub fn min_over_orderings(g: &Graph, pick: impl Fn((usize, usize, usize)) -> usize) -> usize {
    (0..g.n()).permutations(g.n()).map(|o| pick(certificate_oracle(g, &o))).min().unwrap_or(0)
}

/// Largest minimum degree over induced subgraphs.
pub fn degeneracy_oracle(g: &Graph) -> usize {
    let n = g.n();
    (1..1u32 << n)
        .map(|mask| {
            let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            vs.iter().map(|&v| vs.iter().filter(|&&u| g.has_edge(u, v)).count()).min().unwrap()
        })
        .max()
        .unwrap_or(0)
}

/// Every induced subgraph `H` has `8 e(H) < 9 |H|`.
pub fn hereditarily_sparse(g: &Graph) -> bool {
    let n = g.n();
    (1..1u32 << n).all(|mask| {
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let e = vs.iter().tuple_combinations().filter(|(&a, &b)| g.has_edge(a, b)).count();
        8 * e < 9 * vs.len()
    })
}
