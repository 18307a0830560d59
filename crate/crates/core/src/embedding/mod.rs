//! Embeddings of small patterns into hosts: dependent random choice, nested
//! subset extraction, three greedy embedders, sparsity parameters, and
//! Ramsey bound calculators.

mod bounds;
mod drc;
mod greedy;
mod sparsity;

pub use bounds::{
    main_delta, ramsey_bound_general, ramsey_bound_grr, ramsey_bound_main, BoundParams, BoundValue, GeneralConstants,
};
pub use drc::{
    dependent_random_choice, nested_subsets, BadCount, DrcParams, DrcReport, LevelStats, NestedParams, NestedReport,
    RoundRecord, EXACT_TSET_BUDGET,
};
pub use greedy::{
    goodset_greedy_embed, grr_greedy_embed, multipartite_greedy_embed, ConstraintReport, EmbedFailure, EmbedOutcome,
    GoodsetReport, MultipartiteReport, GOODSET_BUDGET,
};
pub use sparsity::{
    check_sparse, sparse_witness, sparsity_transform, transform_alpha_rho, SparseCheckMode, SparsityCheck,
    SparsityParams, TransformedSparsity, CHECK_SPARSE_MAX_N,
};

use fixedbitset::FixedBitSet;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::sparseness::{degeneracy_ordering, VertexOrdering};

/// An injective, possibly partial map from pattern vertices to host vertices.
///
/// Serializes as an array of `[pattern, host]` pairs for the mapped vertices.
/// Trailing unmapped pattern vertices are not stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Embedding {
    map: Vec<Option<usize>>,
}

impl Embedding {
    pub fn from_total(map: Vec<usize>) -> Self {
        Embedding { map: map.into_iter().map(Some).collect() }
    }

    pub fn from_partial(mut map: Vec<Option<usize>>) -> Self {
        while map.last() == Some(&None) {
            map.pop();
        }
        Embedding { map }
    }

    pub fn get(&self, v: usize) -> Option<usize> {
        self.map.get(v).copied().flatten()
    }

    pub fn mapped_count(&self) -> usize {
        self.map.iter().filter(|m| m.is_some()).count()
    }

    pub fn is_total(&self, pattern_n: usize) -> bool {
        self.map.len() == pattern_n && self.map.iter().all(Option::is_some)
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.map.iter().enumerate().filter_map(|(v, m)| m.map(|h| (v, h))).collect()
    }

    /// Independent check: images in range and distinct, every pattern edge
    /// with both ends mapped lands on a host edge, and, when `classes` is
    /// given as `(pattern colors, host parts)`, each vertex of color `i`
    /// lands in part `i`.
    pub fn verify(&self, pattern: &Graph, host: &Graph, classes: Option<(&[usize], &HostPartition)>) -> Result<()> {
        if self.map.len() > pattern.n() {
            return Err(Error::Invariant(format!(
                "map covers {} pattern vertices but the pattern has {}",
                self.map.len(),
                pattern.n()
            )));
        }
        let mut seen = vec![false; host.n()];
        for (v, h) in self.pairs() {
            if h >= host.n() {
                return Err(Error::Invariant(format!("pattern vertex {v} maps outside the host ({h})")));
            }
            if std::mem::replace(&mut seen[h], true) {
                return Err(Error::Invariant(format!("host vertex {h} used twice")));
            }
        }
        for (a, b) in pattern.edges() {
            if let (Some(x), Some(y)) = (self.get(a), self.get(b)) {
                if !host.has_edge(x, y) {
                    return Err(Error::Invariant(format!("pattern edge ({a},{b}) maps to non-edge ({x},{y})")));
                }
            }
        }
        if let Some((colors, parts)) = classes {
            for (v, h) in self.pairs() {
                let c = *colors.get(v).ok_or_else(|| Error::Invariant(format!("no color for pattern vertex {v}")))?;
                if parts.part_of(h) != Some(c) {
                    return Err(Error::Invariant(format!("pattern vertex {v} of color {c} placed outside part {c}")));
                }
            }
        }
        Ok(())
    }
}

impl Serialize for Embedding {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.pairs().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Embedding {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs = Vec::<(usize, usize)>::deserialize(d)?;
        let len = pairs.iter().map(|p| p.0 + 1).max().unwrap_or(0);
        let mut map = vec![None; len];
        for (v, h) in pairs {
            if map[v].replace(h).is_some() {
                return Err(serde::de::Error::custom(format!("pattern vertex {v} mapped twice")));
            }
        }
        Ok(Embedding::from_partial(map))
    }
}

/// Size and edge statistics of one host part.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PartQuality {
    pub size: usize,
    pub internal_edges: usize,
    /// Edges from this part to the other parts over the number of such pairs.
    pub outside_density: f64,
}

/// Disjoint vertex sets of a host, indexed by pattern color.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HostPartition {
    parts: Vec<VertexSet>,
}

impl HostPartition {
    pub fn new(parts: Vec<VertexSet>, host_n: usize) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidArgument("a host partition needs at least one part".into()));
        }
        let mut owner = vec![false; host_n];
        for p in &parts {
            p.validate(host_n)?;
            for v in p.iter() {
                if std::mem::replace(&mut owner[v], true) {
                    return Err(Error::InvalidArgument(format!("vertex {v} lies in two parts")));
                }
            }
        }
        Ok(HostPartition { parts })
    }

    /// `q` parts of size `⌊n/q⌋` from a seeded shuffle of `0..n`.
    pub fn random_equal(n: usize, q: usize, seed: u64) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidArgument("q must be positive".into()));
        }
        let mut vs: Vec<usize> = (0..n).collect();
        vs.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let size = n / q;
        let parts =
            (0..q).map(|i| VertexSet::from_iter_unsorted(vs[i * size..(i + 1) * size].iter().copied())).collect();
        HostPartition::new(parts, n)
    }

    /// Consecutive blocks `0..s, s..2s, ...`.
    pub fn blocks(q: usize, size: usize) -> Self {
        HostPartition { parts: (0..q).map(|i| VertexSet::from_sorted((i * size..(i + 1) * size).collect())).collect() }
    }

    pub fn q(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> &VertexSet {
        &self.parts[i]
    }

    pub fn part_of(&self, v: usize) -> Option<usize> {
        self.parts.iter().position(|p| p.contains(v))
    }

    pub fn union(&self) -> VertexSet {
        VertexSet::from_iter_unsorted(self.parts.iter().flat_map(|p| p.iter()))
    }

    pub fn quality(&self, g: &Graph) -> Vec<PartQuality> {
        let all = self.union();
        self.parts
            .iter()
            .map(|p| {
                let rest = all.difference(p);
                let pairs = p.len() * rest.len();
                let cross = g.edges_between(p, &rest);
                PartQuality {
                    size: p.len(),
                    internal_edges: g.edges_within(p),
                    outside_density: if pairs == 0 { 0.0 } else { cross as f64 / pairs as f64 },
                }
            })
            .collect()
    }

    pub(crate) fn bitsets(&self, n: usize) -> Vec<FixedBitSet> {
        self.parts
            .iter()
            .map(|p| {
                let mut b = FixedBitSet::with_capacity(n);
                p.iter().for_each(|v| b.insert(v));
                b
            })
            .collect()
    }
}

/// A pattern graph with an embedding order and a proper coloring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredPattern {
    pub graph: Graph,
    pub ordering: VertexOrdering,
    pub colors: Vec<usize>,
}

impl ColoredPattern {
    pub fn new(graph: Graph, ordering: VertexOrdering, colors: Vec<usize>) -> Result<Self> {
        if ordering.len() != graph.n() || colors.len() != graph.n() {
            return Err(Error::InvalidArgument("ordering and coloring must cover every pattern vertex".into()));
        }
        if let Some((u, v)) = graph.edges().find(|&(u, v)| colors[u] == colors[v]) {
            return Err(Error::Precondition(format!("coloring is not proper: edge ({u},{v}) is monochromatic")));
        }
        Ok(ColoredPattern { graph, ordering, colors })
    }

    /// Degeneracy ordering with first-fit coloring along it.
    pub fn greedy(graph: Graph) -> Self {
        let (ordering, _) = degeneracy_ordering(&graph);
        let colors = greedy_coloring(&graph, &ordering);
        ColoredPattern { graph, ordering, colors }
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn color_count(&self) -> usize {
        self.colors.iter().max().map_or(0, |c| c + 1)
    }

    /// Largest number of earlier neighbors along the ordering.
    pub fn back_degree(&self) -> usize {
        (0..self.n()).map(|i| self.earlier_neighbors(i).len()).max().unwrap_or(0)
    }

    /// Pattern vertices adjacent to the vertex at position `i` that come earlier.
    pub(crate) fn earlier_neighbors(&self, i: usize) -> Vec<usize> {
        let v = self.ordering.vertex_at(i);
        self.graph.neighbors(v).iter().copied().filter(|&u| self.ordering.position(u) < i).collect()
    }

    /// Pattern vertices adjacent to the vertex at position `i` that come later.
    pub(crate) fn later_neighbors(&self, i: usize) -> Vec<usize> {
        let v = self.ordering.vertex_at(i);
        self.graph.neighbors(v).iter().copied().filter(|&u| self.ordering.position(u) > i).collect()
    }

    pub(crate) fn check_parts(&self, parts: &HostPartition, host_n: usize) -> Result<()> {
        if self.color_count() > parts.q() {
            return Err(Error::Precondition(format!(
                "the pattern coloring uses {} colors but the host has {} parts",
                self.color_count(),
                parts.q()
            )));
        }
        if let Some(v) = parts.parts().iter().flat_map(|p| p.iter()).find(|&v| v >= host_n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: host_n });
        }
        Ok(())
    }
}

/// First-fit coloring in the given order; uses at most one more color than
/// the ordering's back-degree.
pub fn greedy_coloring(g: &Graph, ordering: &VertexOrdering) -> Vec<usize> {
    let mut colors = vec![usize::MAX; g.n()];
    for &v in ordering.order() {
        let taken: Vec<usize> = g.neighbors(v).iter().map(|&u| colors[u]).filter(|&c| c != usize::MAX).collect();
        colors[v] = (0..).find(|c| !taken.contains(c)).expect("some color is free");
    }
    colors
}

/// Vertex `i` joins `min(i, d)` distinct uniformly chosen earlier vertices,
/// so the identity ordering has back-degree at most `d`.
pub fn random_degenerate_pattern(n: usize, d: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 1..n {
        for u in rand::seq::index::sample(&mut rng, i, d.min(i)) {
            edges.push((u, i));
        }
    }
    Graph::new(n, &edges).expect("generated edges are valid")
}

/// A seeded random pattern together with its identity ordering and first-fit coloring.
pub fn random_colored_pattern<R: Rng>(n: usize, d: usize, rng: &mut R) -> ColoredPattern {
    let graph = random_degenerate_pattern(n, d, rng.random());
    let ordering = VertexOrdering::identity(n);
    let colors = greedy_coloring(&graph, &ordering);
    ColoredPattern { graph, ordering, colors }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validator_catches_each_defect() {
        let p = Graph::path(3);
        let host = Graph::path(4);
        assert!(Embedding::from_total(vec![0, 1, 2]).verify(&p, &host, None).is_ok());
        assert!(Embedding::from_total(vec![0, 2, 1]).verify(&p, &host, None).is_err());
        assert!(Embedding::from_total(vec![0, 1, 0]).verify(&p, &host, None).is_err());
        assert!(Embedding::from_total(vec![0, 1, 9]).verify(&p, &host, None).is_err());
        assert!(Embedding::from_partial(vec![Some(0), None, Some(3)]).verify(&p, &host, None).is_ok());
        let parts = HostPartition::new(vec![VertexSet::from(vec![0, 2]), VertexSet::from(vec![1, 3])], 4).unwrap();
        let colors = [0, 1, 0];
        assert!(Embedding::from_total(vec![0, 1, 2]).verify(&p, &host, Some((&colors, &parts))).is_ok());
        assert!(Embedding::from_total(vec![1, 2, 3]).verify(&p, &host, Some((&colors, &parts))).is_err());
    }

    #[test]
    fn embedding_json_is_pairs() {
        let e = Embedding::from_total(vec![4, 2]);
        assert_eq!(serde_json::to_string(&e).unwrap(), "[[0,4],[1,2]]");
        let back: Embedding = serde_json::from_str("[[1,2],[0,4]]").unwrap();
        assert_eq!(back, e);
        assert!(serde_json::from_str::<Embedding>("[[0,1],[0,2]]").is_err());
    }

    #[test]
    fn partitions() {
        assert!(HostPartition::new(vec![VertexSet::from(vec![0, 1]), VertexSet::from(vec![1])], 3).is_err());
        assert!(HostPartition::new(vec![], 3).is_err());
        let p = HostPartition::random_equal(10, 3, 1).unwrap();
        assert_eq!(p.parts().iter().map(VertexSet::len).collect::<Vec<_>>(), vec![3, 3, 3]);
        assert_eq!(p.union().len(), 9);
        let q = HostPartition::blocks(2, 3);
        assert_eq!(q.part_of(4), Some(1));
        let g = Graph::complete_bipartite(3, 3);
        let quality = q.quality(&g);
        assert_eq!(quality[0].internal_edges, 0);
        assert_eq!(quality[0].outside_density, 1.0);
    }

    #[test]
    fn greedy_coloring_is_proper() {
        for seed in 0..20 {
            let g = random_degenerate_pattern(30, 2, seed);
            let cp = ColoredPattern::greedy(g.clone());
            assert!(cp.color_count() <= 3);
            assert!(ColoredPattern::new(g, cp.ordering.clone(), cp.colors.clone()).is_ok());
            assert!(cp.back_degree() <= 2);
        }
        assert!(ColoredPattern::new(Graph::complete(3), VertexOrdering::identity(3), vec![0, 1, 0]).is_err());
    }
}

/// Serde through `Display`/`FromStr`, for big integers and rationals.
pub(crate) mod as_text {
    use std::fmt::Display;
    use std::str::FromStr;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, T, D>(d: D) -> Result<T, D::Error>
    where
        T: FromStr,
        T::Err: Display,
        D: Deserializer<'de>,
    {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}
