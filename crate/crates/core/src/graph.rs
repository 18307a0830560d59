//! Simple undirected graphs, vertex sets, densities and edge-list I/O.
//!
//! A [`Graph`] is immutable once built. Adjacency is stored in compressed
//! sparse row form with every neighbor list sorted, so neighborhoods can be
//! intersected by merging. Graphs on at most [`DEFAULT_MIRROR_CAP`] vertices
//! also carry a one-word-per-vertex bitset mirror used by the exhaustive
//! searches; every query answers identically with or without it.

use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest vertex count for which the single-word bitset mirror is built.
pub const DEFAULT_MIRROR_CAP: usize = 64;

/// A set of vertex indices, kept sorted and free of duplicates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// Builds a set from arbitrary indices; duplicates collapse.
    pub fn from_iter_unsorted<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    /// `0..n` as a set.
    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub(crate) fn from_sorted(v: Vec<usize>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        VertexSet(v)
    }

    /// Checks that every member is a vertex of a graph on `n` vertices.
    pub fn validate(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        let mut it = other.0.iter().peekable();
        'outer: for &v in &self.0 {
            while let Some(&&w) = it.peek() {
                if w < v {
                    it.next();
                } else if w == v {
                    it.next();
                    continue 'outer;
                } else {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_iter_unsorted(self.iter().chain(other.iter()))
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(intersect_sorted(&self.0, &other.0))
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|&v| !other.contains(v)).collect())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_iter_unsorted(iter)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        VertexSet::from_iter_unsorted(v)
    }
}

pub(crate) fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len().min(b.len()));
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Two disjoint classes covering every vertex, with all edges crossing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub left: VertexSet,
    pub right: VertexSet,
}

impl Bipartition {
    /// `left = 0..k`, `right = k..n`.
    pub fn split_at(k: usize, n: usize) -> Self {
        Bipartition { left: VertexSet((0..k).collect()), right: VertexSet((k..n).collect()) }
    }
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    offsets: Vec<usize>,
    targets: Vec<usize>,
    bipartition: Option<Bipartition>,
    mirror: Option<Vec<u64>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.offsets == other.offsets
            && self.targets == other.targets
            && self.bipartition == other.bipartition
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an edge list. Duplicate and reversed pairs collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut pairs = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            pairs.push((u.min(v), u.max(v)));
        }
        pairs.sort_unstable();
        pairs.dedup();
        Ok(Self::from_canonical_pairs(n, &pairs))
    }

    pub fn empty(n: usize) -> Self {
        Self::from_canonical_pairs(n, &[])
    }

    pub fn complete(n: usize) -> Self {
        let pairs: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Self::from_canonical_pairs(n, &pairs)
    }

    /// Complete bipartite graph with `left = 0..a` and `right = a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let pairs: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
        Self::from_canonical_pairs(a + b, &pairs)
            .with_bipartition(Bipartition::split_at(a, a + b))
            .expect("complete bipartite edges cross the split")
    }

    pub fn path(n: usize) -> Self {
        let pairs: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_canonical_pairs(n, &pairs)
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Self::new(n, &edges).expect("cycle edges are valid")
    }

    /// `pairs` must hold `u < v < n`, sorted and unique.
    pub(crate) fn from_canonical_pairs(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut degree = vec![0usize; n];
        for &(u, v) in pairs {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut targets = vec![0usize; offsets[n]];
        // Lower partners first, then upper ones; each pass visits partners in
        // increasing order, so every row comes out sorted.
        for &(u, v) in pairs {
            targets[fill[v]] = u;
            fill[v] += 1;
        }
        for &(u, v) in pairs {
            targets[fill[u]] = v;
            fill[u] += 1;
        }
        let mut g = Graph { n, offsets, targets, bipartition: None, mirror: None };
        g.rebuild_mirror(DEFAULT_MIRROR_CAP);
        g
    }

    fn rebuild_mirror(&mut self, cap: usize) {
        self.mirror = (self.n <= cap.min(64))
            .then(|| (0..self.n).map(|v| self.neighbors(v).iter().fold(0u64, |acc, &u| acc | (1 << u))).collect());
    }

    /// Builds or drops the one-word bitset mirror for a different cap (at most 64).
    pub fn with_mirror_cap(mut self, cap: usize) -> Self {
        self.rebuild_mirror(cap);
        self
    }

    /// Attaches a bipartition after checking it covers `V` and every edge crosses it.
    pub fn with_bipartition(mut self, parts: Bipartition) -> Result<Self> {
        parts.left.validate(self.n)?;
        parts.right.validate(self.n)?;
        if !parts.left.is_disjoint(&parts.right) {
            return Err(Error::Bipartition("classes overlap".into()));
        }
        if parts.left.len() + parts.right.len() != self.n {
            return Err(Error::Bipartition("classes do not cover every vertex".into()));
        }
        for (u, v) in self.edges() {
            if parts.left.contains(u) == parts.left.contains(v) {
                return Err(Error::Bipartition(format!("edge ({u},{v}) does not cross")));
            }
        }
        self.bipartition = Some(parts);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        match &self.mirror {
            Some(rows) => rows[u] >> v & 1 == 1,
            None => self.neighbors(u).binary_search(&v).is_ok(),
        }
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).iter().copied().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn bipartition(&self) -> Option<&Bipartition> {
        self.bipartition.as_ref()
    }

    /// One `u64` adjacency row per vertex, present when `n` is under the mirror cap.
    pub fn mirror(&self) -> Option<&[u64]> {
        self.mirror.as_deref()
    }

    /// Adjacency rows as bitsets, for dense set algebra on larger graphs.
    pub fn bitset_rows(&self) -> Vec<FixedBitSet> {
        (0..self.n)
            .map(|v| {
                let mut row = FixedBitSet::with_capacity(self.n);
                for &u in self.neighbors(v) {
                    row.insert(u);
                }
                row
            })
            .collect()
    }

    /// Subgraph induced by `set`, relabelled to `0..set.len()` in increasing order.
    /// Vertex `i` of the result is `set.as_slice()[i]` of `self`.
    pub fn induced(&self, set: &VertexSet) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, v) in set.iter().enumerate() {
            index[v] = i;
        }
        let mut pairs = Vec::new();
        for (i, v) in set.iter().enumerate() {
            for &u in self.neighbors(v) {
                let j = index[u];
                if j != usize::MAX && j > i {
                    pairs.push((i, j));
                }
            }
        }
        pairs.sort_unstable();
        Graph::from_canonical_pairs(set.len(), &pairs)
    }

    /// Number of edges with both ends in `set`.
    pub fn edges_within(&self, set: &VertexSet) -> usize {
        set.iter().map(|v| self.neighbors(v).iter().filter(|&&u| u > v && set.contains(u)).count()).sum()
    }

    /// Number of edges with one end in `a` and the other in `b` (disjoint sets).
    pub fn edges_between(&self, a: &VertexSet, b: &VertexSet) -> usize {
        a.iter().map(|v| intersect_count(self.neighbors(v), b.as_slice())).sum()
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.n, &edges).expect("a permutation keeps edges valid")
    }

    /// Writes the edge-list text format.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        if let Some(bp) = &self.bipartition {
            if bp.left.as_slice().iter().copied().eq(0..bp.left.len()) {
                writeln!(out, "# bipartite {}", bp.left.len()).unwrap();
            }
        }
        writeln!(out, "{} {}", self.n, self.edge_count()).unwrap();
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }

    /// Parses the edge-list text format: `n m`, then `m` lines `u v`.
    /// A leading `# bipartite k` line declares `V1 = {0..k-1}`; other `#` lines are comments.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut bipartite = None;
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                let mut words = rest.split_whitespace();
                if words.next() == Some("bipartite") {
                    let k = parse_field(words.next(), line_no, "bipartite class size")?;
                    bipartite = Some(k);
                }
                continue;
            }
            let mut words = line.split_whitespace();
            let a = parse_field(words.next(), line_no, "first field")?;
            let b = parse_field(words.next(), line_no, "second field")?;
            if words.next().is_some() {
                return Err(Error::Parse { line: line_no, msg: "expected two fields".into() });
            }
            if header.is_none() {
                header = Some((a, b));
            } else {
                edges.push((a, b));
            }
        }
        let (n, m) = header.ok_or(Error::Parse { line: 1, msg: "missing `n m` header".into() })?;
        if edges.len() != m {
            return Err(Error::Parse { line: 1, msg: format!("header declares {m} edges but {} follow", edges.len()) });
        }
        let g = Graph::new(n, &edges)?;
        match bipartite {
            Some(k) if k <= n => g.with_bipartition(Bipartition::split_at(k, n)),
            Some(k) => Err(Error::Bipartition(format!("class size {k} exceeds n = {n}"))),
            None => Ok(g),
        }
    }
}

fn parse_field(word: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let w = word.ok_or_else(|| Error::Parse { line, msg: format!("missing {what}") })?;
    w.parse().map_err(|_| Error::Parse { line, msg: format!("{what} `{w}` is not a non-negative integer") })
}

pub(crate) fn intersect_count(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}

#[derive(Serialize, Deserialize)]
struct GraphRecord {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    bipartition: Option<Bipartition>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphRecord { n: self.n, edges: self.edges().collect(), bipartition: self.bipartition.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rec = GraphRecord::deserialize(d)?;
        let g = Graph::new(rec.n, &rec.edges).map_err(serde::de::Error::custom)?;
        match rec.bipartition {
            Some(bp) => g.with_bipartition(bp).map_err(serde::de::Error::custom),
            None => Ok(g),
        }
    }
}

/// Vertices adjacent to every member of `t`. The empty set yields all of `V`.
pub fn common_neighborhood(g: &Graph, t: &VertexSet) -> Result<VertexSet> {
    t.validate(g.n())?;
    let mut members = t.iter();
    let Some(first) = members.next() else {
        return Ok(VertexSet::full(g.n()));
    };
    let mut acc = g.neighbors(first).to_vec();
    for v in members {
        if acc.is_empty() {
            break;
        }
        acc = intersect_sorted(&acc, g.neighbors(v));
    }
    Ok(VertexSet::from_sorted(acc))
}

/// Exact edge densities between vertex sets.
///
/// For two sets both fields hold `e(W1,W2)/(|W1||W2|)`. For `t` sets,
/// `multi_density` is `sum e(Wi,Wj) / sum |Wi||Wj|` over `i < j` and
/// `pair_density` is the unweighted mean of the `C(t,2)` pairwise
/// densities; the two agree whenever all parts have the same size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityReport {
    pub pair_density: Ratio<u128>,
    pub multi_density: Ratio<u128>,
    pub edge_count: u64,
}

impl DensityReport {
    pub fn multi_density_f64(&self) -> f64 {
        *self.multi_density.numer() as f64 / *self.multi_density.denom() as f64
    }
}

fn check_parts(g: &Graph, parts: &[&VertexSet]) -> Result<()> {
    for (i, p) in parts.iter().enumerate() {
        p.validate(g.n())?;
        if p.is_empty() {
            return Err(Error::Precondition(format!("part {i} is empty")));
        }
        for (j, q) in parts.iter().enumerate().skip(i + 1) {
            if !p.is_disjoint(q) {
                return Err(Error::Precondition(format!("parts {i} and {j} overlap")));
            }
        }
    }
    Ok(())
}

pub fn density_between(g: &Graph, w1: &VertexSet, w2: &VertexSet) -> Result<DensityReport> {
    check_parts(g, &[w1, w2])?;
    let e = g.edges_between(w1, w2) as u128;
    let d = Ratio::new(e, (w1.len() * w2.len()) as u128);
    Ok(DensityReport { pair_density: d, multi_density: d, edge_count: e as u64 })
}

pub fn multi_density(g: &Graph, parts: &[VertexSet]) -> Result<DensityReport> {
    if parts.len() < 2 {
        return Err(Error::Precondition("multi-density needs at least two parts".into()));
    }
    let refs: Vec<&VertexSet> = parts.iter().collect();
    check_parts(g, &refs)?;
    let mut edges = 0u128;
    let mut pairs = 0u128;
    let mut mean = Ratio::from_integer(0u128);
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            let e = g.edges_between(&parts[i], &parts[j]) as u128;
            let p = (parts[i].len() * parts[j].len()) as u128;
            edges += e;
            pairs += p;
            mean += Ratio::new(e, p);
        }
    }
    let t = parts.len() as u128;
    mean /= Ratio::from_integer(t * (t - 1) / 2);
    Ok(DensityReport { pair_density: mean, multi_density: Ratio::new(edges, pairs), edge_count: edges as u64 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::from_iter_unsorted(v.iter().copied())
    }

    #[test]
    fn build_triangle() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.degrees(), vec![2, 2, 2]);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn build_empty() {
        let g = Graph::new(4, &[]).unwrap();
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn duplicates_collapse() {
        let g = Graph::new(4, &[(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(Graph::new(3, &[(0, 3)]), Err(Error::VertexOutOfRange { vertex: 3, n: 3 })));
        assert!(matches!(Graph::new(3, &[(1, 1)]), Err(Error::SelfLoop(1))));
    }

    #[test]
    fn mirror_matches_lists() {
        let g = Graph::cycle(5);
        let big = g.clone().with_mirror_cap(0);
        assert!(g.mirror().is_some());
        assert!(big.mirror().is_none());
        for u in 0..5 {
            for v in 0..5 {
                assert_eq!(g.has_edge(u, v), big.has_edge(u, v));
            }
        }
    }

    #[test]
    fn common_neighborhoods() {
        let k3 = Graph::complete(3);
        assert_eq!(common_neighborhood(&k3, &set(&[0, 1])).unwrap(), set(&[2]));
        let c4 = Graph::cycle(4);
        assert_eq!(common_neighborhood(&c4, &set(&[0, 2])).unwrap(), set(&[1, 3]));
        assert_eq!(common_neighborhood(&c4, &VertexSet::new()).unwrap(), VertexSet::full(4));
        assert!(common_neighborhood(&c4, &set(&[7])).is_err());
    }

    #[test]
    fn pair_densities() {
        let kb = Graph::complete_bipartite(3, 4);
        let d = density_between(&kb, &set(&[0, 1, 2]), &set(&[3, 4, 5, 6])).unwrap();
        assert_eq!(d.pair_density, Ratio::from_integer(1));
        let e = Graph::empty(4);
        let d = density_between(&e, &set(&[0, 1]), &set(&[2, 3])).unwrap();
        assert_eq!(d.pair_density, Ratio::from_integer(0));
        // C4: the four edges 01, 12, 23, 30 all cross {0,2} x {1,3}.
        let c4 = Graph::cycle(4);
        let d = density_between(&c4, &set(&[0, 2]), &set(&[1, 3])).unwrap();
        assert_eq!(d.edge_count, 4);
        assert_eq!(d.pair_density, Ratio::new(4, 4));
    }

    #[test]
    fn density_preconditions() {
        let g = Graph::complete(4);
        assert!(density_between(&g, &set(&[0, 1]), &set(&[1, 2])).is_err());
        assert!(density_between(&g, &set(&[]), &set(&[1, 2])).is_err());
        assert!(multi_density(&g, &[set(&[0])]).is_err());
    }

    #[test]
    fn multi_density_extremes() {
        let parts = [set(&[0, 1]), set(&[2, 3]), set(&[4, 5])];
        let k = Graph::complete(6);
        assert_eq!(multi_density(&k, &parts).unwrap().multi_density, Ratio::from_integer(1));
        let e = Graph::empty(6);
        assert_eq!(multi_density(&e, &parts).unwrap().multi_density, Ratio::from_integer(0));
    }

    #[test]
    fn edge_list_round_trip_with_bipartition() {
        let g = Graph::complete_bipartite(2, 3);
        let text = g.to_edge_list();
        assert!(text.starts_with("# bipartite 2\n5 6\n"));
        assert_eq!(Graph::parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_errors() {
        assert!(Graph::parse_edge_list("3 2\n0 1\n").is_err());
        assert!(Graph::parse_edge_list("3 1\n0 x\n").is_err());
        assert!(Graph::parse_edge_list("").is_err());
        assert!(Graph::parse_edge_list("# bipartite 1\n3 1\n1 2\n").is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = Graph::cycle(6);
        let s = serde_json::to_string(&g).unwrap();
        let back: Graph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
    }
}
