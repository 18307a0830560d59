//! Vertex orderings and the sparseness parameters measured against them.
//!
//! For an ordering `v_1, ..., v_n` write `L_i = {v_1, ..., v_i}`. At each
//! position `i` three quantities are read off:
//!
//! * the *back-degree*, the number of neighbors of `v_i` placed before it;
//! * the *left-set count*, the number of distinct sets `N(v_j) ∩ L_i` over
//!   neighbors `v_j` of `v_i` placed after it;
//! * the *left union*, the size of the union of those same sets (it contains
//!   `v_i` itself as soon as `v_i` has a later neighbor).
//!
//! Their maxima over `i` are the `d`, `Δ` and `p` of a
//! [`SparsenessCertificate`]: the ordering witnesses that the graph is
//! `(d, Δ)`-degenerate and `p`-arrangeable.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A permutation of `0..n` together with its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexOrdering {
    order: Vec<usize>,
    position: Vec<usize>,
}

impl VertexOrdering {
    /// `order[i]` is the vertex at position `i`.
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut position = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if position[v] != usize::MAX {
                return Err(Error::InvalidArgument(format!("vertex {v} appears twice in ordering")));
            }
            position[v] = i;
        }
        Ok(VertexOrdering { order, position })
    }

    pub fn identity(n: usize) -> Self {
        VertexOrdering { order: (0..n).collect(), position: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    pub fn vertex_at(&self, i: usize) -> usize {
        self.order[i]
    }

    fn check(&self, g: &Graph) -> Result<()> {
        if self.len() != g.n() {
            return Err(Error::InvalidArgument(format!(
                "ordering has {} vertices but the graph has {}",
                self.len(),
                g.n()
            )));
        }
        Ok(())
    }
}

impl Serialize for VertexOrdering {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.order.serialize(s)
    }
}

impl<'de> Deserialize<'de> for VertexOrdering {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let order = Vec::<usize>::deserialize(d)?;
        VertexOrdering::new(order).map_err(serde::de::Error::custom)
    }
}

/// An ordering with its measured back-degree `d`, left-set count `delta`
/// and arrangeability `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparsenessCertificate {
    pub ordering: VertexOrdering,
    pub d: usize,
    pub delta: usize,
    pub p: usize,
}

/// The three per-position quantities behind a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositionStats {
    pub back_degree: usize,
    /// Distinct sets `N(v_j) ∩ L_i`, each sorted, in sorted order.
    pub left_sets: Vec<Vec<usize>>,
    pub left_union: usize,
}

/// Computes the stats at position `i` of `ordering`.
pub fn position_stats(g: &Graph, ordering: &VertexOrdering, i: usize) -> PositionStats {
    let v = ordering.vertex_at(i);
    let mut back_degree = 0;
    let mut sets: HashSet<Vec<usize>> = HashSet::new();
    for &u in g.neighbors(v) {
        if ordering.position(u) < i {
            back_degree += 1;
        } else {
            let s: Vec<usize> = g.neighbors(u).iter().copied().filter(|&w| ordering.position(w) <= i).collect();
            sets.insert(s);
        }
    }
    let union: HashSet<usize> = sets.iter().flatten().copied().collect();
    let mut left_sets: Vec<_> = sets.into_iter().collect();
    left_sets.sort();
    PositionStats { back_degree, left_sets, left_union: union.len() }
}

pub fn measure_certificate(g: &Graph, ordering: &VertexOrdering) -> Result<SparsenessCertificate> {
    ordering.check(g)?;
    let (d, delta, p) = (0..g.n())
        .into_par_iter()
        .map(|i| {
            let s = position_stats(g, ordering, i);
            (s.back_degree, s.left_sets.len(), s.left_union)
        })
        .reduce(|| (0, 0, 0), |a, b| (a.0.max(b.0), a.1.max(b.1), a.2.max(b.2)));
    Ok(SparsenessCertificate { ordering: ordering.clone(), d, delta, p })
}

/// Smallest-last ordering. Repeatedly removes a vertex of minimum current
/// degree (smallest index on ties) and returns the reverse removal order
/// together with the degeneracy.
pub fn degeneracy_ordering(g: &Graph) -> (VertexOrdering, usize) {
    let n = g.n();
    let mut degree = g.degrees();
    let mut queue: BTreeSet<(usize, usize)> = (0..n).map(|v| (degree[v], v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut degeneracy = 0;
    while let Some((d, v)) = queue.pop_first() {
        degeneracy = degeneracy.max(d);
        removed[v] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            if !removed[u] {
                queue.remove(&(degree[u], u));
                degree[u] -= 1;
                queue.insert((degree[u], u));
            }
        }
    }
    order.reverse();
    let ordering = VertexOrdering::new(order).expect("removal order is a permutation");
    (ordering, degeneracy)
}

/// Result of [`peel_ordering`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PeelOutcome {
    Ordered(VertexOrdering),
    /// No vertex qualified; `residual` induces the subgraph where peeling stopped.
    Stuck {
        residual: VertexSet,
    },
}

impl PeelOutcome {
    pub fn ordering(&self) -> Option<&VertexOrdering> {
        match self {
            PeelOutcome::Ordered(o) => Some(o),
            PeelOutcome::Stuck { .. } => None,
        }
    }
}

struct Peeler<'a> {
    g: &'a Graph,
    s: usize,
    r: usize,
    alive: Vec<bool>,
    degree: Vec<usize>,
    leaf: BTreeSet<usize>,
    light: BTreeSet<usize>,
}

impl Peeler<'_> {
    fn refresh(&mut self, v: usize) {
        self.leaf.remove(&v);
        self.light.remove(&v);
        if !self.alive[v] {
            return;
        }
        let d = self.degree[v];
        if d <= 1 {
            self.leaf.insert(v);
        } else if d <= self.s && self.g.neighbors(v).iter().all(|&u| !self.alive[u] || self.degree[u] <= self.r) {
            self.light.insert(v);
        }
    }
}

/// Peels vertices from the back of the ordering: at each step take the
/// smallest-index vertex of current degree at most one, or failing that the
/// smallest-index vertex of degree at most `s` whose neighbors all have
/// degree at most `r`. On success the ordering is `(s, r+1)`-degenerate.
pub fn peel_ordering(g: &Graph, s: usize, r: usize) -> Result<PeelOutcome> {
    if s == 0 || r == 0 {
        return Err(Error::InvalidArgument("peel parameters s and r must be at least 1".into()));
    }
    let n = g.n();
    let mut p =
        Peeler { g, s, r, alive: vec![true; n], degree: g.degrees(), leaf: BTreeSet::new(), light: BTreeSet::new() };
    for v in 0..n {
        p.refresh(v);
    }
    let mut removal = Vec::with_capacity(n);
    while removal.len() < n {
        let next = p.leaf.first().or_else(|| p.light.first()).copied();
        let Some(v) = next else {
            let residual = (0..n).filter(|&v| p.alive[v]).collect();
            return Ok(PeelOutcome::Stuck { residual });
        };
        p.alive[v] = false;
        p.refresh(v);
        removal.push(v);
        let touched: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| p.alive[u]).collect();
        for &u in &touched {
            p.degree[u] -= 1;
        }
        let mut again: BTreeSet<usize> = touched.iter().copied().collect();
        for &u in &touched {
            again.extend(g.neighbors(u).iter().copied().filter(|&w| p.alive[w]));
        }
        for w in again {
            p.refresh(w);
        }
    }
    removal.reverse();
    Ok(PeelOutcome::Ordered(VertexOrdering::new(removal).expect("removal order is a permutation")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LightKind {
    DegreeAtMostOne,
    DegreeTwoWithDegreeTwoNeighbors,
}

/// A vertex of degree at most one, or of degree two whose two neighbors also have degree two.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LightVertexWitness {
    pub kind: LightKind,
    pub vertex: usize,
    pub neighbors: Vec<usize>,
}

impl LightVertexWitness {
    pub fn verify(&self, g: &Graph) -> bool {
        if self.vertex >= g.n() || g.neighbors(self.vertex) != self.neighbors.as_slice() {
            return false;
        }
        match self.kind {
            LightKind::DegreeAtMostOne => self.neighbors.len() <= 1,
            LightKind::DegreeTwoWithDegreeTwoNeighbors => {
                self.neighbors.len() == 2 && self.neighbors.iter().all(|&u| g.degree(u) == 2)
            }
        }
    }
}

/// Always finds a witness when `e(G) < 9n/8`.
pub fn find_light_vertex(g: &Graph) -> Option<LightVertexWitness> {
    let witness = |kind, v: usize| LightVertexWitness { kind, vertex: v, neighbors: g.neighbors(v).to_vec() };
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) <= 1) {
        return Some(witness(LightKind::DegreeAtMostOne, v));
    }
    (0..g.n())
        .find(|&v| g.degree(v) == 2 && g.neighbors(v).iter().all(|&u| g.degree(u) == 2))
        .map(|v| witness(LightKind::DegreeTwoWithDegreeTwoNeighbors, v))
}

pub const DEFAULT_EXACT_CAP: usize = 10;
/// Hard ceiling for the subset table used by [`exact_min_arrangeability`].
pub const EXACT_HARD_CAP: usize = 24;

/// Minimum arrangeability over all orderings, for graphs on at most `n_cap` vertices.
///
/// The left union at position `i` depends only on the vertex placed there
/// and the set `L_i`, not on how `L_i` was ordered, so the optimum is a
/// bottleneck over the subset lattice:
/// `best(S) = min over v in S of max(best(S - v), union(S, v))`.
pub fn exact_min_arrangeability(g: &Graph, n_cap: usize) -> Result<usize> {
    let n = g.n();
    if n > n_cap || n > EXACT_HARD_CAP {
        return Err(Error::TooLarge(format!(
            "exact arrangeability is limited to {} vertices (got {n}); use measure_certificate on a heuristic ordering instead",
            n_cap.min(EXACT_HARD_CAP)
        )));
    }
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0u32, |a, &u| a | 1 << u)).collect();
    let mut best = vec![u8::MAX; 1 << n];
    best[0] = 0;
    for set in 1u32..(1 << n) {
        let mut value = u8::MAX;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let prev = best[(set & !(1 << v)) as usize];
            if prev >= value {
                continue;
            }
            let mut right = adj[v] & !set;
            let mut union = 0u32;
            while right != 0 {
                let u = right.trailing_zeros() as usize;
                right &= right - 1;
                union |= adj[u] & set;
            }
            value = value.min(prev.max(union.count_ones() as u8));
        }
        best[set as usize] = value;
    }
    Ok(best[(1usize << n) - 1] as usize)
}
