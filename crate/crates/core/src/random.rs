//! Seeded random graphs, the two-neighbor closure `F(S)`, the high-degree
//! closure ordering, and finite-n checkers for sparse random graph properties.
//!
//! # Sampler
//!
//! [`sample_gnp`] assigns every row `u` of the pair triangle (pairs `(u, v)`
//! with `v > u`, or every cross pair `(u, n + v)` in the bipartite case) its
//! own ChaCha8 stream: the generator is `ChaCha8Rng::seed_from_u64(seed)`
//! with `set_stream(u)`. Within a row the included partners are found by
//! geometric skipping, `skip = floor(ln(1 - U) / ln(1 - p))` for a uniform
//! `U` in `[0, 1)`. Rows are independent, so sampling runs in parallel and
//! the edge set depends only on `(n, p, seed, bipartite)`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use fixedbitset::FixedBitSet;
use num_rational::Ratio;
use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{intersect_count, Graph, VertexSet};
use crate::sparseness::{
    degeneracy_ordering, measure_certificate, peel_ordering, PeelOutcome, SparsenessCertificate, VertexOrdering,
};

/// Parameters of `G(n, p)`, or of `G(n, n, p)` when `bipartite` is set
/// (then `n` is the size of each class and the graph has `2n` vertices).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RandomGraphSpec {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
    pub bipartite: bool,
}

impl RandomGraphSpec {
    pub fn gnp(n: usize, p: f64, seed: u64) -> Self {
        RandomGraphSpec { n, p, seed, bipartite: false }
    }

    /// `G(n, d/n)`.
    pub fn average_degree(n: usize, d: f64, seed: u64) -> Self {
        Self::gnp(n, if n == 0 { 0.0 } else { (d / n as f64).min(1.0) }, seed)
    }

    pub fn bipartite(n: usize, p: f64, seed: u64) -> Self {
        RandomGraphSpec { n, p, seed, bipartite: true }
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.p) {
            return Err(Error::InvalidArgument(format!("edge probability {} outside [0, 1]", self.p)));
        }
        Ok(())
    }
}

/// Positions in `0..len` kept independently with probability `p`.
fn bernoulli_row(rng: &mut ChaCha8Rng, len: usize, p: f64) -> Vec<usize> {
    if p <= 0.0 || len == 0 {
        return Vec::new();
    }
    if p >= 1.0 {
        return (0..len).collect();
    }
    let log_q = (1.0 - p).ln();
    let mut out = Vec::new();
    let mut pos: usize = 0;
    loop {
        let u: f64 = rng.random();
        let skip = ((1.0 - u).ln() / log_q).floor();
        if !skip.is_finite() || skip >= (len - pos) as f64 {
            break;
        }
        pos += skip as usize;
        out.push(pos);
        pos += 1;
        if pos >= len {
            break;
        }
    }
    out
}

fn row_rng(seed: u64, row: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(row as u64);
    rng
}

pub fn sample_gnp(spec: &RandomGraphSpec) -> Result<Graph> {
    spec.validate()?;
    let n = spec.n;
    let rows: Vec<Vec<(usize, usize)>> = (0..n)
        .into_par_iter()
        .map(|u| {
            let mut rng = row_rng(spec.seed, u);
            if spec.bipartite {
                bernoulli_row(&mut rng, n, spec.p).into_iter().map(|v| (u, n + v)).collect()
            } else {
                bernoulli_row(&mut rng, n - u - 1, spec.p).into_iter().map(|k| (u, u + 1 + k)).collect()
            }
        })
        .collect();
    let pairs: Vec<(usize, usize)> = rows.into_iter().flatten().collect();
    if spec.bipartite {
        let g = Graph::from_canonical_pairs(2 * n, &pairs);
        Ok(g.with_bipartition(crate::graph::Bipartition::split_at(n, 2 * n))?)
    } else {
        Ok(Graph::from_canonical_pairs(n, &pairs))
    }
}

/// `F(S)`: the closure of `S` under adding outside vertices with at least two neighbors inside.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClosureResult {
    pub closure: VertexSet,
    /// Vertices appended to `S`, in the order they were added.
    pub added: Vec<usize>,
    /// `|F(S)| / |S|`; absent for empty `S`.
    pub growth_ratio: Option<f64>,
}

/// Closure with candidates processed smallest index first.
pub fn closure_f(g: &Graph, s: &VertexSet) -> Result<ClosureResult> {
    closure_f_with_priority(g, s, |v| v)
}

/// Closure where, among current candidates, the one with the smallest
/// `priority(v)` is added first. The resulting set does not depend on the priority.
pub fn closure_f_with_priority<K: Ord, F: Fn(usize) -> K>(
    g: &Graph,
    s: &VertexSet,
    priority: F,
) -> Result<ClosureResult> {
    s.validate(g.n())?;
    let n = g.n();
    let mut inside = vec![false; n];
    let mut hits = vec![0u8; n];
    let mut heap = BinaryHeap::new();
    let bump = |v: usize, inside: &[bool], hits: &mut [u8], heap: &mut BinaryHeap<_>| {
        for &u in g.neighbors(v) {
            if !inside[u] && hits[u] < 2 {
                hits[u] += 1;
                if hits[u] == 2 {
                    heap.push(Reverse((priority(u), u)));
                }
            }
        }
    };
    for v in s.iter() {
        inside[v] = true;
    }
    for v in s.iter() {
        bump(v, &inside, &mut hits, &mut heap);
    }
    let mut added = Vec::new();
    while let Some(Reverse((_, v))) = heap.pop() {
        if inside[v] {
            continue;
        }
        inside[v] = true;
        added.push(v);
        bump(v, &inside, &mut hits, &mut heap);
    }
    let closure = VertexSet::from_iter_unsorted(s.iter().chain(added.iter().copied()));
    let growth_ratio = (!s.is_empty()).then(|| closure.len() as f64 / s.len() as f64);
    Ok(ClosureResult { closure, added, growth_ratio })
}

/// The closure ordering for sparse random graphs, with its measured certificate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoolOrdering {
    pub certificate: SparsenessCertificate,
    /// Vertices of degree above `16d`.
    pub high_degree: VertexSet,
    /// `F(high_degree)`, which is placed first.
    pub closure: VertexSet,
    /// Set when `G[F(A)]` could not be fully peeled with `(s, r) = (2, 2)`;
    /// the closure is then ordered smallest-last instead.
    pub peel_stuck: Option<VertexSet>,
}

/// `A = {v : deg(v) > 16d}`, then `F(A)` ordered by a `(2, 2)` peel of
/// `G[F(A)]`, then every remaining vertex in index order.
pub fn cool_ordering(g: &Graph, d: usize) -> Result<CoolOrdering> {
    if d == 0 {
        return Err(Error::InvalidArgument("d must be at least 1".into()));
    }
    let threshold = 16 * d;
    let high_degree: VertexSet = (0..g.n()).filter(|&v| g.degree(v) > threshold).collect();
    let closure = closure_f(g, &high_degree)?.closure;
    let sub = g.induced(&closure);
    let (local, peel_stuck) = match peel_ordering(&sub, 2, 2)? {
        PeelOutcome::Ordered(o) => (o, None),
        PeelOutcome::Stuck { residual } => {
            let residual = residual.iter().map(|i| closure.as_slice()[i]).collect();
            (degeneracy_ordering(&sub).0, Some(residual))
        }
    };
    let mut order: Vec<usize> = local.order().iter().map(|&i| closure.as_slice()[i]).collect();
    order.extend((0..g.n()).filter(|&v| !closure.contains(v)));
    let ordering = VertexOrdering::new(order).expect("closure then complement is a permutation");
    let certificate = measure_certificate(g, &ordering)?;
    Ok(CoolOrdering { certificate, high_degree, closure, peel_stuck })
}

pub fn count_high_degree(g: &Graph, threshold: usize) -> usize {
    (0..g.n()).filter(|&v| g.degree(v) > threshold).count()
}

/// Unordered vertex pairs with at least three common neighbors.
pub fn count_k23_pairs(g: &Graph) -> u64 {
    const BLOCK: usize = 4096;
    let n = g.n();
    (0..n.div_ceil(BLOCK))
        .into_par_iter()
        .map(|b| {
            let mut hits = vec![0u32; n];
            let mut touched = Vec::new();
            let mut found = 0u64;
            for u in b * BLOCK..((b + 1) * BLOCK).min(n) {
                for &w in g.neighbors(u) {
                    for &v in g.neighbors(w) {
                        if v > u {
                            if hits[v] == 0 {
                                touched.push(v);
                            }
                            hits[v] += 1;
                        }
                    }
                }
                for v in touched.drain(..) {
                    if hits[v] >= 3 {
                        found += 1;
                    }
                    hits[v] = 0;
                }
            }
            found
        })
        .sum()
}

/// How a [`PropertyReport`] was obtained.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum CheckMode {
    Exhaustive,
    /// The search stopped early; a pass only covers what was examined.
    Truncated {
        examined: u64,
    },
    Sampled {
        samples: u64,
    },
}

/// Outcome of a finite-n check of one property.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub lemma_id: String,
    pub samples: u64,
    pub successes: u64,
    /// The numeric summary the pass/fail decision is based on.
    pub statistic: f64,
    pub threshold: f64,
    pub mode: CheckMode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<VertexSet>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.successes == self.samples
    }
}

/// Limits for [`check_small_subgraph_density`].
#[derive(Clone, Copy, Debug)]
pub struct DensityCheckOptions {
    /// Connected subsets examined before the exhaustive search gives up.
    pub budget: u64,
    /// Random connected subsets grown when the exhaustive search is not used or gave up.
    pub samples: u64,
    pub seed: u64,
}

impl Default for DensityCheckOptions {
    fn default() -> Self {
        DensityCheckOptions { budget: 50_000_000, samples: 200_000, seed: 0 }
    }
}

/// `8 e >= 9 t`.
fn too_dense(edges: usize, size: usize) -> bool {
    8 * edges >= 9 * size
}

/// Enumerates each connected vertex set of exactly `target` vertices once,
/// rooted at its smallest member.
struct ConnectedSets<'a> {
    g: &'a Graph,
    target: usize,
    examined: u64,
    budget: u64,
    members: Vec<usize>,
    in_sub: Vec<bool>,
    blocked: Vec<u32>,
}

impl ConnectedSets<'_> {
    /// Returns `Some(set)` on a violation, `None` when done or out of budget.
    fn extend(&mut self, root: usize, edges: usize, ext: &mut Vec<usize>) -> Option<Vec<usize>> {
        if self.members.len() == self.target {
            self.examined += 1;
            return too_dense(edges, self.target).then(|| self.members.clone());
        }
        while let Some(w) = ext.pop() {
            if self.examined >= self.budget {
                return None;
            }
            let gained = self.g.neighbors(w).iter().filter(|&&u| self.in_sub[u]).count();
            // Exclusive neighbors of w: not in the set and not adjacent to it.
            let mut next = ext.clone();
            for &u in self.g.neighbors(w) {
                if u > root && !self.in_sub[u] && self.blocked[u] == 0 && !ext.contains(&u) {
                    next.push(u);
                }
            }
            self.in_sub[w] = true;
            self.members.push(w);
            for &u in self.g.neighbors(w) {
                self.blocked[u] += 1;
            }
            let found = self.extend(root, edges + gained, &mut next);
            for &u in self.g.neighbors(w) {
                self.blocked[u] -= 1;
            }
            self.members.pop();
            self.in_sub[w] = false;
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

/// Looks for a vertex set of size `t <= size_cap` spanning at least `9t/8`
/// edges. Only connected sets are examined: if a disconnected set is too
/// dense, so is one of its components.
///
/// Sizes are searched in increasing order so small violators surface first.
/// Caps up to 12 are searched exhaustively within `opts.budget`; larger caps,
/// or an exhausted budget, fall back to growing random connected sets.
pub fn check_small_subgraph_density(g: &Graph, size_cap: usize, opts: DensityCheckOptions) -> PropertyReport {
    let mut report = PropertyReport {
        lemma_id: "fifth5".into(),
        samples: 1,
        successes: 1,
        statistic: 0.0,
        threshold: 9.0 / 8.0,
        mode: CheckMode::Exhaustive,
        witness: None,
    };
    let n = g.n();
    let fail = |report: &mut PropertyReport, set: Vec<usize>| {
        let set = VertexSet::from_iter_unsorted(set);
        report.statistic = g.edges_within(&set) as f64 / set.len() as f64;
        report.successes = 0;
        report.witness = Some(set);
    };
    let mut examined = 0u64;
    let mut exhausted = size_cap <= 12;
    if exhausted {
        let mut walker = ConnectedSets {
            g,
            target: 0,
            examined: 0,
            budget: opts.budget,
            members: Vec::new(),
            in_sub: vec![false; n],
            blocked: vec![0; n],
        };
        'sizes: for target in 2..=size_cap {
            walker.target = target;
            for root in 0..n {
                walker.in_sub[root] = true;
                walker.members.push(root);
                for &u in g.neighbors(root) {
                    walker.blocked[u] += 1;
                }
                let mut ext: Vec<usize> = g.neighbors(root).iter().copied().filter(|&u| u > root).collect();
                let found = walker.extend(root, 0, &mut ext);
                for &u in g.neighbors(root) {
                    walker.blocked[u] -= 1;
                }
                walker.members.pop();
                walker.in_sub[root] = false;
                if let Some(set) = found {
                    fail(&mut report, set);
                    report.mode = CheckMode::Exhaustive;
                    return report;
                }
                if walker.examined >= opts.budget {
                    exhausted = false;
                    break 'sizes;
                }
            }
        }
        examined = walker.examined;
        if exhausted {
            return report;
        }
    }
    // Sampling: grow random connected sets up to the cap, testing every prefix.
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut best = 0.0f64;
    for _ in 0..opts.samples {
        if n == 0 {
            break;
        }
        let root = rng.random_range(0..n);
        let mut members = vec![root];
        let mut edges = 0usize;
        let mut frontier: Vec<usize> = g.neighbors(root).to_vec();
        while members.len() < size_cap && !frontier.is_empty() {
            let w = frontier.swap_remove(rng.random_range(0..frontier.len()));
            if members.contains(&w) {
                continue;
            }
            edges += g.neighbors(w).iter().filter(|u| members.contains(u)).count();
            members.push(w);
            frontier.extend(g.neighbors(w).iter().copied().filter(|u| !members.contains(u)));
            best = best.max(edges as f64 / members.len() as f64);
            if too_dense(edges, members.len()) {
                fail(&mut report, members);
                report.mode = CheckMode::Sampled { samples: opts.samples };
                return report;
            }
        }
    }
    report.statistic = best;
    report.mode =
        if size_cap <= 12 { CheckMode::Truncated { examined } } else { CheckMode::Sampled { samples: opts.samples } };
    report
}

/// Samples disjoint pairs of sets of size `ceil(fraction * n)` and reports the
/// smallest observed `e(A, B) / (p |A| |B|)`. Passes when that minimum is at least `1/2`.
pub fn check_density_between_large_sets(
    g: &Graph,
    p: f64,
    fraction: Ratio<u64>,
    trials: u64,
    seed: u64,
) -> Result<PropertyReport> {
    let n = g.n() as u64;
    if fraction <= Ratio::from_integer(0) || fraction > Ratio::new(1, 2) {
        return Err(Error::InvalidArgument(format!("fraction {fraction} must lie in (0, 1/2]")));
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::InvalidArgument(format!("edge probability {p} must lie in (0, 1]")));
    }
    let size = (fraction * Ratio::from_integer(n)).ceil().to_integer() as usize;
    if size == 0 || 2 * size > g.n() {
        return Err(Error::InvalidArgument(format!("cannot place two disjoint sets of size {size} in {n} vertices")));
    }
    let dense = (g.n() <= 32_768).then(|| g.bitset_rows());
    let min_ratio = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = row_rng(seed, trial as usize);
            let picked = index::sample(&mut rng, g.n(), 2 * size).into_vec();
            let (a, b) = picked.split_at(size);
            let e = match &dense {
                Some(rows) => {
                    let mut bset = FixedBitSet::with_capacity(g.n());
                    b.iter().for_each(|&v| bset.insert(v));
                    a.iter().map(|&v| rows[v].intersection_count(&bset)).sum::<usize>()
                }
                None => {
                    let mut bs = b.to_vec();
                    bs.sort_unstable();
                    a.iter().map(|&v| intersect_count(g.neighbors(v), &bs)).sum()
                }
            };
            e as f64 / (p * (size * size) as f64)
        })
        .reduce(|| f64::INFINITY, f64::min);
    let passed = min_ratio >= 0.5;
    Ok(PropertyReport {
        lemma_id: "six6".into(),
        samples: 1,
        successes: passed as u64,
        statistic: if trials == 0 { 0.0 } else { min_ratio },
        threshold: 0.5,
        mode: CheckMode::Sampled { samples: trials },
        witness: None,
    })
}

/// A lower bound on an ordering's arrangeability, exhibited at one vertex.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArrangeabilityWitness {
    /// `sum d(u_i) - sum d(u_i, u_j)`, or 0 if no vertex qualified.
    pub value: usize,
    pub vertex: Option<usize>,
    /// The later neighbors `u_i` whose first-third neighborhoods were counted.
    pub later: Vec<usize>,
}

/// Splits the ordering into thirds `V1, V2, V3` by position. Keeps the
/// `u` in `V3` with at least `d|V1|/(2n)` neighbors in `V1` (call them `V3'`),
/// then the `v` in `V2` with at least `d|V3'|/(2n)` neighbors in `V3'`, where
/// `d = 2e(G)/n`. For each such `v` it takes up to `d/12` of its `V3'`
/// neighbors (most `V1` neighbors first) and evaluates the inclusion-exclusion
/// bound `sum d(u_i) - sum_{i<j} d(u_i, u_j)` on every prefix, with `d(.)`
/// counting neighbors in `V1`. The best value bounds the size of `v`'s
/// left union, hence the ordering's `p`, from below.
pub fn arrangeability_witness(g: &Graph, ordering: &VertexOrdering) -> Result<ArrangeabilityWitness> {
    let n = g.n();
    if ordering.len() != n {
        return Err(Error::InvalidArgument("ordering does not match graph".into()));
    }
    let none = ArrangeabilityWitness { value: 0, vertex: None, later: Vec::new() };
    if n < 3 || g.edge_count() == 0 {
        return Ok(none);
    }
    let (cut1, cut2) = (n / 3, 2 * n / 3);
    let d = 2.0 * g.edge_count() as f64 / n as f64;
    let third = |v: usize| {
        let i = ordering.position(v);
        if i < cut1 {
            1
        } else if i < cut2 {
            2
        } else {
            3
        }
    };
    let first_nbrs = |u: usize| -> Vec<usize> { g.neighbors(u).iter().copied().filter(|&w| third(w) == 1).collect() };
    let v1_min = d * cut1 as f64 / (2.0 * n as f64);
    let mut v3_kept: Vec<Option<Vec<usize>>> = vec![None; n];
    let mut v3_size = 0usize;
    for &u in &ordering.order()[cut2..] {
        let nb = first_nbrs(u);
        if nb.len() as f64 >= v1_min {
            v3_kept[u] = Some(nb);
            v3_size += 1;
        }
    }
    let v3_min = d * v3_size as f64 / (2.0 * n as f64);
    let r = ((d / 12.0).floor() as usize).max(1);
    let best = ordering.order()[cut1..cut2]
        .par_iter()
        .filter_map(|&v| {
            let mut later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| v3_kept[u].is_some()).collect();
            if later.is_empty() || (later.len() as f64) < v3_min {
                return None;
            }
            later.sort_by_key(|&u| (Reverse(v3_kept[u].as_ref().unwrap().len()), u));
            later.truncate(r);
            let mut total: i64 = 0;
            let mut best = (0i64, 0usize);
            for k in 0..later.len() {
                let nk = v3_kept[later[k]].as_ref().unwrap();
                total += nk.len() as i64;
                for &prev in &later[..k] {
                    total -= intersect_count(nk, v3_kept[prev].as_ref().unwrap()) as i64;
                }
                if total > best.0 {
                    best = (total, k + 1);
                }
            }
            (best.1 > 0).then(|| (best.0 as usize, v, later[..best.1].to_vec()))
        })
        .reduce_with(|a, b| if (b.0, Reverse(b.1)) > (a.0, Reverse(a.1)) { b } else { a });
    Ok(match best {
        Some((value, v, later)) => ArrangeabilityWitness { value, vertex: Some(v), later },
        None => none,
    })
}
