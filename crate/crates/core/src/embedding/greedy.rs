//! Greedy embedders for colored patterns into partitioned hosts.
//!
//! All three place pattern vertices in the pattern's ordering and pick the
//! smallest admissible host vertex.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use itertools::Itertools;
use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::drc::binomial_capped;
use super::{ColoredPattern, Embedding, HostPartition};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sparseness::measure_certificate;

/// Why a step had no admissible host vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintReport {
    /// The later pattern vertex whose target set imposed the constraint.
    pub later_vertex: usize,
    pub target_size: usize,
    /// Candidates rejected because of this constraint.
    pub rejected: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbedFailure {
    /// Zero-based position in the pattern ordering.
    pub step: usize,
    pub vertex: usize,
    /// Unused host vertices that passed the adjacency requirement.
    pub available: usize,
    pub constraints: Vec<ConstraintReport>,
    /// The partial embedding built before the failing step.
    pub partial: Embedding,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum EmbedOutcome {
    Embedded { embedding: Embedding },
    Failed { failure: EmbedFailure },
}

impl EmbedOutcome {
    pub fn embedding(&self) -> Option<&Embedding> {
        match self {
            EmbedOutcome::Embedded { embedding } => Some(embedding),
            EmbedOutcome::Failed { .. } => None,
        }
    }
}

fn finish(pattern: &ColoredPattern, host: &Graph, parts: &HostPartition, map: Vec<usize>) -> Result<EmbedOutcome> {
    let embedding = Embedding::from_total(map);
    embedding.verify(&pattern.graph, host, Some((&pattern.colors, parts)))?;
    Ok(EmbedOutcome::Embedded { embedding })
}

fn partial(map: &[usize]) -> Embedding {
    Embedding::from_partial(map.iter().map(|&h| (h != usize::MAX).then_some(h)).collect())
}

/// Target-set embedder.
///
/// Every pattern vertex `v_i` carries a target set `T_i`, initially the host
/// part of its color. At step `j` the chosen `w ∈ T_j` must be unused and
/// satisfy `|N(w) ∩ T_i| ≥ ε |T_i|` for every later neighbor `v_i`; those
/// targets then shrink to `N(w) ∩ T_i`.
pub fn grr_greedy_embed(
    pattern: &ColoredPattern,
    host: &Graph,
    parts: &HostPartition,
    epsilon: Ratio<u64>,
) -> Result<EmbedOutcome> {
    pattern.check_parts(parts, host.n())?;
    if *epsilon.numer() == 0 || epsilon > Ratio::from_integer(1) {
        return Err(Error::InvalidArgument("ε must lie in (0, 1]".into()));
    }
    let (num, den) = (*epsilon.numer() as u128, *epsilon.denom() as u128);
    let n = pattern.n();
    let rows = host.bitset_rows();
    let part_bits = parts.bitsets(host.n());
    let mut target: Vec<FixedBitSet> = (0..n).map(|v| part_bits[pattern.colors[v]].clone()).collect();
    let mut used = FixedBitSet::with_capacity(host.n());
    let mut map = vec![usize::MAX; n];

    for step in 0..n {
        let v = pattern.ordering.vertex_at(step);
        let later = pattern.later_neighbors(step);
        let sizes: Vec<u128> = later.iter().map(|&u| target[u].count_ones(..) as u128).collect();
        let mut rejected = vec![0usize; later.len()];
        let mut available = 0;
        let mut chosen = None;
        for w in target[v].ones() {
            if used.contains(w) {
                continue;
            }
            available += 1;
            let mut ok = true;
            for (k, &u) in later.iter().enumerate() {
                let hits = rows[w].intersection_count(&target[u]) as u128;
                if hits * den < num * sizes[k] {
                    rejected[k] += 1;
                    ok = false;
                }
            }
            if ok {
                chosen = Some(w);
                break;
            }
        }
        let Some(w) = chosen else {
            let constraints = later
                .iter()
                .zip(&sizes)
                .zip(&rejected)
                .map(|((&u, &s), &r)| ConstraintReport { later_vertex: u, target_size: s as usize, rejected: r })
                .collect();
            return Ok(EmbedOutcome::Failed {
                failure: EmbedFailure { step, vertex: v, available, constraints, partial: partial(&map) },
            });
        };
        map[v] = w;
        used.insert(w);
        for &u in &later {
            target[u].intersect_with(&rows[w]);
        }
    }
    finish(pattern, host, parts, map)
}

/// Largest `C(|⋃ parts|, d)` for exact bad-set counting.
pub const GOODSET_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GoodsetReport {
    pub outcome: EmbedOutcome,
    /// `|V_i| ≥ x ≥ 4n` and the empty set is good for every part.
    pub hypothesis_holds: bool,
    /// Bad d-sets per part.
    pub bad_counts: Vec<u64>,
    /// `Δ` measured on the pattern ordering.
    pub delta: usize,
    /// Smallest value of `available - (common - P ⌊x/(2Δ)⌋ - (h-1))` over
    /// all steps, where `P` is the number of distinct pending pairs.
    pub min_slack: Option<i64>,
}

struct BadSets {
    /// For every proper subset of a bad d-set (sorted), how many bad d-sets contain it.
    superset_count: HashMap<Vec<usize>, u64>,
    total: u64,
}

/// Exact good-set embedder.
///
/// A d-set `S` outside part `i` is good for `i` when `|N(S) ∩ V_i| ≥ x`; a
/// smaller `S` is good for `i` when fewer than `(2Δ)^{|S|-d} C(x, d-|S|)`
/// bad d-sets contain it. Vertex `v_h` goes to the smallest unused common
/// neighbor of its placed earlier neighbors in its part that keeps every
/// pending set `f(N⁻(v_j) ∩ L_{h-1})` good for the part of `v_j`, over the
/// later neighbors `v_j` of `v_h`.
pub fn goodset_greedy_embed(
    pattern: &ColoredPattern,
    host: &Graph,
    parts: &HostPartition,
    x: usize,
    d: usize,
) -> Result<GoodsetReport> {
    pattern.check_parts(parts, host.n())?;
    if d == 0 || x == 0 {
        return Err(Error::InvalidArgument("x and d must be positive".into()));
    }
    if pattern.back_degree() > d {
        return Err(Error::Precondition(format!("the ordering has back-degree {} > d = {d}", pattern.back_degree())));
    }
    let everything = parts.union();
    if binomial_capped(everything.len() as u64, d as u64, GOODSET_BUDGET).is_none() {
        return Err(Error::TooLarge(format!(
            "C({}, {d}) exceeds the exact-count budget {GOODSET_BUDGET}; use grr_greedy_embed",
            everything.len()
        )));
    }
    let delta = measure_certificate(&pattern.graph, &pattern.ordering)?.delta.max(1);
    let rows = host.bitset_rows();
    let part_bits = parts.bitsets(host.n());
    let q = parts.q();

    // limit[k]: a set missing k vertices of a d-set is good iff its bad count < limit[k].
    let limit: Vec<u64> = (0..=d)
        .map(|k| {
            let c = binomial_big(x, k);
            let p = BigUint::from(2 * delta).pow(k as u32);
            let ceil = (&c + &p - 1u32) / &p;
            ceil.to_u64().unwrap_or(u64::MAX)
        })
        .collect();

    let common_in = |s: &[usize], i: usize| {
        let mut c = part_bits[i].clone();
        for &v in s {
            c.intersect_with(&rows[v]);
        }
        c
    };

    let bad: Vec<BadSets> = (0..q)
        .map(|i| {
            let outside: Vec<usize> = everything.iter().filter(|&v| !part_bits[i].contains(v)).collect();
            let mut superset_count = HashMap::new();
            let mut total = 0;
            for s in outside.iter().copied().combinations(d) {
                if common_in(&s, i).count_ones(..) >= x {
                    continue;
                }
                total += 1;
                for k in 0..d {
                    for sub in s.iter().copied().combinations(k) {
                        *superset_count.entry(sub).or_insert(0) += 1;
                    }
                }
            }
            BadSets { superset_count, total }
        })
        .collect();

    let is_good = |s: &[usize], i: usize| -> bool {
        if s.len() >= d {
            common_in(s, i).count_ones(..) >= x
        } else {
            let mut key = s.to_vec();
            key.sort_unstable();
            bad[i].superset_count.get(&key).copied().unwrap_or(0) < limit[d - s.len()]
        }
    };

    let n = pattern.n();
    let hypothesis_holds = x >= 4 * n && parts.parts().iter().all(|p| p.len() >= x) && (0..q).all(|i| is_good(&[], i));
    let mut map = vec![usize::MAX; n];
    let mut used = FixedBitSet::with_capacity(host.n());
    let mut min_slack: Option<i64> = None;
    let per_pair = (x / (2 * delta)) as i64;

    for h in 0..n {
        let v = pattern.ordering.vertex_at(h);
        let color = pattern.colors[v];
        let back: Vec<usize> = pattern.earlier_neighbors(h).iter().map(|&u| map[u]).collect();
        let common = common_in(&back, color);
        // Distinct pending pairs (placed earlier neighbors of v_j, part of v_j), with one such v_j.
        let mut pending: Vec<(Vec<usize>, usize, usize)> = Vec::new();
        for u in pattern.later_neighbors(h) {
            let mut s: Vec<usize> = pattern
                .earlier_neighbors(pattern.ordering.position(u))
                .iter()
                .map(|&z| map[z])
                .filter(|&z| z != usize::MAX)
                .collect();
            s.sort_unstable();
            let i = pattern.colors[u];
            if !pending.iter().any(|p| p.0 == s && p.1 == i) {
                pending.push((s, i, u));
            }
        }
        // Pairs that are already bad cannot be kept good and impose nothing.
        let live: Vec<bool> = pending.iter().map(|p| is_good(&p.0, p.1)).collect();
        let live_count = live.iter().filter(|&&l| l).count();
        let mut rejected = vec![0usize; pending.len()];
        let mut available = 0usize;
        let mut chosen = None;
        for w in common.ones().filter(|&w| !used.contains(w)) {
            let mut ok = true;
            for (k, p) in pending.iter().enumerate() {
                if !live[k] {
                    continue;
                }
                let mut s = p.0.clone();
                s.push(w);
                if !is_good(&s, p.1) {
                    rejected[k] += 1;
                    ok = false;
                }
            }
            if ok {
                available += 1;
                chosen.get_or_insert(w);
            }
        }
        let floor = common.count_ones(..) as i64 - live_count as i64 * per_pair - h as i64;
        let slack = available as i64 - floor;
        if slack < 0 {
            return Err(Error::Invariant(format!(
                "step {h}: {available} admissible vertices, below the guaranteed {floor}"
            )));
        }
        min_slack = Some(min_slack.map_or(slack, |m| m.min(slack)));
        let Some(w) = chosen else {
            let constraints = pending
                .iter()
                .zip(&rejected)
                .map(|(p, &r)| ConstraintReport { later_vertex: p.2, target_size: p.0.len(), rejected: r })
                .collect();
            let failure = EmbedFailure { step: h, vertex: v, available: 0, constraints, partial: partial(&map) };
            return Ok(GoodsetReport {
                outcome: EmbedOutcome::Failed { failure },
                hypothesis_holds,
                bad_counts: bad.iter().map(|b| b.total).collect(),
                delta,
                min_slack,
            });
        };
        map[v] = w;
        used.insert(w);
    }
    Ok(GoodsetReport {
        outcome: finish(pattern, host, parts, map)?,
        hypothesis_holds,
        bad_counts: bad.iter().map(|b| b.total).collect(),
        delta,
        min_slack,
    })
}

fn binomial_big(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MultipartiteReport {
    pub embedding: Embedding,
    /// Fewest admissible vertices seen at any step.
    pub min_candidates: usize,
}

/// Embedder for hosts whose parts are nearly complete to each other.
///
/// Requires equal parts of size at least `4n` and every host vertex of part
/// `i` to miss at most `|Y_i|/(2d)` vertices of the other parts. Under those
/// conditions each step has more than `n` admissible vertices; running out
/// is reported as an internal error.
pub fn multipartite_greedy_embed(
    pattern: &ColoredPattern,
    host: &Graph,
    parts: &HostPartition,
    d: usize,
) -> Result<MultipartiteReport> {
    pattern.check_parts(parts, host.n())?;
    let n = pattern.n();
    if d == 0 {
        return Err(Error::InvalidArgument("d must be positive".into()));
    }
    if pattern.back_degree() > d {
        return Err(Error::Precondition(format!("the ordering has back-degree {} > d = {d}", pattern.back_degree())));
    }
    let size = parts.part(0).len();
    if parts.parts().iter().any(|p| p.len() != size) {
        return Err(Error::Precondition("parts must all have the same size".into()));
    }
    if size < 4 * n {
        return Err(Error::Precondition(format!("parts have {size} vertices, fewer than 4n = {}", 4 * n)));
    }
    let rows = host.bitset_rows();
    let part_bits = parts.bitsets(host.n());
    let mut all = FixedBitSet::with_capacity(host.n());
    part_bits.iter().for_each(|b| all.union_with(b));
    for (i, p) in parts.parts().iter().enumerate() {
        let mut others = all.clone();
        others.difference_with(&part_bits[i]);
        let outside = others.count_ones(..);
        for v in p.iter() {
            let missing = outside - rows[v].intersection_count(&others);
            if 2 * d * missing > size {
                return Err(Error::Precondition(format!(
                    "host vertex {v} misses {missing} vertices of other parts, more than |Y|/(2d) = {size}/{}",
                    2 * d
                )));
            }
        }
    }

    let mut map = vec![usize::MAX; n];
    let mut used = FixedBitSet::with_capacity(host.n());
    let mut min_candidates = usize::MAX;
    for i in 0..n {
        let v = pattern.ordering.vertex_at(i);
        let mut cand = part_bits[pattern.colors[v]].clone();
        for u in pattern.earlier_neighbors(i) {
            cand.intersect_with(&rows[map[u]]);
        }
        cand.difference_with(&used);
        let count = cand.count_ones(..);
        if 2 * count + 2 * i < size || count <= n {
            return Err(Error::Invariant(format!(
                "step {i}: {count} candidates, below the guaranteed |Y|/2 - (i-1) > n"
            )));
        }
        min_candidates = min_candidates.min(count);
        let w = cand.ones().next().expect("count > n");
        map[v] = w;
        used.insert(w);
    }
    let embedding = Embedding::from_total(map);
    embedding.verify(&pattern.graph, host, Some((&pattern.colors, parts)))?;
    Ok(MultipartiteReport { embedding, min_candidates: if n == 0 { size } else { min_candidates } })
}
