//! Dependent random choice and the nested-subset procedure built on it.

use fixedbitset::FixedBitSet;
use itertools::Itertools;
use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph, VertexSet};
use crate::ramsey::{Color, TwoColoring};

/// Largest `C(|A|, t)` for which bad t-sets are counted exactly.
pub const EXACT_TSET_BUDGET: u64 = 1_000_000;

/// Random t-sets drawn when the exact count is over budget.
const SAMPLED_TSETS: u64 = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrcParams {
    pub t: usize,
    pub x: usize,
    pub trials: usize,
}

impl DrcParams {
    pub fn validate(&self) -> Result<()> {
        if self.t == 0 || self.x == 0 || self.trials == 0 {
            return Err(Error::InvalidArgument("t, x and trials must all be at least 1".into()));
        }
        Ok(())
    }
}

/// Number of t-subsets of a set whose common neighborhood is too small.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum BadCount {
    Exact {
        count: u64,
    },
    /// Scaled sample proportion with a normal-approximation 95% interval.
    Estimated {
        value: f64,
        low: f64,
        high: f64,
        samples: u64,
    },
}

impl BadCount {
    pub fn value(&self) -> f64 {
        match *self {
            BadCount::Exact { count } => count as f64,
            BadCount::Estimated { value, .. } => value,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DrcReport {
    /// Best-scoring common neighborhood, as host vertices of `V2`.
    pub a: VertexSet,
    pub bad: BadCount,
    pub score: f64,
    pub best_trial: usize,
    /// `e(G) / N²`.
    pub epsilon: Ratio<u64>,
    /// `Σ_{v ∈ V2} (|N(v)|/N)^{2t}`.
    pub expected_size: f64,
    /// `C(N,t) ((x-1)/N)^{2t}`, the bound on the expected bad count.
    pub expected_bad_bound: f64,
    /// `ε^{2t} N / 2`.
    pub size_floor: f64,
    /// `|A|` for every trial, in trial order.
    pub trial_sizes: Vec<usize>,
}

impl DrcReport {
    pub fn mean_trial_size(&self) -> f64 {
        self.trial_sizes.iter().sum::<usize>() as f64 / self.trial_sizes.len() as f64
    }
}

pub(crate) fn binomial_f64(n: u64, k: u64) -> f64 {
    if k > n {
        return 0.0;
    }
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

pub(crate) fn binomial_capped(n: u64, k: u64, cap: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > cap as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// Counts t-subsets `S` of `set` with `|∩ rows[s]| < x`.
fn count_bad_tsets<R: Rng>(rows: &[FixedBitSet], set: &[usize], t: usize, x: usize, rng: &mut R) -> BadCount {
    let small = |s: &[usize]| {
        let mut common = rows[s[0]].clone();
        for &v in &s[1..] {
            common.intersect_with(&rows[v]);
        }
        common.count_ones(..) < x
    };
    if set.len() < t {
        return BadCount::Exact { count: 0 };
    }
    match binomial_capped(set.len() as u64, t as u64, EXACT_TSET_BUDGET) {
        Some(_) => {
            let count = set.iter().copied().combinations(t).filter(|s| small(s)).count() as u64;
            BadCount::Exact { count }
        }
        None => {
            let total = binomial_f64(set.len() as u64, t as u64);
            let mut hits = 0u64;
            for _ in 0..SAMPLED_TSETS {
                let s: Vec<usize> = rand::seq::index::sample(rng, set.len(), t).into_iter().map(|i| set[i]).collect();
                hits += u64::from(small(&s));
            }
            let phat = hits as f64 / SAMPLED_TSETS as f64;
            let half = 1.96 * (phat * (1.0 - phat) / SAMPLED_TSETS as f64).sqrt();
            BadCount::Estimated {
                value: phat * total,
                low: (phat - half).max(0.0) * total,
                high: (phat + half).min(1.0) * total,
                samples: SAMPLED_TSETS,
            }
        }
    }
}

fn trial_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Runs `trials` independent draws of `T` (2t vertices of `V1`, with
/// repetition), takes `A = N(T) ∩ V2`, and keeps the `A` maximizing
/// `X - (E[X] / (2 E[Y])) Y`. Ties go to the lowest trial.
pub fn dependent_random_choice(g: &Graph, params: &DrcParams, seed: u64) -> Result<DrcReport> {
    params.validate()?;
    let parts =
        g.bipartition().ok_or_else(|| Error::Bipartition("dependent random choice needs a bipartite host".into()))?;
    if parts.left.len() != parts.right.len() {
        return Err(Error::Bipartition(format!(
            "parts must have equal size, got {} and {}",
            parts.left.len(),
            parts.right.len()
        )));
    }
    let n_side = parts.left.len();
    let edges = g.edge_count() as u64;
    if edges == 0 {
        return Err(Error::Precondition("the host has no edges, so ε = 0".into()));
    }
    let epsilon = Ratio::new(edges, (n_side * n_side) as u64);
    let t = params.t;
    let nf = n_side as f64;
    let expected_size: f64 = parts.right.iter().map(|v| (g.degree(v) as f64 / nf).powi(2 * t as i32)).sum();
    let expected_bad_bound = binomial_f64(n_side as u64, t as u64) * ((params.x as f64 - 1.0) / nf).powi(2 * t as i32);
    let weight = if expected_bad_bound > 0.0 { expected_size / (2.0 * expected_bad_bound) } else { 0.0 };
    let eps_f = *epsilon.numer() as f64 / *epsilon.denom() as f64;
    let size_floor = eps_f.powi(2 * t as i32) * nf / 2.0;

    let rows = g.bitset_rows();
    let left = parts.left.as_slice();
    let mut right_mask = FixedBitSet::with_capacity(g.n());
    parts.right.iter().for_each(|v| right_mask.insert(v));

    let outcomes: Vec<(VertexSet, BadCount, f64)> = (0..params.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(seed, trial as u64);
            let mut common = right_mask.clone();
            for _ in 0..2 * t {
                let v = left[rng.random_range(0..left.len())];
                common.intersect_with(&rows[v]);
            }
            let a: Vec<usize> = common.ones().collect();
            let bad = count_bad_tsets(&rows, &a, t, params.x, &mut rng);
            let score = a.len() as f64 - weight * bad.value();
            (VertexSet::from_sorted(a), bad, score)
        })
        .collect();

    let best_trial = (0..outcomes.len())
        .max_by(|&i, &j| outcomes[i].2.total_cmp(&outcomes[j].2).then(j.cmp(&i)))
        .expect("at least one trial");
    let trial_sizes = outcomes.iter().map(|o| o.0.len()).collect();
    let (a, bad, score) = outcomes.into_iter().nth(best_trial).expect("index in range");
    Ok(DrcReport { a, bad, score, best_trial, epsilon, expected_size, expected_bad_bound, size_floor, trial_sizes })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NestedParams {
    pub q: usize,
    pub t: usize,
    pub y: usize,
    /// Dependent-random-choice trials per round.
    pub trials: usize,
}

/// One halving round.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RoundRecord {
    /// `|B_i|` before the round.
    pub size: usize,
    pub color: Color,
    /// Edges of `color` between the halves over `|half|²`.
    pub density: f64,
    /// `|B_{i+1}|`.
    pub kept: usize,
    /// Bad t-sets of `B_{i+1}` reported by the dependent-random-choice step.
    pub bad: Option<BadCount>,
}

/// Bad t-sets of `A_i` (fewer than `y` common neighbors in `A_{i+1}`).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LevelStats {
    pub size: usize,
    pub bad: BadCount,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NestedReport {
    pub color: Color,
    /// `A_1 ⊂ A_2 ⊂ ... ⊂ A_q`.
    pub chain: Vec<VertexSet>,
    pub rounds: Vec<RoundRecord>,
    /// Statistics for `A_1, ..., A_{q-1}`.
    pub levels: Vec<LevelStats>,
    /// `log2` of `2^{-4tq} N`.
    pub log2_size_floor: f64,
    /// `log2` of `2^{4t²q} y^{2t} N^{-t}`.
    pub log2_bad_bound: f64,
    /// First round whose set was too small to split, if any.
    pub exhausted_at: Option<usize>,
}

/// Performs `2q - 3` rounds: shuffle `B_i` (seeded), split it into halves
/// by index parity, take the color with more edges between the halves (red
/// on ties), and run dependent random choice from the first half into the
/// second with `x = y`. The color used at least `q - 1` times then gives
/// `A_q = B_1` and `A_{q-j} = B_{i_j + 1}`.
pub fn nested_subsets(coloring: &TwoColoring, params: &NestedParams, seed: u64) -> Result<NestedReport> {
    let NestedParams { q, t, y, trials } = *params;
    if q < 2 || t < q {
        return Err(Error::InvalidArgument(format!("need q >= 2 and t >= q, got q = {q}, t = {t}")));
    }
    if y == 0 || trials == 0 {
        return Err(Error::InvalidArgument("y and trials must be positive".into()));
    }
    let n = coloring.n();
    let rounds_needed = 2 * q - 3;
    if rounds_needed >= usize::BITS as usize || n < 1usize << rounds_needed {
        return Err(Error::Precondition(format!("N = {n} is too small to halve {rounds_needed} times")));
    }

    let mut bs: Vec<Vec<usize>> = vec![(0..n).collect()];
    let mut rounds = Vec::with_capacity(rounds_needed);
    let mut exhausted_at = None;
    for i in 0..rounds_needed {
        let mut b = bs[i].clone();
        if b.len() < 2 {
            exhausted_at.get_or_insert(i + 1);
            rounds.push(RoundRecord { size: b.len(), color: Color::Red, density: 0.0, kept: 0, bad: None });
            bs.push(Vec::new());
            continue;
        }
        b.shuffle(&mut trial_rng(seed, i as u64));
        let h = b.len() / 2;
        let first: Vec<usize> = (0..h).map(|k| b[2 * k]).collect();
        let second: Vec<usize> = (0..h).map(|k| b[2 * k + 1]).collect();
        let red = first
            .iter()
            .flat_map(|&u| second.iter().map(move |&v| (u, v)))
            .filter(|&(u, v)| coloring.color(u, v) == Color::Red)
            .count();
        let color = if 2 * red >= h * h { Color::Red } else { Color::Blue };
        let count = if color == Color::Red { red } else { h * h - red };
        let mut pairs = Vec::with_capacity(count);
        for (a, &u) in first.iter().enumerate() {
            for (b2, &v) in second.iter().enumerate() {
                if coloring.color(u, v) == color {
                    pairs.push((a, h + b2));
                }
            }
        }
        let g = Graph::from_canonical_pairs(2 * h, &pairs).with_bipartition(Bipartition::split_at(h, 2 * h))?;
        let drc = dependent_random_choice(&g, &DrcParams { t, x: y, trials }, seed ^ ((i as u64 + 1) << 32))?;
        let kept: Vec<usize> = drc.a.iter().map(|v| second[v - h]).collect();
        rounds.push(RoundRecord {
            size: bs[i].len(),
            color,
            density: count as f64 / (h * h) as f64,
            kept: kept.len(),
            bad: Some(drc.bad),
        });
        let mut kept = kept;
        kept.sort_unstable();
        bs.push(kept);
    }

    let reds = rounds.iter().filter(|r| r.color == Color::Red).count();
    let color = if reds >= q - 1 { Color::Red } else { Color::Blue };
    let hits: Vec<usize> = (0..rounds_needed).filter(|&i| rounds[i].color == color).take(q - 1).collect();
    let mut chain = vec![VertexSet::new(); q];
    chain[q - 1] = VertexSet::from_sorted(bs[0].clone());
    for (j, &i) in hits.iter().enumerate() {
        chain[q - 2 - j] = VertexSet::from_sorted(bs[i + 1].clone());
    }

    let rows: Vec<FixedBitSet> = (0..n).map(|u| coloring.neighbors(u, color)).collect();
    let mut rng = trial_rng(seed, u64::MAX);
    let levels = (0..q - 1)
        .map(|i| {
            let mut mask = FixedBitSet::with_capacity(n);
            chain[i + 1].iter().for_each(|v| mask.insert(v));
            let restricted: Vec<FixedBitSet> = rows
                .iter()
                .map(|r| {
                    let mut r = r.clone();
                    r.intersect_with(&mask);
                    r
                })
                .collect();
            LevelStats { size: chain[i].len(), bad: count_bad_tsets(&restricted, chain[i].as_slice(), t, y, &mut rng) }
        })
        .collect();

    let (nf, tf, qf) = (n as f64, t as f64, q as f64);
    Ok(NestedReport {
        color,
        chain,
        rounds,
        levels,
        log2_size_floor: nf.log2() - 4.0 * tf * qf,
        log2_bad_bound: 4.0 * tf * tf * qf + 2.0 * tf * (y as f64).log2() - tf * nf.log2(),
        exhausted_at,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{sample_gnp, RandomGraphSpec};

    #[test]
    fn complete_bipartite_returns_everything() {
        let g = Graph::complete_bipartite(6, 6);
        for t in 1..=3 {
            let r = dependent_random_choice(&g, &DrcParams { t, x: 6, trials: 5 }, 1).unwrap();
            assert_eq!(r.a.as_slice(), &[6, 7, 8, 9, 10, 11]);
            assert_eq!(r.bad, BadCount::Exact { count: 0 });
            assert_eq!(r.epsilon, Ratio::new(1, 1));
        }
    }

    #[test]
    fn rejects_bad_hosts() {
        let empty = Graph::empty(4).with_bipartition(Bipartition::split_at(2, 4)).unwrap();
        let p = DrcParams { t: 1, x: 1, trials: 1 };
        assert!(matches!(dependent_random_choice(&empty, &p, 0), Err(Error::Precondition(_))));
        assert!(matches!(dependent_random_choice(&Graph::complete(4), &p, 0), Err(Error::Bipartition(_))));
        assert!(dependent_random_choice(&Graph::complete_bipartite(2, 3), &p, 0).is_err());
    }

    #[test]
    fn exact_bad_count_matches_direct_count() {
        let g = sample_gnp(&RandomGraphSpec::bipartite(20, 0.4, 3)).unwrap();
        let r = dependent_random_choice(&g, &DrcParams { t: 2, x: 5, trials: 10 }, 9).unwrap();
        let direct =
            r.a.iter()
                .combinations(2)
                .filter(|s| (0..20).filter(|&u| g.has_edge(u, s[0]) && g.has_edge(u, s[1])).count() < 5)
                .count() as u64;
        assert_eq!(r.bad, BadCount::Exact { count: direct });
        assert_eq!(r.trial_sizes.len(), 10);
    }

    #[test]
    fn deterministic_per_seed() {
        let g = sample_gnp(&RandomGraphSpec::bipartite(40, 0.5, 1)).unwrap();
        let p = DrcParams { t: 2, x: 4, trials: 16 };
        assert_eq!(dependent_random_choice(&g, &p, 5).unwrap(), dependent_random_choice(&g, &p, 5).unwrap());
    }

    #[test]
    fn nested_q2_single_round() {
        let c = TwoColoring::from_fn(16, |u, v| if (u + v) % 3 == 0 { Color::Red } else { Color::Blue });
        let r = nested_subsets(&c, &NestedParams { q: 2, t: 2, y: 2, trials: 8 }, 0).unwrap();
        assert_eq!(r.rounds.len(), 1);
        assert_eq!(r.chain[1], VertexSet::full(16));
        assert!(r.chain[0].is_subset(&r.chain[1]));
        assert_eq!(r.color, r.rounds[0].color);
    }

    #[test]
    fn nested_monochromatic() {
        let c = TwoColoring::monochromatic(32, Color::Red);
        let r = nested_subsets(&c, &NestedParams { q: 3, t: 3, y: 2, trials: 4 }, 2).unwrap();
        assert_eq!(r.color, Color::Red);
        for round in &r.rounds {
            assert_eq!(round.kept, round.size / 2);
        }
        assert!(r.chain.windows(2).all(|w| w[0].is_subset(&w[1])));
    }

    #[test]
    fn nested_rejects_small_inputs() {
        let c = TwoColoring::monochromatic(4, Color::Red);
        assert!(nested_subsets(&c, &NestedParams { q: 3, t: 3, y: 1, trials: 1 }, 0).is_err());
        assert!(nested_subsets(&c, &NestedParams { q: 3, t: 2, y: 1, trials: 1 }, 0).is_err());
    }
}
