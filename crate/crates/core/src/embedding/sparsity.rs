//! `(α, ρ, ε, t)`-sparseness: the parameter transform and a checker for
//! small graphs.
//!
//! A graph on `V` is `(α, ρ, ε, t)`-sparse when every `U ⊂ V` with
//! `|U| ≥ α|V|` contains disjoint `W_1, ..., W_t` of size `⌈ρ|U|⌉` whose
//! multi-density is at most `ε`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::drc::binomial_capped;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparsityParams {
    #[serde(with = "super::as_text")]
    pub alpha: BigRational,
    #[serde(with = "super::as_text")]
    pub rho: BigRational,
    #[serde(with = "super::as_text")]
    pub epsilon: BigRational,
    pub t: u64,
}

fn in_unit(r: &BigRational) -> bool {
    !r.is_negative() && *r <= BigRational::one()
}

impl SparsityParams {
    pub fn new(alpha: BigRational, rho: BigRational, epsilon: BigRational, t: u64) -> Result<Self> {
        let p = SparsityParams { alpha, rho, epsilon, t };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(in_unit(&self.alpha) && in_unit(&self.rho) && in_unit(&self.epsilon)) {
            return Err(Error::InvalidArgument("α, ρ and ε must lie in [0, 1]".into()));
        }
        if self.t < 2 {
            return Err(Error::InvalidArgument("t must be at least 2".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransformedSparsity {
    pub params: SparsityParams,
    /// `α > 1`: no subset qualifies, so the property says nothing.
    pub vacuous: bool,
}

/// `((2/ρ)^{h-1} α, 2^{1-h} ρ^h)`.
///
/// Applying this with `h₁` and then `h₂` equals a single application with
/// `h₁·h₂`.
pub fn transform_alpha_rho(alpha: &BigRational, rho: &BigRational, h: u32) -> Result<(BigRational, BigRational)> {
    if h == 0 {
        return Err(Error::InvalidArgument("h must be at least 1".into()));
    }
    if !rho.is_positive() {
        return Err(Error::InvalidArgument("ρ must be positive".into()));
    }
    let two = BigRational::from_integer(BigInt::from(2));
    let alpha2 = num_traits::pow((&two / rho).clone(), (h - 1) as usize) * alpha;
    let rho2 = num_traits::pow(rho.clone(), h as usize) / num_traits::pow(two, (h - 1) as usize);
    Ok((alpha2, rho2))
}

/// From `(α, ρ, ε, 2)`-sparse to `((2/ρ)^{h-1} α, 2^{1-h} ρ^h, 4ε, 2^h)`-sparse.
pub fn sparsity_transform(params: &SparsityParams, h: u32) -> Result<TransformedSparsity> {
    params.validate()?;
    if params.t != 2 {
        return Err(Error::Precondition(format!("the transform starts from t = 2, got t = {}", params.t)));
    }
    if h >= 64 {
        return Err(Error::TooLarge("2^h must fit in 64 bits".into()));
    }
    let (alpha, rho) = transform_alpha_rho(&params.alpha, &params.rho, h)?;
    let vacuous = alpha > BigRational::one();
    let epsilon = &params.epsilon * BigRational::from_integer(BigInt::from(4));
    Ok(TransformedSparsity { params: SparsityParams { alpha, rho, epsilon, t: 1 << h }, vacuous })
}

/// Largest graph for exhaustive subset enumeration.
pub const CHECK_SPARSE_MAX_N: usize = 18;

/// Work budget (counted in inspected `W_1` sets) for exact `t = 2` checking.
const EXACT_WORK_BUDGET: u64 = 200_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SparseCheckMode {
    /// All qualifying `U`.
    Exhaustive,
    /// Random qualifying `U` of every admissible size.
    Sampled { per_size: u64, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SparsityCheck {
    /// Every qualifying `U` was inspected and witness search was exact.
    pub exact: bool,
    pub inspected: u64,
    /// A `U` for which no witness was found.
    pub violation: Option<VertexSet>,
    /// The witness found for `U = V`, when `V` qualifies.
    pub full_witness: Option<Vec<VertexSet>>,
}

impl SparsityCheck {
    pub fn is_sparse(&self) -> bool {
        self.violation.is_none()
    }
}

fn within(eps: &BigRational, cross: u64, w: u64, t: u64) -> bool {
    // density = cross / (C(t,2) w²)
    let pairs = BigInt::from(t * (t - 1) / 2 * w * w);
    BigRational::from_integer(BigInt::from(cross)) <= eps * BigRational::from_integer(pairs)
}

fn cross_edges(rows: &[u64], parts: &[u64]) -> u64 {
    let mut total = 0;
    for (i, &a) in parts.iter().enumerate() {
        for &b in &parts[i + 1..] {
            let mut bits = a;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                total += u64::from((rows[v] & b).count_ones());
                bits &= bits - 1;
            }
        }
    }
    total
}

fn mask_to_set(mask: u64) -> VertexSet {
    VertexSet::from_iter_unsorted((0..64).filter(|&v| mask >> v & 1 == 1))
}

/// The `w` vertices of `pool` with fewest neighbors in `against`, lowest index first on ties.
fn fewest_into(rows: &[u64], pool: u64, against: u64, w: usize) -> u64 {
    let mut vs: Vec<(u32, usize)> =
        (0..64).filter(|&v| pool >> v & 1 == 1).map(|v| ((rows[v] & against).count_ones(), v)).collect();
    vs.sort_unstable();
    vs.iter().take(w).fold(0, |m, &(_, v)| m | 1 << v)
}

/// Disjoint `W_1..W_t ⊂ U` of size `w` with multi-density at most `ε`.
///
/// For `t = 2` the search is exact: for each `W_1` the best `W_2` is the `w`
/// remaining vertices with fewest neighbors in `W_1`. For larger `t` it is a
/// first-fit greedy from every start vertex followed by improving swaps; a
/// `None` then only means nothing was found.
pub fn sparse_witness(
    g: &Graph,
    u: &VertexSet,
    w: usize,
    t: usize,
    epsilon: &BigRational,
) -> Result<Option<Vec<VertexSet>>> {
    let rows = g.mirror().ok_or_else(|| Error::TooLarge("sparsity witnesses need n <= 64".into()))?;
    let umask = u.iter().fold(0u64, |m, v| m | 1 << v);
    Ok(witness_masks(rows, umask, w, t, epsilon).map(|ps| ps.into_iter().map(mask_to_set).collect()))
}

fn witness_masks(rows: &[u64], umask: u64, w: usize, t: usize, epsilon: &BigRational) -> Option<Vec<u64>> {
    let size = umask.count_ones() as usize;
    if t * w > size {
        return None;
    }
    if w == 0 {
        return Some(vec![0; t]);
    }
    let members: Vec<usize> = (0..64).filter(|&v| umask >> v & 1 == 1).collect();
    if t == 2 {
        for combo in itertools::Itertools::combinations(members.iter().copied(), w) {
            let w1 = combo.iter().fold(0u64, |m, &v| m | 1 << v);
            let w2 = fewest_into(rows, umask & !w1, w1, w);
            if within(epsilon, cross_edges(rows, &[w1, w2]), w as u64, 2) {
                return Some(vec![w1, w2]);
            }
        }
        return None;
    }
    for &start in &members {
        let mut parts = Vec::with_capacity(t);
        let mut taken = 0u64;
        for k in 0..t {
            let pool = umask & !taken;
            let part = if k == 0 {
                let rest = fewest_into(rows, pool & !(1 << start), 1 << start, w - 1);
                rest | 1 << start
            } else {
                fewest_into(rows, pool, taken, w)
            };
            taken |= part;
            parts.push(part);
        }
        let mut best = cross_edges(rows, &parts);
        // Swap a vertex of some part with an unused vertex or a vertex of another part while it helps.
        let mut improved = true;
        while improved && !within(epsilon, best, w as u64, t as u64) {
            improved = false;
            'search: for i in 0..t {
                for a in (0..64).filter(|&v| parts[i] >> v & 1 == 1) {
                    for b in members.iter().copied().filter(|&b| parts[i] >> b & 1 == 0) {
                        let mut trial = parts.clone();
                        trial[i] ^= 1 << a | 1 << b;
                        if let Some(j) = (0..t).find(|&j| j != i && parts[j] >> b & 1 == 1) {
                            trial[j] ^= 1 << a | 1 << b;
                        }
                        let c = cross_edges(rows, &trial);
                        if c < best {
                            best = c;
                            parts = trial;
                            improved = true;
                            break 'search;
                        }
                    }
                }
            }
        }
        if within(epsilon, best, w as u64, t as u64) {
            return Some(parts);
        }
    }
    None
}

fn ceil_mul(r: &BigRational, k: usize) -> usize {
    (r * BigRational::from_integer(BigInt::from(k))).ceil().to_integer().to_usize().unwrap_or(usize::MAX)
}

/// Checks the definition on a graph with at most 18 vertices.
pub fn check_sparse(g: &Graph, params: &SparsityParams, mode: SparseCheckMode) -> Result<SparsityCheck> {
    params.validate()?;
    let n = g.n();
    if n > CHECK_SPARSE_MAX_N {
        return Err(Error::TooLarge(format!("check_sparse supports n <= {CHECK_SPARSE_MAX_N}")));
    }
    let rows = g.mirror().expect("n <= 18 has a word mirror");
    let t = params.t as usize;
    let min_size = ceil_mul(&params.alpha, n).max(if params.alpha.is_zero() { 0 } else { 1 });
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let full_witness = if min_size <= n {
        witness_masks(rows, full, ceil_mul(&params.rho, n), t, &params.epsilon)
            .map(|ps| ps.into_iter().map(mask_to_set).collect())
    } else {
        None
    };

    let mut inspected = 0u64;
    let mut exact = t == 2;
    let mut check = |umask: u64| -> bool {
        inspected += 1;
        let size = umask.count_ones() as usize;
        witness_masks(rows, umask, ceil_mul(&params.rho, size), t, &params.epsilon).is_some()
    };
    let violation = match mode {
        SparseCheckMode::Exhaustive => {
            let work: u64 = (min_size..=n)
                .map(|s| {
                    let subsets = binomial_capped(n as u64, s as u64, u64::MAX).unwrap_or(u64::MAX);
                    let inner =
                        binomial_capped(s as u64, ceil_mul(&params.rho, s) as u64, u64::MAX).unwrap_or(u64::MAX);
                    subsets.saturating_mul(inner)
                })
                .fold(0u64, u64::saturating_add);
            if t == 2 && work > EXACT_WORK_BUDGET {
                return Err(Error::TooLarge(format!(
                    "exhaustive check needs about {work} witness probes; use the sampled mode"
                )));
            }
            (0..=full).filter(|&m| m.count_ones() as usize >= min_size).find(|&m| !check(m))
        }
        SparseCheckMode::Sampled { per_size, seed } => {
            exact = false;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut verts: Vec<usize> = (0..n).collect();
            let mut found = None;
            'sizes: for s in min_size..=n {
                for _ in 0..per_size {
                    verts.shuffle(&mut rng);
                    let m = verts[..s].iter().fold(0u64, |m, &v| m | 1 << v);
                    if !check(m) {
                        found = Some(m);
                        break 'sizes;
                    }
                }
            }
            found
        }
    };
    Ok(SparsityCheck { exact, inspected, violation: violation.map(mask_to_set), full_witness })
}
