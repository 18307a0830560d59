//! Exact big-integer evaluation of the Ramsey upper bounds for degenerate
//! patterns. Logarithms are base 2.

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bound value. `exact` is false when a non-integer exponent was rounded
/// up, in which case `value` is at least the true bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundValue {
    #[serde(with = "super::as_text")]
    pub value: BigUint,
    pub exact: bool,
}

impl std::fmt::Display for BoundValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// `⌈log2 q⌉` and whether it is exact.
fn log2_ceil(q: u64) -> (u32, bool) {
    let k = 64 - (q - 1).leading_zeros();
    (if q == 1 { 0 } else { k }, q.is_power_of_two())
}

/// `(2^{7d+8} d^{3d+2} Δ)^{log q} n`.
pub fn ramsey_bound_grr(d: u64, delta: u64, q: u64, n: u64) -> Result<BoundValue> {
    if d == 0 || delta == 0 || q == 0 {
        return Err(Error::InvalidArgument("d, Δ and q must be at least 1".into()));
    }
    let (k, exact) = log2_ceil(q);
    let base = (BigUint::one() << (7 * d + 8)) * BigUint::from(d).pow((3 * d + 2) as u32) * BigUint::from(delta);
    Ok(BoundValue { value: base.pow(k) * BigUint::from(n), exact })
}

/// The two constants of `2^{c₁ q 3^q d / δ} Δ^{c₂ δ} n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneralConstants {
    pub exponent: u64,
    pub delta_power: u64,
}

impl Default for GeneralConstants {
    fn default() -> Self {
        GeneralConstants { exponent: 25, delta_power: 4 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundParams {
    pub d: u64,
    /// The pattern's Δ.
    pub delta_max: u64,
    pub q: u64,
    pub n: u64,
    /// δ in `(0, 1]`.
    pub delta: Ratio<u64>,
    pub constants: GeneralConstants,
}

impl BoundParams {
    pub fn validate(&self) -> Result<()> {
        if self.d == 0 || self.delta_max == 0 || self.q == 0 {
            return Err(Error::InvalidArgument("d, Δ and q must be at least 1".into()));
        }
        if self.q > self.d + 1 {
            return Err(Error::InvalidArgument(format!(
                "a d-degenerate pattern has chromatic number at most d + 1, got q = {} with d = {}",
                self.q, self.d
            )));
        }
        if self.delta.is_zero() || self.delta > Ratio::one() {
            return Err(Error::InvalidArgument("δ must lie in (0, 1]".into()));
        }
        Ok(())
    }
}

/// `⌈a^{num/den}⌉` and whether it is exact.
fn ceil_rational_power(a: u64, num: u64, den: u64) -> (BigUint, bool) {
    let v = BigUint::from(a).pow(num as u32);
    let root = v.nth_root(den as u32);
    if root.pow(den as u32) == v {
        (root, true)
    } else {
        (root + 1u32, false)
    }
}

/// `2^{c₁ q 3^q d / δ} Δ^{c₂ δ} n`, rounding non-integer parts up.
pub fn ramsey_bound_general(params: &BoundParams) -> Result<BoundValue> {
    params.validate()?;
    let (a, b) = (*params.delta.numer(), *params.delta.denom());
    let c = params.constants;
    let top = c.exponent as u128 * params.q as u128 * 3u128.pow(params.q as u32) * params.d as u128 * b as u128;
    let (e, rem) = top.div_rem(&(a as u128));
    let (exp2, exact2) = if rem == 0 { (e, true) } else { (e + 1, false) };
    let exp2: usize = exp2
        .try_into()
        .ok()
        .filter(|&e: &usize| e <= 1 << 32)
        .ok_or_else(|| Error::TooLarge(format!("exponent {exp2} is too large to evaluate")))?;
    let (pow, exact_pow) = ceil_rational_power(params.delta_max, c.delta_power * a, b);
    let value = (BigUint::one() << exp2) * pow * BigUint::from(params.n);
    Ok(BoundValue { value, exact: exact2 && exact_pow })
}

/// A rational `δ ≤ 1/√(log Δ)` with three decimal digits, for `Δ ≥ 2`.
pub fn main_delta(delta_max: u64) -> Result<Ratio<u64>> {
    if delta_max < 2 {
        return Err(Error::InvalidArgument("δ = 1/√(log Δ) needs Δ ≥ 2".into()));
    }
    let thousandths = (1000.0 / (delta_max as f64).log2().sqrt()).floor() as u64;
    Ok(Ratio::new(thousandths.clamp(1, 1000), 1000))
}

/// The general bound with `δ` from [`main_delta`].
pub fn ramsey_bound_main(d: u64, delta_max: u64, q: u64, n: u64, constants: GeneralConstants) -> Result<BoundValue> {
    let delta = main_delta(delta_max)?;
    ramsey_bound_general(&BoundParams { d, delta_max, q, n, delta, constants })
}
