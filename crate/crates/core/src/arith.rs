use std::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::factor::{factorize, Factorization};
use crate::sieve::SpfSieve;

/// d(n): the number of divisors of n.
pub fn divisor_count(n: u64) -> Result<u64> {
    Ok(Factorization::of(n)?.divisor_count())
}

/// The number of unordered divisor pairs of n: `ceil(d(n) / 2)`.
pub fn divisor_pairs(n: u64) -> Result<u64> {
    Ok(Factorization::of(n)?.divisor_pairs())
}

/// v(n): prime factors of n counted with multiplicity; v(1) = 0.
pub fn valency(n: u64) -> Result<u64> {
    Ok(Factorization::of(n)?.valency())
}

/// The number of distinct prime factors of n.
pub fn distinct_prime_count(n: u64) -> Result<u64> {
    Ok(Factorization::of(n)?.distinct_prime_count())
}

/// Named reductions over the exponent list (a_1, ..., a_k) of a factorization.
///
/// `sum` recovers v, `count` the distinct-prime count, `product-of-successors`
/// d, and `ceil-half-product-of-successors` the divisor-pair count, which
/// makes one reducer-driven code path serve every tabulated column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExponentReducer {
    Sum,
    Count,
    Max,
    ProductOfSuccessors,
    CeilHalfProductOfSuccessors,
}

impl ExponentReducer {
    pub const NAMES: [&'static str; 5] = [
        "sum",
        "count",
        "max",
        "product-of-successors",
        "ceil-half-product-of-successors",
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExponentReducer::Sum => "sum",
            ExponentReducer::Count => "count",
            ExponentReducer::Max => "max",
            ExponentReducer::ProductOfSuccessors => "product-of-successors",
            ExponentReducer::CeilHalfProductOfSuccessors => "ceil-half-product-of-successors",
        }
    }

    /// Apply the reduction to an exponent list; empty lists (n = 1) reduce to
    /// the reduction's identity: 0 for sum/count/max, 1 for the products.
    pub fn apply(self, exponents: &[u32]) -> u64 {
        match self {
            ExponentReducer::Sum => exponents.iter().map(|&a| a as u64).sum(),
            ExponentReducer::Count => exponents.len() as u64,
            ExponentReducer::Max => exponents.iter().map(|&a| a as u64).max().unwrap_or(0),
            ExponentReducer::ProductOfSuccessors => {
                exponents.iter().map(|&a| a as u64 + 1).product()
            }
            ExponentReducer::CeilHalfProductOfSuccessors => exponents
                .iter()
                .map(|&a| a as u64 + 1)
                .product::<u64>()
                .div_ceil(2),
        }
    }
}

impl FromStr for ExponentReducer {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sum" => Ok(ExponentReducer::Sum),
            "count" => Ok(ExponentReducer::Count),
            "max" => Ok(ExponentReducer::Max),
            "product-of-successors" => Ok(ExponentReducer::ProductOfSuccessors),
            "ceil-half-product-of-successors" => Ok(ExponentReducer::CeilHalfProductOfSuccessors),
            other => Err(invalid(format!(
                "unknown exponent reducer {other:?}; expected one of {}",
                ExponentReducer::NAMES.join(", ")
            ))),
        }
    }
}

/// Reduce n's exponent list with the given reducer.
pub fn generalized_valence(n: u64, reducer: ExponentReducer) -> Result<u64> {
    Ok(reducer.apply(&Factorization::of(n)?.exponents()))
}

/// `sigma_{-s}(n) = sum over divisors t of n of t^(-s)` for real `s >= 0`.
///
/// s = 0 returns d(n) and s = 1 returns sigma(n)/n, both evaluated through
/// exact integer arithmetic with a single rounding at the end; other
/// exponents use the per-prime geometric closed form in floating point.
pub fn sigma_minus_s(n: u64, s: f64) -> Result<f64> {
    if n == 0 {
        return Err(invalid("sigma is defined for n >= 1"));
    }
    if s.is_nan() || s < 0.0 {
        return Err(invalid("s must be a nonnegative real"));
    }
    let f = Factorization::of(n)?;
    if s == 0.0 {
        return Ok(f.divisor_count() as f64);
    }
    if s == 1.0 {
        let mut sigma: u128 = 1;
        for &(p, a) in f.factors() {
            let p = p as u128;
            sigma *= (p.pow(a + 1) - 1) / (p - 1);
        }
        return Ok(sigma as f64 / n as f64);
    }
    let product: f64 = f
        .factors()
        .iter()
        .map(|&(p, a)| geometric_factor(p, a, s))
        .product();
    Ok(product)
}

/// `(1 - p^(-s(a+1))) / (1 - p^(-s))`, the per-prime factor of sigma_{-s}.
fn geometric_factor(p: u64, a: u32, s: f64) -> f64 {
    (1.0 - prime_power_f64(p, a + 1).powf(-s)) / (1.0 - (p as f64).powf(-s))
}

fn prime_power_f64(p: u64, e: u32) -> f64 {
    (p as u128).pow(e) as f64
}

/// Verdict on the divisor-power-sum bound for one (n, s).
#[derive(Debug, Clone, PartialEq)]
pub struct BoundCheckReport {
    pub n: u64,
    pub s: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub holds_nonstrict: bool,
    pub holds_strict: bool,
}

/// Evaluate `sigma_{-s}(n) <= {1 - (p_1 ... p_k n)^(-s/k)}^k / prod(1 - p_i^(-s))`
/// where p_1 < ... < p_k are n's own distinct prime factors.
///
/// Both sides share one pipeline: the common denominator is computed once,
/// and each side's numerator goes through the same power-then-complement
/// shape. With k = 1 the two numerators are the same floating-point
/// expression, so prime powers, where the bound is an identity, compare as
/// exactly equal rather than merely close.
pub fn check_ramanujan_bound(n: u64, s: f64) -> Result<BoundCheckReport> {
    if n < 2 {
        return Err(invalid("the bound is defined for n >= 2"));
    }
    if s.is_nan() || s <= 0.0 {
        return Err(invalid("s must be a positive real"));
    }
    let f = Factorization::of(n)?;
    let k = f.distinct_prime_count() as u32;
    let denominator: f64 = f
        .factors()
        .iter()
        .map(|&(p, _)| 1.0 - (p as f64).powf(-s))
        .product();
    let lhs_numerator: f64 = f
        .factors()
        .iter()
        .map(|&(p, a)| 1.0 - prime_power_f64(p, a + 1).powf(-s))
        .product();
    let radical: u128 = f.factors().iter().map(|&(p, _)| p as u128).product();
    let geometric_mean_power = ((radical * n as u128) as f64).powf(-s / k as f64);
    let rhs_numerator = (1.0 - geometric_mean_power).powi(k as i32);
    let lhs = lhs_numerator / denominator;
    let rhs = rhs_numerator / denominator;
    Ok(BoundCheckReport {
        n,
        s,
        lhs,
        rhs,
        holds_nonstrict: lhs <= rhs,
        holds_strict: lhs < rhs,
    })
}

/// All n <= limit whose divisor count is a running maximum: d(m) <= d(n)
/// for every m <= n. Ties are kept, so the list starts 1, 2, 3, 4, 6, 8, ...
pub fn largely_composite_up_to(limit: u64) -> Result<Vec<u64>> {
    if limit == 0 {
        return Err(invalid("limit must be at least 1"));
    }
    let sieve = SpfSieve::build(limit)?;
    let mut best = 0u64;
    let mut out = Vec::new();
    for n in 1..=limit {
        let d = factorize(n, Some(&sieve))?.divisor_count();
        if d >= best {
            best = d;
            out.push(n);
        }
    }
    Ok(out)
}
