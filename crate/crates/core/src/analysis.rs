use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{invalid, Error, Result};
use crate::factor::{is_prime, Factorization};
use crate::seq::{generate_window, SeqKind, SignSequence};
use crate::sieve::SpfSieve;

/// Arithmetic mean of a ±1 window.
pub fn mean(seq: &SignSequence) -> f64 {
    let sum: i64 = seq.values().iter().map(|&x| x as i64).sum();
    sum as f64 / seq.len() as f64
}

/// How lag products read past the window end.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LagMode {
    /// The window carries max_lag extra values beyond the N being averaged,
    /// so a(j+k) is a genuine sequence value. This is the default: the
    /// sequences are deterministic and their values past N are well-defined.
    Extended,
    /// Indices wrap modulo the window length.
    Circular,
}

impl LagMode {
    pub fn name(self) -> &'static str {
        match self {
            LagMode::Extended => "extended",
            LagMode::Circular => "circular",
        }
    }
}

impl FromStr for LagMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "extended" => Ok(LagMode::Extended),
            "circular" => Ok(LagMode::Circular),
            other => Err(invalid(format!(
                "unknown lag mode {other:?}; expected extended or circular"
            ))),
        }
    }
}

/// Autocorrelation of a ±1 window: C(k) = (1/N) sum over j of a(j)a(j+k).
#[derive(Debug, Clone, PartialEq)]
pub struct AutocorrelationReport {
    /// Number of positions averaged per lag.
    pub n: usize,
    pub max_lag: usize,
    pub mode: LagMode,
    /// Mean of the N averaged values (S(N)/N for kappa windows starting at 1).
    pub mean: f64,
    /// C(0), C(1), ..., C(max_lag).
    pub values: Vec<f64>,
}

/// C(k) for k = 0..=max_lag over the raw products, no mean removal.
///
/// In extended mode N is the window length minus max_lag: the caller
/// supplies N + max_lag values and every a(j+k) is read directly. In
/// circular mode N is the full length and indices wrap. Lag sums are exact
/// integer counts divided by N, so C(0) is exactly 1.
pub fn autocorrelation(
    seq: &SignSequence,
    max_lag: usize,
    mode: LagMode,
) -> Result<AutocorrelationReport> {
    autocorrelation_impl(seq, max_lag, mode, false)
}

/// Like [`autocorrelation`] but subtracts the window mean from every factor,
/// for users who want the covariance-style view.
pub fn autocorrelation_centered(
    seq: &SignSequence,
    max_lag: usize,
    mode: LagMode,
) -> Result<AutocorrelationReport> {
    autocorrelation_impl(seq, max_lag, mode, true)
}

fn autocorrelation_impl(
    seq: &SignSequence,
    max_lag: usize,
    mode: LagMode,
    centered: bool,
) -> Result<AutocorrelationReport> {
    let len = seq.len();
    if max_lag >= len {
        return Err(invalid(format!(
            "max_lag {max_lag} must be smaller than the window length {len}"
        )));
    }
    let n = match mode {
        LagMode::Extended => len - max_lag,
        LagMode::Circular => len,
    };
    let values_raw = seq.values();
    let head_sum: i64 = values_raw[..n].iter().map(|&x| x as i64).sum();
    let mu = head_sum as f64 / n as f64;
    let lag_value = |k: usize| -> f64 {
        if centered {
            let mut acc = 0.0f64;
            for j in 0..n {
                let partner = match mode {
                    LagMode::Extended => j + k,
                    LagMode::Circular => (j + k) % n,
                };
                acc += (values_raw[j] as f64 - mu) * (values_raw[partner] as f64 - mu);
            }
            acc / n as f64
        } else {
            let mut acc = 0i64;
            for j in 0..n {
                let partner = match mode {
                    LagMode::Extended => j + k,
                    LagMode::Circular => (j + k) % n,
                };
                acc += (values_raw[j] * values_raw[partner]) as i64;
            }
            acc as f64 / n as f64
        }
    };
    let values: Vec<f64> = (0..=max_lag).into_par_iter().map(lag_value).collect();
    Ok(AutocorrelationReport {
        n,
        max_lag,
        mode,
        mean: mu,
        values,
    })
}

/// Sign counts and run structure of a ±1 window.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BalanceStats {
    pub plus_count: usize,
    pub minus_count: usize,
    pub longest_run: usize,
    pub run_count: usize,
}

/// Count signs and maximal constant runs.
pub fn balance_stats(seq: &SignSequence) -> BalanceStats {
    let values = seq.values();
    let plus_count = values.iter().filter(|&&x| x == 1).count();
    let mut run_count = 1;
    let mut longest_run = 1;
    let mut current_run = 1;
    for pair in values.windows(2) {
        if pair[1] == pair[0] {
            current_run += 1;
            longest_run = longest_run.max(current_run);
        } else {
            run_count += 1;
            current_run = 1;
        }
    }
    BalanceStats {
        plus_count,
        minus_count: values.len() - plus_count,
        longest_run,
        run_count,
    }
}

/// Outcome of testing one candidate period k: the smallest index n in the
/// scanned span with a(n) != a(n+k), or None if the span never separates them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeriodCheck {
    pub k: u64,
    pub refuted_at: Option<u64>,
}

/// Test each candidate period k = 1..=max_period of kappa against the
/// window [start, start + window_len): a(n) is compared with a(n+k) for
/// every n in the window, reading the overhang from beyond it.
///
/// This is a bounded empirical check. It refutes periods within the window
/// and proves nothing globally; [`period_refutation_witness`] supplies the
/// unbounded certificate instead.
pub fn period_scan(start: u64, window_len: u64, max_period: u64) -> Result<Vec<PeriodCheck>> {
    if start == 0 {
        return Err(invalid("windows are indexed from 1"));
    }
    if max_period == 0 {
        return Err(invalid("max_period must be at least 1"));
    }
    if window_len <= max_period {
        return Err(invalid(format!(
            "window length {window_len} must exceed max_period {max_period}"
        )));
    }
    let span = window_len
        .checked_add(max_period)
        .and_then(|t| t.checked_add(start - 1))
        .ok_or_else(|| invalid("window end overflows u64"))?;
    let window = generate_window(SeqKind::Kappa, start, span, None)?;
    let values = window.values();
    let checks = (1..=max_period)
        .into_par_iter()
        .map(|k| {
            let refuted_at = (0..window_len as usize)
                .find(|&j| values[j] != values[j + k as usize])
                .map(|j| start + j as u64);
            PeriodCheck { k, refuted_at }
        })
        .collect();
    Ok(checks)
}

/// The same scan over caller-supplied values; comparisons stay inside the
/// window, so a constant window reports every candidate as surviving.
pub fn scan_sequence_periods(seq: &SignSequence, max_period: u64) -> Result<Vec<PeriodCheck>> {
    if max_period == 0 {
        return Err(invalid("max_period must be at least 1"));
    }
    if seq.len() as u64 <= max_period {
        return Err(invalid(format!(
            "window length {} must exceed max_period {max_period}",
            seq.len()
        )));
    }
    let values = seq.values();
    let start = seq.start();
    Ok((1..=max_period)
        .map(|k| {
            let refuted_at = (0..values.len() - k as usize)
                .find(|&j| values[j] != values[j + k as usize])
                .map(|j| start + j as u64);
            PeriodCheck { k, refuted_at }
        })
        .collect())
}

/// Certificate that k is not a period of kappa: p is prime and p + k is a
/// semiprime, forcing kappa(p) = -1 while kappa(p+k) = +1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeriodWitness {
    pub k: u64,
    pub p: u64,
    pub semiprime: u64,
    pub semiprime_factors: (u64, u64),
}

/// Smallest prime p with search_start <= p <= search_bound such that p + k
/// is a product of exactly two primes (equal allowed).
pub fn period_refutation_witness(
    k: u64,
    search_start: u64,
    search_bound: u64,
) -> Result<PeriodWitness> {
    if k == 0 {
        return Err(invalid("period must be positive"));
    }
    if search_start < 2 {
        return Err(invalid("search_start must be at least 2"));
    }
    for p in search_start..=search_bound {
        if !is_prime(p) {
            continue;
        }
        let Some(semiprime) = p.checked_add(k) else {
            break;
        };
        let f = Factorization::of(semiprime)?;
        if f.valency() == 2 {
            let factors = f.factors();
            let semiprime_factors = if factors.len() == 1 {
                (factors[0].0, factors[0].0)
            } else {
                (factors[0].0, factors[1].0)
            };
            return Ok(PeriodWitness {
                k,
                p,
                semiprime,
                semiprime_factors,
            });
        }
    }
    Err(Error::WitnessNotFound { k, search_bound })
}

/// All n <= limit where the two signs disagree, in increasing order.
/// Disagreement happens exactly when v(n) and the divisor-pair count have
/// different parities.
pub fn divergence_positions(limit: u64) -> Result<Vec<u64>> {
    if limit == 0 {
        return Err(invalid("limit must be at least 1"));
    }
    let sieve = SpfSieve::build(limit)?;
    let kappa_window = generate_window(SeqKind::Kappa, 1, limit, Some(&sieve))?;
    let lambda_window = generate_window(SeqKind::Lambda, 1, limit, Some(&sieve))?;
    Ok(kappa_window
        .values()
        .iter()
        .zip(lambda_window.values())
        .enumerate()
        .filter(|(_, (a, b))| a != b)
        .map(|(i, _)| i as u64 + 1)
        .collect())
}

/// How d(n1*n2) compares with d(n1)*d(n2).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DProductRelation {
    Equal,
    LessOrEqual,
}

impl DProductRelation {
    pub fn name(self) -> &'static str {
        match self {
            DProductRelation::Equal => "equal",
            DProductRelation::LessOrEqual => "less-or-equal",
        }
    }
}

/// Verdict on the divisor-pair product relations for one (n1, n2).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairIdentityReport {
    pub n1: u64,
    pub n2: u64,
    pub coprime: bool,
    pub d_product_relation: DProductRelation,
    pub delta_bound_holds_nonstrict: bool,
    pub delta_bound_holds_strict: bool,
    /// gcd = 1 with both d(n1) and d(n2) even: the pair-count product rule
    /// then holds with equality.
    pub equality_case: bool,
}

/// Evaluate the divisor-count and pair-count product relations for a pair:
/// multiplicativity of d on coprime pairs, submultiplicativity in general,
/// the pair-count bound against 2 * delta(n1) * delta(n2) in both non-strict
/// and strict forms, and the even-even equality precondition.
pub fn check_pair_identities(n1: u64, n2: u64) -> Result<PairIdentityReport> {
    if n1 == 0 || n2 == 0 {
        return Err(invalid("pair members must be at least 1"));
    }
    let product = n1
        .checked_mul(n2)
        .ok_or_else(|| invalid("n1 * n2 overflows u64"))?;
    let f1 = Factorization::of(n1)?;
    let f2 = Factorization::of(n2)?;
    let fp = Factorization::of(product)?;
    let (d1, d2) = (f1.divisor_count(), f2.divisor_count());
    let d_product_relation = if fp.divisor_count() == d1 * d2 {
        DProductRelation::Equal
    } else {
        DProductRelation::LessOrEqual
    };
    let pair_bound = 2 * f1.divisor_pairs() * f2.divisor_pairs();
    let product_pairs = fp.divisor_pairs();
    let coprime = gcd(n1, n2) == 1;
    Ok(PairIdentityReport {
        n1,
        n2,
        coprime,
        d_product_relation,
        delta_bound_holds_nonstrict: product_pairs <= pair_bound,
        delta_bound_holds_strict: product_pairs < pair_bound,
        equality_case: coprime && d1 % 2 == 0 && d2 % 2 == 0,
    })
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
