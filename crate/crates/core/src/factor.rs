use crate::error::{invalid, Result};
use crate::sieve::SpfSieve;

/// Prime factorization of a positive integer.
///
/// Factors are held as `(prime, exponent)` pairs with primes strictly
/// increasing and every exponent at least 1; `n = 1` has an empty list.
/// Constructors uphold that shape, so downstream arithmetic never re-checks it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Factorize by trial division; handles any `n >= 1` without a sieve.
    pub fn of(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(invalid("cannot factorize 0"));
        }
        let mut factors = Vec::new();
        let mut m = n;
        let mut p: u64 = 2;
        // p <= m / p instead of p * p <= m so the probe never overflows
        while p <= m / p {
            if m.is_multiple_of(p) {
                let mut a = 0u32;
                while m.is_multiple_of(p) {
                    m /= p;
                    a += 1;
                }
                factors.push((p, a));
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if m > 1 {
            factors.push((m, 1));
        }
        Ok(Factorization { n, factors })
    }

    /// Wrap factors already known to be sorted by prime with positive exponents.
    pub(crate) fn from_sorted_parts(n: u64, factors: Vec<(u64, u32)>) -> Self {
        debug_assert!(factors.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(factors.iter().all(|&(_, a)| a >= 1));
        Factorization { n, factors }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `(prime, exponent)` pairs, primes increasing.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// The exponent list (a_1, ..., a_k) in prime order.
    pub fn exponents(&self) -> Vec<u32> {
        self.factors.iter().map(|&(_, a)| a).collect()
    }

    /// d(n): the number of divisors, `prod(a_i + 1)`.
    pub fn divisor_count(&self) -> u64 {
        self.factors.iter().map(|&(_, a)| a as u64 + 1).product()
    }

    /// The number of unordered divisor pairs {t, n/t}: `ceil(d(n) / 2)`.
    ///
    /// Pairs with t <= n/t cover every divisor once, except that a square's
    /// middle divisor pairs with itself, hence the round up.
    pub fn divisor_pairs(&self) -> u64 {
        self.divisor_count().div_ceil(2)
    }

    /// v(n): the number of prime factors counted with multiplicity; v(1) = 0.
    pub fn valency(&self) -> u64 {
        self.factors.iter().map(|&(_, a)| a as u64).sum()
    }

    /// The number of distinct prime factors.
    pub fn distinct_prime_count(&self) -> u64 {
        self.factors.len() as u64
    }

    /// All divisors of n in increasing order.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divisors = vec![1u64];
        for &(p, a) in &self.factors {
            let mut extended = Vec::with_capacity(divisors.len() * (a as usize + 1));
            for &t in &divisors {
                let mut tp = t;
                extended.push(tp);
                for _ in 0..a {
                    tp *= p;
                    extended.push(tp);
                }
            }
            divisors = extended;
        }
        divisors.sort_unstable();
        divisors
    }

    pub fn is_prime(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// Factorize `n` with the sieve when one is supplied (requiring `n` within
/// its limit) and by trial division otherwise.
pub fn factorize(n: u64, sieve: Option<&SpfSieve>) -> Result<Factorization> {
    match sieve {
        Some(s) => s.factorize(n),
        None => Factorization::of(n),
    }
}

/// Primality by trial division; false for 0 and 1.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut p = 3u64;
    while p <= n / p {
        if n.is_multiple_of(p) {
            return false;
        }
        p += 2;
    }
    true
}
