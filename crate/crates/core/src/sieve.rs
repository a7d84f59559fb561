use crate::error::{invalid, Result};
use crate::factor::Factorization;

/// Smallest-prime-factor table for every integer in `2..=limit`.
///
/// Construction runs a linear sieve (each composite is crossed off exactly
/// once, by its smallest prime factor), after which any in-range integer
/// factorizes in O(log n) by repeated table lookup. The table is immutable
/// once built, so shared references may be used from any number of threads.
pub struct SpfSieve {
    limit: u64,
    spf: Vec<u32>,
}

impl SpfSieve {
    /// Build the table for `2..=limit`. A limit of 1 yields an empty table.
    pub fn build(limit: u64) -> Result<Self> {
        if limit == 0 {
            return Err(invalid("sieve limit must be at least 1"));
        }
        if limit > u32::MAX as u64 {
            return Err(invalid("sieve limit exceeds u32::MAX"));
        }
        let n = limit as usize;
        let mut spf = vec![0u32; n + 1];
        let mut primes: Vec<u32> = Vec::new();
        for i in 2..=n {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u32);
            }
            for &p in &primes {
                // p > spf[i] would cross off i*p a second time via spf(i*p) = p' < p
                if p > spf[i] || (p as usize) * i > n {
                    break;
                }
                spf[(p as usize) * i] = p;
            }
        }
        Ok(SpfSieve { limit, spf })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Smallest prime factor of `n`; requires `2 <= n <= limit`.
    pub fn smallest_prime_factor(&self, n: u64) -> Result<u64> {
        self.check_range(n)?;
        Ok(self.spf[n as usize] as u64)
    }

    /// Whether `n` is prime; requires `2 <= n <= limit`.
    pub fn is_prime(&self, n: u64) -> Result<bool> {
        self.check_range(n)?;
        Ok(self.spf[n as usize] as u64 == n)
    }

    /// Factorize `n` by peeling smallest prime factors; requires `1 <= n <= limit`.
    pub fn factorize(&self, n: u64) -> Result<Factorization> {
        if n == 0 {
            return Err(invalid("cannot factorize 0"));
        }
        if n > self.limit {
            return Err(invalid(format!(
                "{n} is beyond the sieve limit {}",
                self.limit
            )));
        }
        let mut m = n as usize;
        let mut factors = Vec::new();
        while m > 1 {
            // peeling by smallest factor emits primes in increasing order
            let p = self.spf[m] as usize;
            let mut a = 0u32;
            while m.is_multiple_of(p) {
                m /= p;
                a += 1;
            }
            factors.push((p as u64, a));
        }
        Ok(Factorization::from_sorted_parts(n, factors))
    }

    /// `(d(n) mod 4, v(n) mod 2)` straight off the table, allocation-free.
    ///
    /// d(n) mod 4 decides the parity of the divisor-pair count and v(n) mod 2
    /// the sign of the completely multiplicative parity function, so batch
    /// sign generation never needs a full factorization per element.
    pub(crate) fn divisor_parities(&self, n: u64) -> (u8, u8) {
        debug_assert!(n >= 1 && n <= self.limit);
        let mut m = n as usize;
        let mut d_mod4 = 1u8;
        let mut v_mod2 = 0u8;
        while m > 1 {
            let p = self.spf[m] as usize;
            let mut a = 0u32;
            while m.is_multiple_of(p) {
                m /= p;
                a += 1;
            }
            d_mod4 = (d_mod4 as u32 * (a + 1) % 4) as u8;
            v_mod2 ^= (a & 1) as u8;
        }
        (d_mod4, v_mod2)
    }

    fn check_range(&self, n: u64) -> Result<()> {
        if n < 2 || n > self.limit {
            return Err(invalid(format!(
                "{n} is outside the sieve range 2..={}",
                self.limit
            )));
        }
        Ok(())
    }
}
