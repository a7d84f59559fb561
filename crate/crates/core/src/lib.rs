//! Divisor-pair arithmetic and the ±1 sequences built from it.
//!
//! The center of the crate is the pair count delta(n) = ceil(d(n)/2), the
//! number of unordered divisor pairs {t, n/t} of n, and the sign sequence
//! kappa(n) = (-1)^delta(n). Around those sit the classical neighbours
//! (divisor count d, prime-factor count v, distinct-prime count, the
//! completely multiplicative parity lambda, divisor power sums), batch
//! window generation backed by a linear smallest-prime-factor sieve, and
//! diagnostics that probe how random the kappa window looks: running-sum
//! drift, autocorrelation, balance, empirical period scanning, and
//! prime/semiprime certificates that refute any candidate period.
//!
//! ```
//! use dpseq::{kappa, running_sums, SeqKind};
//!
//! let signs: Vec<i8> = (1..=8).map(|n| kappa(n).unwrap()).collect();
//! assert_eq!(signs, [-1, -1, -1, 1, -1, 1, -1, 1]);
//! assert_eq!(running_sums(10).unwrap().final_sum(), 0);
//! assert_eq!(SeqKind::Kappa.name(), "kappa");
//! ```

pub mod analysis;
pub mod arith;
pub mod error;
pub mod factor;
pub mod seq;
pub mod sieve;

pub use analysis::{
    autocorrelation, autocorrelation_centered, balance_stats, check_pair_identities,
    divergence_positions, mean, period_refutation_witness, period_scan, scan_sequence_periods,
    AutocorrelationReport, BalanceStats, DProductRelation, LagMode, PairIdentityReport,
    PeriodCheck, PeriodWitness,
};
pub use arith::{
    check_ramanujan_bound, distinct_prime_count, divisor_count, divisor_pairs, generalized_valence,
    largely_composite_up_to, sigma_minus_s, valency, BoundCheckReport, ExponentReducer,
};
pub use error::{Error, Result};
pub use factor::{factorize, is_prime, Factorization};
pub use seq::{
    bits_to_signs, generate_window, kappa, kappa_prime_power, liouville, liouville_divisor_sum,
    pack_bits, running_sums, signs_to_bits, RunningSumSeries, SeqKind, SignSequence,
};
pub use sieve::SpfSieve;
