use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{invalid, Error, Result};
use crate::factor::{is_prime, Factorization};
use crate::sieve::SpfSieve;

/// Which ±1 sequence a window holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeqKind {
    /// Sign of the divisor-pair count: -1 when ceil(d(n)/2) is odd.
    Kappa,
    /// Sign of the prime-factor count with multiplicity: -1 when v(n) is odd.
    Lambda,
}

impl SeqKind {
    pub fn name(self) -> &'static str {
        match self {
            SeqKind::Kappa => "kappa",
            SeqKind::Lambda => "lambda",
        }
    }

    fn sign_of(self, f: &Factorization) -> i8 {
        let parity = match self {
            SeqKind::Kappa => f.divisor_pairs() & 1,
            SeqKind::Lambda => f.valency() & 1,
        };
        if parity == 1 {
            -1
        } else {
            1
        }
    }
}

impl FromStr for SeqKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "kappa" => Ok(SeqKind::Kappa),
            "lambda" => Ok(SeqKind::Lambda),
            other => Err(invalid(format!(
                "unknown sequence kind {other:?}; expected kappa or lambda"
            ))),
        }
    }
}

/// kappa(n) = (-1)^(divisor-pair count of n); requires n >= 1.
pub fn kappa(n: u64) -> Result<i8> {
    Ok(SeqKind::Kappa.sign_of(&Factorization::of(n)?))
}

/// lambda(n) = (-1)^v(n), the completely multiplicative parity of the
/// prime-factor count; requires n >= 1.
pub fn liouville(n: u64) -> Result<i8> {
    Ok(SeqKind::Lambda.sign_of(&Factorization::of(n)?))
}

/// kappa at a prime power without factoring: kappa(p^a) = (-1)^ceil((a+1)/2).
pub fn kappa_prime_power(p: u64, a: u32) -> Result<i8> {
    if a == 0 {
        return Err(invalid("exponent must be at least 1"));
    }
    if !is_prime(p) {
        return Err(invalid(format!("{p} is not prime")));
    }
    // d(p^a) = a + 1, so the pair count is ceil((a+1)/2) = (a+2) / 2
    let pairs = (a as u64 + 2) / 2;
    Ok(if pairs & 1 == 1 { -1 } else { 1 })
}

/// Prefix sums S(n) = kappa(1) + ... + kappa(n) for n = 1..=upto.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunningSumSeries {
    upto: u64,
    sums: Vec<i64>,
}

impl RunningSumSeries {
    pub fn upto(&self) -> u64 {
        self.upto
    }

    /// S(1), S(2), ..., S(upto) in order.
    pub fn sums(&self) -> &[i64] {
        &self.sums
    }

    /// S(n) for 1 <= n <= upto.
    pub fn sum_at(&self, n: u64) -> Option<i64> {
        if n == 0 || n > self.upto {
            return None;
        }
        Some(self.sums[n as usize - 1])
    }

    pub fn final_sum(&self) -> i64 {
        *self.sums.last().expect("series is never empty")
    }
}

/// Running sums of kappa over [1, upto]; requires upto >= 1.
pub fn running_sums(upto: u64) -> Result<RunningSumSeries> {
    if upto == 0 {
        return Err(invalid("upto must be at least 1"));
    }
    let sieve = SpfSieve::build(upto)?;
    let window = generate_window(SeqKind::Kappa, 1, upto, Some(&sieve))?;
    let mut sums = Vec::with_capacity(window.len());
    let mut acc = 0i64;
    for &x in window.values() {
        acc += x as i64;
        sums.push(acc);
    }
    Ok(RunningSumSeries { upto, sums })
}

/// A non-empty ±1 window labeled with the sequence kind and the index of
/// its first element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignSequence {
    kind: SeqKind,
    start: u64,
    values: Vec<i8>,
}

impl SignSequence {
    /// Wrap caller-supplied values (control experiments, decoded bits).
    /// Every entry must be -1 or +1 and the window must be non-empty.
    pub fn from_values(kind: SeqKind, start: u64, values: Vec<i8>) -> Result<Self> {
        if start == 0 {
            return Err(invalid("windows are indexed from 1"));
        }
        if values.is_empty() {
            return Err(invalid("window must be non-empty"));
        }
        if values.iter().any(|&x| x != 1 && x != -1) {
            return Err(invalid("window values must be -1 or +1"));
        }
        Ok(SignSequence {
            kind,
            start,
            values,
        })
    }

    /// Decode a '0'/'1' string produced by `to_bits`.
    pub fn from_bits(kind: SeqKind, start: u64, bits: &str) -> Result<Self> {
        Self::from_values(kind, start, bits_to_signs(bits)?)
    }

    pub fn kind(&self) -> SeqKind {
        self.kind
    }

    /// Index of the first element.
    pub fn start(&self) -> u64 {
        self.start
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Bit-string form: -1 maps to '0', +1 maps to '1', order preserved.
    pub fn to_bits(&self) -> String {
        signs_to_bits(&self.values)
    }
}

/// Generate the kind's values over [from, to], using the sieve when provided
/// (the range must then sit within its limit) and trial division otherwise.
///
/// Sub-ranges are evaluated in parallel and reassembled in index order, so
/// the result is identical across thread counts.
pub fn generate_window(
    kind: SeqKind,
    from: u64,
    to: u64,
    sieve: Option<&SpfSieve>,
) -> Result<SignSequence> {
    if from == 0 {
        return Err(invalid("windows are indexed from 1"));
    }
    if from > to {
        return Err(invalid(format!("empty window: from {from} > to {to}")));
    }
    if let Some(s) = sieve {
        if to > s.limit() {
            return Err(invalid(format!(
                "window end {to} is beyond the sieve limit {}",
                s.limit()
            )));
        }
    }
    let len = usize::try_from(to - from + 1).map_err(|_| invalid("window too large"))?;
    let values: Vec<i8> = match sieve {
        Some(s) => (0..len)
            .into_par_iter()
            .map(|i| {
                let (d_mod4, v_mod2) = s.divisor_parities(from + i as u64);
                match kind {
                    // pair count ceil(d/2) is odd exactly when d = 1 or 2 (mod 4)
                    SeqKind::Kappa => {
                        if d_mod4 == 1 || d_mod4 == 2 {
                            -1
                        } else {
                            1
                        }
                    }
                    SeqKind::Lambda => {
                        if v_mod2 == 1 {
                            -1
                        } else {
                            1
                        }
                    }
                }
            })
            .collect(),
        None => (0..len)
            .into_par_iter()
            .map(|i| Factorization::of(from + i as u64).map(|f| kind.sign_of(&f)))
            .collect::<Result<Vec<i8>>>()?,
    };
    Ok(SignSequence {
        kind,
        start: from,
        values,
    })
}

/// -1 maps to '0', +1 maps to '1'; entries outside ±1 are rejected.
pub fn signs_to_bits(values: &[i8]) -> String {
    values
        .iter()
        .map(|&x| if x == 1 { '1' } else { '0' })
        .collect()
}

/// Inverse of `signs_to_bits`; rejects characters outside {'0', '1'}.
pub fn bits_to_signs(bits: &str) -> Result<Vec<i8>> {
    bits.chars()
        .map(|c| match c {
            '0' => Ok(-1),
            '1' => Ok(1),
            other => Err(invalid(format!("invalid bit character {other:?}"))),
        })
        .collect()
}

/// Pack a bit string into bytes, most significant bit first, zero-padding
/// the final byte.
pub fn pack_bits(bits: &str) -> Result<Vec<u8>> {
    let mut bytes = Vec::with_capacity(bits.len().div_ceil(8));
    let mut current = 0u8;
    let mut filled = 0u8;
    for c in bits.chars() {
        let bit = match c {
            '0' => 0,
            '1' => 1,
            other => return Err(invalid(format!("invalid bit character {other:?}"))),
        };
        current = (current << 1) | bit;
        filled += 1;
        if filled == 8 {
            bytes.push(current);
            current = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        bytes.push(current << (8 - filled));
    }
    Ok(bytes)
}

/// Sum of lambda over the divisors of n: 1 when n is a perfect square,
/// 0 otherwise; requires n >= 1.
pub fn liouville_divisor_sum(n: u64) -> Result<i64> {
    let f = Factorization::of(n)?;
    // each divisor corresponds to one exponent tuple; track v(t) per tuple
    let mut divisor_valencies = vec![0u32];
    for &(_, a) in f.factors() {
        let mut extended = Vec::with_capacity(divisor_valencies.len() * (a as usize + 1));
        for &v in &divisor_valencies {
            for j in 0..=a {
                extended.push(v + j);
            }
        }
        divisor_valencies = extended;
    }
    Ok(divisor_valencies
        .iter()
        .map(|&v| if v & 1 == 1 { -1i64 } else { 1 })
        .sum())
}
