use std::ffi::OsString;
use std::io::{self, Write};

use clap::Parser;
use dpseq::{
    autocorrelation, autocorrelation_centered, check_pair_identities, check_ramanujan_bound,
    divergence_positions, divisor_count, factorize, generate_window, kappa,
    largely_composite_up_to, liouville, pack_bits, period_refutation_witness, period_scan,
    running_sums, SeqKind, SpfSieve,
};

use crate::opts::{Cli, Command};
use crate::output::{fmt_f64, open_sink, Emitter, Field};

/// Parse arguments, run the selected command, and return the process exit
/// code: 0 on success, 1 on runtime failure, 2 on usage errors.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            // clap sends --help/--version to stdout (code 0) and usage
            // errors to stderr (code 2)
            let _ = err.print();
            return err.exit_code();
        }
    };
    match execute(cli) {
        Ok(()) => 0,
        Err(CmdError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CmdError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

enum CmdError {
    Usage(String),
    Runtime(String),
}

impl From<dpseq::Error> for CmdError {
    fn from(err: dpseq::Error) -> Self {
        match err {
            dpseq::Error::InvalidArgument(_) => CmdError::Usage(err.to_string()),
            dpseq::Error::WitnessNotFound { .. } => CmdError::Runtime(err.to_string()),
        }
    }
}

impl From<io::Error> for CmdError {
    fn from(err: io::Error) -> Self {
        CmdError::Runtime(format!("output failed: {err}"))
    }
}

/// Ranges this small are cheaper per element through a sieve, as long as the
/// table itself stays modest.
const SIEVE_CEILING: u64 = 1 << 24;

fn maybe_sieve(to: u64, span: u64) -> dpseq::Result<Option<SpfSieve>> {
    if to <= SIEVE_CEILING && span > 4096 {
        Ok(Some(SpfSieve::build(to)?))
    } else {
        Ok(None)
    }
}

fn execute(cli: Cli) -> Result<(), CmdError> {
    let Cli {
        command,
        format,
        out,
    } = cli;
    let emitter = |columns: &[&'static str]| -> io::Result<Emitter> {
        Emitter::new(open_sink(&out)?, format, columns)
    };
    match command {
        Command::Table { to } => {
            let mut em = emitter(&["n", "v", "d", "delta", "kappa", "lambda", "S"])?;
            let sieve = SpfSieve::build(to)?;
            let kappa_window = generate_window(SeqKind::Kappa, 1, to, Some(&sieve))?;
            let lambda_window = generate_window(SeqKind::Lambda, 1, to, Some(&sieve))?;
            let sums = running_sums(to)?;
            for n in 1..=to {
                let f = sieve.factorize(n)?;
                let i = (n - 1) as usize;
                em.row(&[
                    Field::UInt(n),
                    Field::UInt(f.valency()),
                    Field::UInt(f.divisor_count()),
                    Field::UInt(f.divisor_pairs()),
                    Field::Int(kappa_window.values()[i] as i64),
                    Field::Int(lambda_window.values()[i] as i64),
                    Field::Int(sums.sums()[i]),
                ])?;
            }
            em.comment("v(1)=0 computed; reference table prints 1")?;
            if to >= 16 {
                em.comment("S(16)=-2 computed; reference table prints 0")?;
            }
            em.finish()?;
        }
        Command::Series { kind, from, to } => {
            use crate::opts::SeriesKind;
            if from > to {
                return Err(CmdError::Usage(format!(
                    "empty range: from {from} > to {to}"
                )));
            }
            let mut em = emitter(&["n", kind.column()])?;
            match kind {
                SeriesKind::RunningSum => {
                    let sums = running_sums(to)?;
                    for n in from..=to {
                        em.row(&[Field::UInt(n), Field::Int(sums.sums()[(n - 1) as usize])])?;
                    }
                }
                SeriesKind::Delta => {
                    let sieve = maybe_sieve(to, to - from + 1)?;
                    for n in from..=to {
                        let delta = factorize(n, sieve.as_ref())?.divisor_pairs();
                        em.row(&[Field::UInt(n), Field::UInt(delta)])?;
                    }
                }
                SeriesKind::Kappa | SeriesKind::Lambda => {
                    let seq_kind = if kind == SeriesKind::Kappa {
                        SeqKind::Kappa
                    } else {
                        SeqKind::Lambda
                    };
                    let sieve = maybe_sieve(to, to - from + 1)?;
                    let window = generate_window(seq_kind, from, to, sieve.as_ref())?;
                    for (i, &x) in window.values().iter().enumerate() {
                        em.row(&[Field::UInt(from + i as u64), Field::Int(x as i64)])?;
                    }
                }
            }
            em.finish()?;
        }
        Command::Autocorr {
            kind,
            n,
            max_lag,
            mode,
            centered,
        } => {
            if max_lag >= n {
                return Err(CmdError::Usage(format!(
                    "max_lag {max_lag} must be smaller than the window length {n}"
                )));
            }
            let mode = dpseq::LagMode::from(mode);
            let window_end = match mode {
                dpseq::LagMode::Extended => n
                    .checked_add(max_lag)
                    .ok_or_else(|| CmdError::Usage("window end overflows".into()))?,
                dpseq::LagMode::Circular => n,
            };
            let sieve = maybe_sieve(window_end, window_end)?;
            let window = generate_window(SeqKind::from(kind), 1, window_end, sieve.as_ref())?;
            let lag = max_lag as usize;
            let report = if centered {
                autocorrelation_centered(&window, lag, mode)?
            } else {
                autocorrelation(&window, lag, mode)?
            };
            let mut em = emitter(&["lag", "value"])?;
            for (k, &value) in report.values.iter().enumerate() {
                em.row(&[Field::UInt(k as u64), Field::Float(value)])?;
            }
            let mut meta = format!(
                "mu={} mu_squared={} mode={}",
                fmt_f64(report.mean),
                fmt_f64(report.mean * report.mean),
                report.mode.name()
            );
            if centered {
                meta.push_str(" centered=true");
            }
            em.comment(&meta)?;
            em.finish()?;
        }
        Command::PeriodScan {
            start,
            window,
            max_period,
        } => {
            let checks = period_scan(start, window, max_period)?;
            let mut em = emitter(&["k", "refuted_at"])?;
            for check in checks {
                em.row(&[Field::UInt(check.k), Field::OptUInt(check.refuted_at)])?;
            }
            em.finish()?;
        }
        Command::Witness { k, start, bound } => {
            let witness = period_refutation_witness(k, start, bound)?;
            let mut em = emitter(&[
                "k",
                "p",
                "semiprime",
                "p1",
                "p2",
                "kappa_p",
                "kappa_semiprime",
            ])?;
            em.row(&[
                Field::UInt(witness.k),
                Field::UInt(witness.p),
                Field::UInt(witness.semiprime),
                Field::UInt(witness.semiprime_factors.0),
                Field::UInt(witness.semiprime_factors.1),
                Field::Int(kappa(witness.p)? as i64),
                Field::Int(kappa(witness.semiprime)? as i64),
            ])?;
            em.finish()?;
        }
        Command::Compare { limit } => {
            let positions = divergence_positions(limit)?;
            let mut em = emitter(&["n", "kappa", "lambda"])?;
            for n in positions {
                em.row(&[
                    Field::UInt(n),
                    Field::Int(kappa(n)? as i64),
                    Field::Int(liouville(n)? as i64),
                ])?;
            }
            em.finish()?;
        }
        Command::Bits {
            kind,
            from,
            to,
            packed,
        } => {
            if from > to {
                return Err(CmdError::Usage(format!(
                    "empty range: from {from} > to {to}"
                )));
            }
            let sieve = maybe_sieve(to, to - from + 1)?;
            let window = generate_window(SeqKind::from(kind), from, to, sieve.as_ref())?;
            let bits = window.to_bits();
            let mut sink = open_sink(&out)?;
            if packed {
                sink.write_all(&pack_bits(&bits)?)?;
            } else {
                for line in bits.as_bytes().chunks(64) {
                    sink.write_all(line)?;
                    sink.write_all(b"\n")?;
                }
            }
            sink.flush()?;
        }
        Command::LargelyComposite { limit } => {
            let mut em = emitter(&["n", "d"])?;
            for n in largely_composite_up_to(limit)? {
                em.row(&[Field::UInt(n), Field::UInt(divisor_count(n)?)])?;
            }
            em.finish()?;
        }
        Command::BoundCheck { n, s } => {
            let report = check_ramanujan_bound(n, s)?;
            let mut em = emitter(&["n", "s", "lhs", "rhs", "holds_nonstrict", "holds_strict"])?;
            em.row(&[
                Field::UInt(report.n),
                Field::Float(report.s),
                Field::Float(report.lhs),
                Field::Float(report.rhs),
                Field::Bool(report.holds_nonstrict),
                Field::Bool(report.holds_strict),
            ])?;
            em.finish()?;
        }
        Command::PairCheck { n1, n2 } => {
            let report = check_pair_identities(n1, n2)?;
            let mut em = emitter(&[
                "n1",
                "n2",
                "coprime",
                "d_product_relation",
                "delta_bound_holds_nonstrict",
                "delta_bound_holds_strict",
                "equality_case",
            ])?;
            em.row(&[
                Field::UInt(report.n1),
                Field::UInt(report.n2),
                Field::Bool(report.coprime),
                Field::Str(report.d_product_relation.name()),
                Field::Bool(report.delta_bound_holds_nonstrict),
                Field::Bool(report.delta_bound_holds_strict),
                Field::Bool(report.equality_case),
            ])?;
            em.finish()?;
        }
    }
    Ok(())
}
