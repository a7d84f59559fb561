use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use dpseq::{LagMode, SeqKind};

#[derive(Debug, Parser)]
#[command(
    name = "dpseq",
    version,
    about = "Divisor-pair sequences: reference tables, window generation, and randomness diagnostics"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format for row-oriented commands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print n, v, d, delta, kappa, lambda, S for n = 1..=to.
    Table {
        #[arg(long, default_value_t = 16, value_parser = positive_u64())]
        to: u64,
    },
    /// Emit one series (delta, S, kappa, or lambda) over [from, to].
    Series {
        #[arg(long, value_enum)]
        kind: SeriesKind,
        #[arg(long, default_value_t = 1, value_parser = positive_u64())]
        from: u64,
        #[arg(long, value_parser = positive_u64())]
        to: u64,
    },
    /// Autocorrelation C(0..=max_lag) of a kappa or lambda window [1, n].
    Autocorr {
        #[arg(long, value_enum, default_value_t = KindArg::Kappa)]
        kind: KindArg,
        /// Window length N (the number of positions averaged per lag).
        #[arg(long, value_parser = positive_u64())]
        n: u64,
        #[arg(long)]
        max_lag: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::Extended)]
        mode: ModeArg,
        /// Subtract the window mean before the lag products.
        #[arg(long)]
        centered: bool,
    },
    /// Scan a kappa window for candidate periods and report refutations.
    PeriodScan {
        #[arg(long, default_value_t = 1, value_parser = positive_u64())]
        start: u64,
        /// Number of window positions compared per candidate period.
        #[arg(long, value_parser = positive_u64())]
        window: u64,
        #[arg(long, value_parser = positive_u64())]
        max_period: u64,
    },
    /// Find the smallest prime p with p + k a semiprime, certifying that k
    /// is not a period of kappa.
    Witness {
        #[arg(long, value_parser = positive_u64())]
        k: u64,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(2..))]
        start: u64,
        #[arg(long, default_value_t = 1_000_000, value_parser = positive_u64())]
        bound: u64,
    },
    /// List every n <= limit where kappa(n) differs from lambda(n).
    Compare {
        #[arg(long, value_parser = positive_u64())]
        limit: u64,
    },
    /// Export a kappa or lambda window as bits: ASCII '0'/'1' lines, or raw
    /// bytes with --packed (most significant bit first). Ignores --format.
    Bits {
        #[arg(long, value_enum, default_value_t = KindArg::Kappa)]
        kind: KindArg,
        #[arg(long, default_value_t = 1, value_parser = positive_u64())]
        from: u64,
        #[arg(long, value_parser = positive_u64())]
        to: u64,
        #[arg(long)]
        packed: bool,
    },
    /// List every n <= limit whose divisor count is a running maximum.
    LargelyComposite {
        #[arg(long, value_parser = positive_u64())]
        limit: u64,
    },
    /// Evaluate the divisor-power-sum bound for one (n, s).
    BoundCheck {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        n: u64,
        #[arg(long)]
        s: f64,
    },
    /// Evaluate the divisor-pair product relations for one (n1, n2).
    PairCheck {
        #[arg(long, value_parser = positive_u64())]
        n1: u64,
        #[arg(long, value_parser = positive_u64())]
        n2: u64,
    },
}

fn positive_u64() -> clap::builder::RangedU64ValueParser {
    clap::value_parser!(u64).range(1..)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    Delta,
    #[value(name = "S", alias = "s")]
    RunningSum,
    Kappa,
    Lambda,
}

impl SeriesKind {
    pub fn column(self) -> &'static str {
        match self {
            SeriesKind::Delta => "delta",
            SeriesKind::RunningSum => "S",
            SeriesKind::Kappa => "kappa",
            SeriesKind::Lambda => "lambda",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Kappa,
    Lambda,
}

impl From<KindArg> for SeqKind {
    fn from(kind: KindArg) -> Self {
        match kind {
            KindArg::Kappa => SeqKind::Kappa,
            KindArg::Lambda => SeqKind::Lambda,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Extended,
    Circular,
}

impl From<ModeArg> for LagMode {
    fn from(mode: ModeArg) -> Self {
        match mode {
            ModeArg::Extended => LagMode::Extended,
            ModeArg::Circular => LagMode::Circular,
        }
    }
}
