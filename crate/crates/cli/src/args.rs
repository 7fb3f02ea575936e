use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use supercongruence::engine::{PrimeSelection, SweepSpec, DEFAULT_INDEX_CAP};
use supercongruence::qseries::{NamedSeries, DEFAULT_TRUNCATION};
use supercongruence::SequenceId;

#[derive(Debug, Parser)]
#[command(name = "verify", version, about = "Exact supercongruence verification")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a_{np} ≡ a_n (mod p^r) over a prime/index grid.
    Sweep(SweepArgs),
    /// Run one proof-layer verifier, for one prime or all qualifying primes.
    Lemma(LemmaArgs),
    /// Re-derive sequences from q-expansions, or dump a named series.
    Qseries(QseriesArgs),
    /// Run the full default suite.
    All(OutputArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Report path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

fn parse_sequence(s: &str) -> Result<SequenceId, String> {
    SequenceId::from_str(s).map_err(|e| e.to_string())
}

fn parse_series(s: &str) -> Result<NamedSeries, String> {
    NamedSeries::from_str(s).map_err(|e| e.to_string())
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long = "seq", value_parser = parse_sequence)]
    pub sequence: SequenceId,
    /// Largest prime considered.
    #[arg(long, default_value_t = 97)]
    pub bound: u64,
    #[arg(long, requires = "residue")]
    pub modulus: Option<u64>,
    #[arg(long, requires = "modulus")]
    pub residue: Option<u64>,
    /// Explicit comma-separated prime list (overrides the residue filter).
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["modulus", "residue"])]
    pub primes: Option<Vec<u64>>,
    /// Allow residue filters outside the theorem's hypothesis.
    #[arg(long)]
    pub explore: bool,
    #[arg(long, default_value_t = 20)]
    pub n_max: u64,
    /// Congruence exponent; defaults to the sequence's theorem value.
    #[arg(long)]
    pub r: Option<u32>,
    /// Largest sequence index a sweep may build.
    #[arg(long, default_value_t = DEFAULT_INDEX_CAP)]
    pub cap: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

impl SweepArgs {
    /// The sweep described by the flags. A residue filter other than the
    /// theorem's needs `--explore`.
    pub fn to_spec(&self) -> Result<SweepSpec, String> {
        let default = self.sequence.theorem_residue().unwrap_or((1, 0));
        let primes = match (&self.primes, self.modulus, self.residue) {
            (Some(list), _, _) => PrimeSelection::Explicit {
                primes: list.clone(),
            },
            (None, Some(modulus), Some(residue)) => {
                if (modulus, residue) != default && !self.explore {
                    return Err(format!(
                        "residue filter {residue} mod {modulus} differs from the {} theorem class \
                         {} mod {}; pass --explore to run it anyway",
                        self.sequence, default.1, default.0
                    ));
                }
                PrimeSelection::Filtered {
                    bound: self.bound,
                    modulus,
                    residue,
                }
            }
            _ => PrimeSelection::theorem_default(self.sequence, self.bound),
        };
        Ok(SweepSpec {
            sequence: self.sequence,
            r: self.r.unwrap_or_else(|| self.sequence.theorem_exponent()),
            primes,
            n_max: self.n_max,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LemmaName {
    Lemma20,
    Eq22,
    Eq23,
    Corollary24,
    #[value(name = "F", alias = "f")]
    F,
    #[value(name = "AB", alias = "ab")]
    Ab,
    Lemma32,
    SStep,
    #[value(name = "G", alias = "g")]
    G,
    Lemma51,
    #[value(name = "MN", alias = "mn")]
    Mn,
    Harmonic,
    Pairing,
    Eq5051,
    TStep,
    Kazandzidis,
}

impl LemmaName {
    /// Residue class `(modulus, residue)` the verifier lives in.
    pub fn residue_class(self) -> (u64, u64) {
        use LemmaName::*;
        match self {
            Lemma20 | Eq22 | Eq23 | Corollary24 | F | Ab | Lemma32 | SStep => (4, 1),
            G | Lemma51 | Mn | Harmonic | Pairing | Eq5051 | TStep => (6, 1),
            Kazandzidis => (1, 0),
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct LemmaArgs {
    #[arg(long, value_enum)]
    pub name: LemmaName,
    /// Single prime; all qualifying primes up to --bound when omitted.
    #[arg(long)]
    pub p: Option<u64>,
    #[arg(long, default_value_t = 101)]
    pub bound: u64,
    /// Single n for the F, G, AB and step verifiers.
    #[arg(long)]
    pub n: Option<u64>,
    /// Upper end of the n range when --n is omitted.
    #[arg(long, default_value_t = 10)]
    pub n_max: u64,
    /// Single pairing index for `pairing`.
    #[arg(long)]
    pub i: Option<u64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct QseriesArgs {
    /// Number of expansion coefficients to recover.
    #[arg(long, default_value_t = 12)]
    pub count: usize,
    /// Series truncation order.
    #[arg(long = "truncation", default_value_t = DEFAULT_TRUNCATION)]
    pub truncation: usize,
    /// Order through which the transformation identities are checked.
    #[arg(long, default_value_t = 24)]
    pub transform_order: usize,
    /// Dump this series as CSV (exponent,numerator,denominator) instead.
    #[arg(long, value_parser = parse_series)]
    pub dump: Option<NamedSeries>,
    #[command(flatten)]
    pub output: OutputArgs,
}
