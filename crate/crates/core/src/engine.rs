//! Batch verification of `a_{np} ≡ a_n (mod p^r)` over prime/index grids.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{binomial, check_working_prime, congruent, CongruenceResult, ExactRational};
use crate::primes::{is_prime, prime_stream};
use crate::report::{Record, Summary};
use crate::sequences::{SequenceId, SequenceTable};

/// Largest sequence index a sweep may request unless overridden.
pub const DEFAULT_INDEX_CAP: u64 = 5000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PrimeSelection {
    Explicit {
        primes: Vec<u64>,
    },
    Filtered {
        bound: u64,
        modulus: u64,
        residue: u64,
    },
}

impl PrimeSelection {
    /// The primes `3 < p <= bound` in the sequence's theorem residue class.
    pub fn theorem_default(id: SequenceId, bound: u64) -> Self {
        let (modulus, residue) = id.theorem_residue().unwrap_or((1, 0));
        PrimeSelection::Filtered {
            bound,
            modulus,
            residue,
        }
    }

    /// Ascending, deduplicated primes, all `> 3`.
    pub fn realize(&self) -> Result<Vec<u64>> {
        match self {
            PrimeSelection::Explicit { primes } => {
                let mut out = primes.clone();
                for &p in &out {
                    check_working_prime(p)?;
                }
                out.sort_unstable();
                out.dedup();
                Ok(out)
            }
            PrimeSelection::Filtered {
                bound,
                modulus,
                residue,
            } => prime_stream(*bound, *modulus, *residue),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub sequence: SequenceId,
    pub r: u32,
    pub primes: PrimeSelection,
    pub n_max: u64,
}

impl SweepSpec {
    /// Theorem defaults: residue class and exponent of the known congruence.
    pub fn theorem(sequence: SequenceId, bound: u64, n_max: u64) -> Self {
        Self {
            sequence,
            r: sequence.theorem_exponent(),
            primes: PrimeSelection::theorem_default(sequence, bound),
            n_max,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepOptions {
    pub index_cap: u64,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            index_cap: DEFAULT_INDEX_CAP,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub spec: SweepSpec,
    pub primes: Vec<u64>,
    pub records: Vec<Record>,
    pub summary: Summary,
    pub wall_time_ms: u64,
}

impl SweepReport {
    /// JSON with the wall-time field zeroed; identical specs give identical
    /// bytes.
    pub fn canonical_json(&self) -> String {
        let mut copy = self.clone();
        copy.wall_time_ms = 0;
        serde_json::to_string_pretty(&copy).expect("report serializes")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SupercongruenceOutcome {
    pub result: CongruenceResult,
    pub hypothesis_met: bool,
}

fn supercongruence_cell(
    table: &SequenceTable,
    n: u64,
    p: u64,
    r: u32,
) -> Result<SupercongruenceOutcome> {
    let index = n * p;
    let missing = |i| Error::InvalidArgument(format!("index {i} not in table"));
    let high = table.get(index).ok_or_else(|| missing(index))?;
    let low = table.get(n).ok_or_else(|| missing(n))?;
    Ok(SupercongruenceOutcome {
        result: congruent(high, low, p, r)?,
        hypothesis_met: table.id().hypothesis_met(n, p, r),
    })
}

/// `a_{np} ≡ a_n (mod p^r)` for one cell. Primes outside the theorem's
/// hypothesis are evaluated but flagged.
pub fn check_supercongruence(
    seq: SequenceId,
    n: u64,
    p: u64,
    r: u32,
) -> Result<SupercongruenceOutcome> {
    check_working_prime(p)?;
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let index = n * p;
    if index > DEFAULT_INDEX_CAP {
        return Err(Error::IndexCap {
            index,
            cap: DEFAULT_INDEX_CAP,
        });
    }
    let mut table = SequenceTable::new(seq);
    table.extend_to(index);
    supercongruence_cell(&table, n, p, r)
}

pub fn run_sweep(spec: &SweepSpec) -> Result<SweepReport> {
    run_sweep_with(spec, SweepOptions::default())
}

/// Evaluates every `(p, n)` cell, `1 <= n <= n_max`, on the current rayon
/// pool. Records come back ordered by `(p, n)`.
pub fn run_sweep_with(spec: &SweepSpec, options: SweepOptions) -> Result<SweepReport> {
    let start = Instant::now();
    if spec.r == 0 {
        return Err(Error::InvalidExponent(0));
    }
    if spec.n_max == 0 {
        return Err(Error::InvalidArgument("n_max must be positive".into()));
    }
    let primes = spec.primes.realize()?;
    let max_index = primes.last().map_or(spec.n_max, |p| p * spec.n_max);
    if max_index > options.index_cap {
        return Err(Error::IndexCap {
            index: max_index,
            cap: options.index_cap,
        });
    }

    let table = SequenceTable::cross_checked(spec.sequence, max_index)?;

    let cells: Vec<(u64, u64)> = primes
        .iter()
        .flat_map(|&p| (1..=spec.n_max).map(move |n| (p, n)))
        .collect();
    let records = cells
        .par_iter()
        .map(|&(p, n)| {
            let outcome = supercongruence_cell(&table, n, p, spec.r)?;
            let mut record = Record::congruence("supercongruence", p, outcome.result)
                .with_sequence(spec.sequence)
                .with_n(n)
                .with_index(n * p);
            record.hypothesis_met = outcome.hypothesis_met;
            Ok(record)
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(SweepReport {
        spec: spec.clone(),
        summary: Summary::of(&records),
        primes,
        records,
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}

/// `C(pa, pb) ≡ C(a, b) (mod p³)`.
pub fn kazandzidis_check(a: u64, b: u64, p: u64) -> Result<CongruenceResult> {
    check_working_prime(p)?;
    if a < b {
        return Err(Error::InvalidArgument(format!(
            "need a >= b, got a = {a}, b = {b}"
        )));
    }
    let high = ExactRational::from(binomial(p * a, p * b));
    let low = ExactRational::from(binomial(a, b));
    congruent(&high, &low, p, 3)
}

/// Whether `p` is a usable prime for the engine (prime and `> 3`).
pub fn is_working_prime(p: u64) -> bool {
    p > 3 && is_prime(p)
}
