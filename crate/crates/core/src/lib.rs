//! Exact verification of supercongruences `a_{np} ≡ a_n (mod p^r)` for
//! hypergeometric-coefficient sequences, the intermediate congruences
//! behind them, and their re-derivation from eta-quotient and theta-series
//! expansions.

pub mod engine;
pub mod error;
pub mod exact;
pub mod lemmas;
pub mod primes;
pub mod qseries;
pub mod report;
pub mod sequences;

pub use engine::{
    check_supercongruence, kazandzidis_check, run_sweep, run_sweep_with, PrimeSelection,
    SweepOptions, SweepReport, SweepSpec, DEFAULT_INDEX_CAP,
};
pub use error::{Error, Result};
pub use exact::{
    congruent, congruent_mod, padic_valuation, CongruenceClaim, CongruenceResult, ExactRational,
    Valuation, ValuationValue,
};
pub use primes::{is_prime, prime_stream};
pub use qseries::TruncatedSeries;
pub use report::{Record, Summary};
pub use sequences::{SequenceId, SequenceTable};
