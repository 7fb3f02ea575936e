//! Flat verification records shared by sweeps, lemma checks and q-series
//! cross-checks, with JSON and CSV encodings that use the same columns.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{CongruenceResult, ValuationValue};
use crate::sequences::SequenceId;

/// One verified cell. Field names are part of the report schema.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub check: String,
    pub sequence: Option<SequenceId>,
    pub prime: Option<u64>,
    pub n: Option<u64>,
    pub index: Option<u64>,
    pub verdict: bool,
    /// `None` for checks that are exact equalities rather than congruences.
    pub valuation: Option<ValuationValue>,
    pub hypothesis_met: bool,
}

impl Record {
    pub fn congruence(check: impl Into<String>, prime: u64, result: CongruenceResult) -> Self {
        Self {
            check: check.into(),
            sequence: None,
            prime: Some(prime),
            n: None,
            index: None,
            verdict: result.verdict,
            valuation: Some(result.valuation),
            hypothesis_met: true,
        }
    }

    /// A coefficient-wise equality check with no prime attached.
    pub fn equality(check: impl Into<String>, verdict: bool) -> Self {
        Self {
            check: check.into(),
            sequence: None,
            prime: None,
            n: None,
            index: None,
            verdict,
            valuation: None,
            hypothesis_met: true,
        }
    }

    pub fn with_n(mut self, n: u64) -> Self {
        self.n = Some(n);
        self
    }

    pub fn with_sequence(mut self, id: SequenceId) -> Self {
        self.sequence = Some(id);
        self
    }

    pub fn with_index(mut self, index: u64) -> Self {
        self.index = Some(index);
        self
    }

    /// A failure that counts against the run, i.e. inside the hypothesis.
    pub fn is_failure(&self) -> bool {
        self.hypothesis_met && !self.verdict
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub records: usize,
    /// Every false verdict, flagged cells included.
    pub failures: usize,
    /// False verdicts among cells that satisfy the hypothesis.
    pub hypothesis_failures: usize,
    pub outside_hypothesis: usize,
}

impl Summary {
    pub fn of(records: &[Record]) -> Self {
        Self {
            records: records.len(),
            failures: records.iter().filter(|r| !r.verdict).count(),
            hypothesis_failures: records.iter().filter(|r| r.is_failure()).count(),
            outside_hypothesis: records.iter().filter(|r| !r.hypothesis_met).count(),
        }
    }
}

pub fn write_records_csv<W: Write>(records: &[Record], writer: W) -> Result<()> {
    let err = |e: csv::Error| Error::InvalidArgument(format!("csv write failed: {e}"));
    let mut w = csv::Writer::from_writer(writer);
    for record in records {
        w.serialize(record).map_err(err)?;
    }
    if records.is_empty() {
        w.write_record([
            "check",
            "sequence",
            "prime",
            "n",
            "index",
            "verdict",
            "valuation",
            "hypothesis_met",
        ])
        .map_err(err)?;
    }
    w.flush()
        .map_err(|e| Error::InvalidArgument(format!("csv write failed: {e}")))?;
    Ok(())
}
