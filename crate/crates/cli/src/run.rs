use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use supercongruence::engine::{
    kazandzidis_check, run_sweep_with, PrimeSelection, SweepOptions, SweepSpec,
};
use supercongruence::lemmas::{self, CheckBundle};
use supercongruence::qseries::{
    cross_derive, cubic_transformation_check, kummer_transformation_check, ModularPair,
    TransformationCheck, DEFAULT_TRUNCATION,
};
use supercongruence::{prime_stream, Error, Record, SequenceId, Summary};

use crate::args::{Cli, Command, LemmaArgs, LemmaName, OutputArgs, QseriesArgs, SweepArgs};
use crate::output::{self, Payload};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Cap(String),
    Io(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Cap(_) => EXIT_CAP,
            CliError::Io(_) => EXIT_IO,
            CliError::Internal(_) => EXIT_FAILURE,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Cap(m) | CliError::Io(m) | CliError::Internal(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::IndexCap { .. } => CliError::Cap(e.to_string()),
            Error::Inconsistent(_) => CliError::Internal(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

/// Serialized report. `spec` is present for sweeps only.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spec: Option<SweepSpec>,
    pub notes: Vec<String>,
    pub summary: Summary,
    pub records: Vec<Record>,
    pub wall_time_ms: u64,
}

impl Report {
    fn new(
        command: &str,
        spec: Option<SweepSpec>,
        notes: Vec<String>,
        records: Vec<Record>,
        start: Instant,
    ) -> Self {
        Self {
            command: command.to_string(),
            spec,
            notes,
            summary: Summary::of(&records),
            records,
            wall_time_ms: start.elapsed().as_millis() as u64,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.summary.hypothesis_failures > 0 {
            EXIT_FAILURE
        } else {
            EXIT_OK
        }
    }
}

/// Runs a parsed command line and returns the process exit code.
pub fn execute(cli: Cli) -> i32 {
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}

fn dispatch(command: Command) -> Result<i32, CliError> {
    let (report, out) = match command {
        Command::Sweep(a) => (sweep(&a)?, a.output),
        Command::Lemma(a) => (lemma(&a)?, a.output),
        Command::Qseries(a) => {
            if let Some(name) = a.dump {
                let series = name.build(a.truncation)?;
                output::emit(&Payload::Series(name.name(), &series), &a.output)?;
                return Ok(EXIT_OK);
            }
            (qseries(&a)?, a.output)
        }
        Command::All(out) => (all()?, out),
    };
    emit_report(&report, &out)?;
    Ok(report.exit_code())
}

fn emit_report(report: &Report, out: &OutputArgs) -> Result<(), CliError> {
    output::emit(&Payload::Report(report), out)
}

pub fn sweep(a: &SweepArgs) -> Result<Report, CliError> {
    let spec = a.to_spec().map_err(CliError::Usage)?;
    let start = Instant::now();
    let swept = run_sweep_with(&spec, SweepOptions { index_cap: a.cap })?;
    let mut notes = Vec::new();
    if swept.summary.outside_hypothesis > 0 {
        notes.push(format!(
            "{} cells lie outside the theorem hypothesis; their verdicts are informational",
            swept.summary.outside_hypothesis
        ));
    }
    Ok(Report::new(
        "sweep",
        Some(spec),
        notes,
        swept.records,
        start,
    ))
}

fn lemma_primes(a: &LemmaArgs) -> Result<Vec<u64>, CliError> {
    let (modulus, residue) = a.name.residue_class();
    match a.p {
        Some(p) => Ok(vec![p]),
        None if a.name == LemmaName::Kazandzidis => Ok(prime_stream(a.bound.min(13), 1, 0)?),
        None => Ok(prime_stream(a.bound, modulus, residue)?),
    }
}

fn n_range(a: &LemmaArgs, from: u64) -> Vec<u64> {
    match a.n {
        Some(n) => vec![n],
        None => (from..=a.n_max).collect(),
    }
}

fn bundles(items: Vec<CheckBundle>) -> Vec<Record> {
    items.iter().flat_map(CheckBundle::records).collect()
}

fn lemma_records(a: &LemmaArgs, p: u64) -> Result<Vec<Record>, CliError> {
    use LemmaName::*;
    let single = |check: &str, r: supercongruence::Result<_>| -> Result<Vec<Record>, CliError> {
        Ok(vec![Record::congruence(check, p, r?)])
    };
    let per_n = |f: fn(u64, u64) -> supercongruence::Result<CheckBundle>,
                 from|
     -> Result<Vec<Record>, CliError> {
        let items = n_range(a, from)
            .into_iter()
            .map(|n| f(n, p))
            .collect::<supercongruence::Result<Vec<_>>>()?;
        Ok(bundles(items))
    };
    let n_max = a.n.unwrap_or(a.n_max);
    match a.name {
        Lemma20 => single("lemma20", lemmas::lemma20_check(p)),
        Eq22 => Ok(lemmas::eq22_check(p)?.records()),
        Eq23 => Ok(lemmas::eq23_check(p)?.records()),
        Corollary24 => single("corollary24", lemmas::corollary24_check(p)),
        F => Ok(lemmas::f_independence_check(p, n_max)?.records()),
        Ab => per_n(lemmas::ab_check, 0),
        Lemma32 => Ok(lemmas::lemma32_chain_check(p)?.records()),
        SStep => per_n(lemmas::s_step_check, 0),
        G => Ok(lemmas::g_independence_check(p, n_max)?.records()),
        Lemma51 => single("lemma51", lemmas::lemma51_check(p)),
        Mn => Ok(lemmas::mn_check(p)?.records()),
        Harmonic => Ok(lemmas::harmonic_identities_check(p)?.records()),
        Pairing => {
            lemmas::pairing_identity_check(1, p)?;
            let indices: Vec<u64> = match a.i {
                Some(i) => vec![i],
                None => (1..=(p - 1) / 6).collect(),
            };
            indices
                .into_iter()
                .map(|i| {
                    Ok(
                        Record::congruence("pairing", p, lemmas::pairing_identity_check(i, p)?)
                            .with_index(i),
                    )
                })
                .collect()
        }
        Eq5051 => Ok(lemmas::eq5051_chain_check(p)?.records()),
        TStep => per_n(lemmas::t_step_check, 0),
        Kazandzidis => {
            let mut out = Vec::new();
            for x in 1..=6u64 {
                for y in 1..=x {
                    let rec = Record::congruence(
                        format!("kazandzidis/C({x},{y})"),
                        p,
                        kazandzidis_check(x, y, p)?,
                    );
                    out.push(rec);
                }
            }
            Ok(out)
        }
    }
}

pub fn lemma(a: &LemmaArgs) -> Result<Report, CliError> {
    let start = Instant::now();
    let primes = lemma_primes(a)?;
    let per_prime = primes
        .par_iter()
        .map(|&p| lemma_records(a, p))
        .collect::<Result<Vec<_>, _>>()?;
    let records: Vec<Record> = per_prime.into_iter().flatten().collect();
    let mut notes = vec![format!("primes: {primes:?}")];
    let outside = records.iter().filter(|r| !r.hypothesis_met).count();
    if outside > 0 {
        notes.push(format!(
            "{outside} links are evaluated where p divides n+1 and are informational only"
        ));
    }
    Ok(Report::new("lemma", None, notes, records, start))
}

fn transformation_records(check: &TransformationCheck) -> Vec<Record> {
    (0..=check.order_max)
        .map(|k| {
            Record::equality(
                format!("transform/{}", check.name),
                check.lhs[k] == check.rhs[k],
            )
            .with_n(k as u64)
        })
        .collect()
}

pub fn qseries(a: &QseriesArgs) -> Result<Report, CliError> {
    let start = Instant::now();
    if a.count > a.truncation {
        return Err(CliError::Usage(format!(
            "--count {} exceeds --truncation {}",
            a.count, a.truncation
        )));
    }
    let derived = ModularPair::ALL
        .par_iter()
        .map(|&pair| cross_derive(pair, a.count, a.truncation))
        .collect::<supercongruence::Result<Vec<_>>>()?;
    let mut notes = Vec::new();
    let mut records = Vec::new();
    for d in &derived {
        if let Some(note) = d.note {
            notes.push(note.to_string());
        }
        for (n, (got, want)) in d.recovered.iter().zip(&d.expected).enumerate() {
            records.push(
                Record::equality(format!("qseries/{}", d.sequence), got == want)
                    .with_sequence(d.sequence)
                    .with_n(n as u64),
            );
        }
    }
    records.extend(transformation_records(&kummer_transformation_check(
        a.transform_order,
    )?));
    records.extend(transformation_records(&cubic_transformation_check(
        a.transform_order,
    )?));
    Ok(Report::new("qseries", None, notes, records, start))
}

/// Default suite: both theorem sweeps, the classical cube sweeps, every
/// verifier and the q-series layer.
pub fn all() -> Result<Report, CliError> {
    let start = Instant::now();
    let mut records = Vec::new();
    let mut notes = Vec::new();
    let mut specs = vec![
        SweepSpec::theorem(SequenceId::S, 97, 20),
        SweepSpec::theorem(SequenceId::T, 97, 20),
    ];
    for id in [SequenceId::Apery, SequenceId::Domb] {
        specs.push(SweepSpec {
            sequence: id,
            r: 3,
            primes: PrimeSelection::Explicit {
                primes: vec![5, 7, 11, 13],
            },
            n_max: 8,
        });
    }
    for spec in &specs {
        records.extend(run_sweep_with(spec, SweepOptions::default())?.records);
    }
    let names = [
        LemmaName::Lemma20,
        LemmaName::Eq22,
        LemmaName::Eq23,
        LemmaName::Corollary24,
        LemmaName::F,
        LemmaName::Ab,
        LemmaName::Lemma32,
        LemmaName::SStep,
        LemmaName::G,
        LemmaName::Lemma51,
        LemmaName::Mn,
        LemmaName::Harmonic,
        LemmaName::Pairing,
        LemmaName::Eq5051,
        LemmaName::TStep,
        LemmaName::Kazandzidis,
    ];
    for name in names {
        let args = LemmaArgs {
            name,
            p: None,
            bound: 101,
            n: None,
            n_max: 10,
            i: None,
            output: OutputArgs {
                out: None,
                format: crate::args::Format::Json,
            },
        };
        let mut rep = lemma(&args)?;
        records.append(&mut rep.records);
    }
    let q = qseries(&QseriesArgs {
        count: 12,
        truncation: DEFAULT_TRUNCATION,
        transform_order: 24,
        dump: None,
        output: OutputArgs {
            out: None,
            format: crate::args::Format::Json,
        },
    })?;
    notes.extend(q.notes);
    records.extend(q.records);
    Ok(Report::new("all", None, notes, records, start))
}
