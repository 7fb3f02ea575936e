use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde::Serialize;
use supercongruence::qseries::write_series_csv;
use supercongruence::report::write_records_csv;
use supercongruence::TruncatedSeries;

use crate::args::{Format, OutputArgs};
use crate::run::{CliError, Report};

pub enum Payload<'a> {
    Report(&'a Report),
    Series(&'a str, &'a TruncatedSeries),
}

#[derive(Serialize)]
struct SeriesJson<'a> {
    name: &'a str,
    exponent_denominator: i64,
    series: &'a TruncatedSeries,
}

fn render(payload: &Payload<'_>, format: Format) -> Result<Vec<u8>, CliError> {
    let internal = |e: String| CliError::Internal(e);
    let mut buf = Vec::new();
    match (payload, format) {
        (Payload::Report(r), Format::Json) => {
            serde_json::to_writer_pretty(&mut buf, r).map_err(|e| internal(e.to_string()))?;
            buf.push(b'\n');
        }
        (Payload::Report(r), Format::Csv) => {
            write_records_csv(&r.records, &mut buf).map_err(|e| internal(e.to_string()))?
        }
        (Payload::Series(name, s), Format::Json) => {
            let body = SeriesJson {
                name,
                exponent_denominator: supercongruence::qseries::EXPONENT_DENOMINATOR,
                series: s,
            };
            serde_json::to_writer_pretty(&mut buf, &body).map_err(|e| internal(e.to_string()))?;
            buf.push(b'\n');
        }
        (Payload::Series(_, s), Format::Csv) => {
            write_series_csv(s, &mut buf).map_err(|e| internal(e.to_string()))?
        }
    }
    Ok(buf)
}

/// Writes through a sibling temp file and a rename, so a reader never sees
/// a partial report.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> io::Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(format!(".tmp{}", std::process::id()));
    let tmp = Path::new(&tmp);
    let result = fs::write(tmp, bytes).and_then(|_| fs::rename(tmp, path));
    if result.is_err() {
        let _ = fs::remove_file(tmp);
    }
    result
}

pub fn emit(payload: &Payload<'_>, out: &OutputArgs) -> Result<(), CliError> {
    let bytes = render(payload, out.format)?;
    match &out.out {
        Some(path) => write_atomic(path, &bytes)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => io::stdout()
            .lock()
            .write_all(&bytes)
            .map_err(|e| CliError::Io(format!("stdout: {e}"))),
    }
}
