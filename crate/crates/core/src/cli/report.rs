use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::congruences::VerificationReport;
use crate::series::SeriesReport;

/// One emitted check. `pass` is a bool and `micros` a number; every other
/// field is a string so that big values survive any consumer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub kind: String,
    pub case: String,
    pub param: String,
    pub lhs: String,
    pub rhs: String,
    pub modulus_or_tolerance: String,
    pub pass: bool,
    pub micros: u64,
}

impl Record {
    pub fn congruence(r: &VerificationReport) -> Self {
        Record {
            kind: "congruence".into(),
            case: r.case.into(),
            param: r.param(),
            lhs: r.lhs_residue().to_string(),
            rhs: r.rhs_residue().to_string(),
            modulus_or_tolerance: r.modulus().to_string(),
            pass: r.pass,
            micros: r.micros,
        }
    }

    pub fn series(r: &SeriesReport) -> Self {
        let err = r.tail_upper.abs().to_f64().max(r.abs_gap);
        Record {
            kind: "series".into(),
            case: r.id.into(),
            param: format!("N={},bits={}", r.terms, r.bits),
            lhs: r.partial.add(&r.tail).to_certified_string(err),
            rhs: r.closed.to_sci(30),
            modulus_or_tolerance: format!("{:e}", r.tolerance),
            pass: r.pass,
            micros: r.micros,
        }
    }

    pub fn failure(kind: &str, case: &str, param: &str, message: &str) -> Self {
        Record {
            kind: kind.into(),
            case: case.into(),
            param: param.into(),
            lhs: message.into(),
            rhs: String::new(),
            modulus_or_tolerance: String::new(),
            pass: false,
            micros: 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Human,
    JsonLines,
    Csv,
}

/// Streams records in one format.
pub struct Emitter<W: Write> {
    format: Format,
    omit_timing: bool,
    out: W,
    csv_header_done: bool,
}

impl<W: Write> Emitter<W> {
    pub fn new(format: Format, omit_timing: bool, out: W) -> Self {
        Emitter { format, omit_timing, out, csv_header_done: false }
    }

    pub fn into_inner(self) -> W {
        self.out
    }

    pub fn emit(&mut self, record: &Record) -> io::Result<()> {
        let mut r = record.clone();
        if self.omit_timing {
            r.micros = 0;
        }
        match self.format {
            Format::Human => {
                let verdict = if r.pass { "PASS" } else { "FAIL" };
                let rel = match r.kind.as_str() {
                    "congruence" => format!("{} == {} (mod {})", r.lhs, r.rhs, r.modulus_or_tolerance),
                    "identity" => format!("{} = {}", r.lhs, r.rhs),
                    "series" => format!("{} vs {} (rel tol {})", r.lhs, r.rhs, r.modulus_or_tolerance),
                    _ => format!("{} {}", r.lhs, r.rhs),
                };
                writeln!(self.out, "{verdict} {:<10} {:<16} {:<14} {rel} [{} us]", r.kind, r.case, r.param, r.micros)
            }
            Format::JsonLines => {
                serde_json::to_writer(&mut self.out, &r)?;
                writeln!(self.out)
            }
            Format::Csv => {
                let mut w = csv::WriterBuilder::new().has_headers(!self.csv_header_done).from_writer(Vec::new());
                w.serialize(&r).map_err(io::Error::other)?;
                self.csv_header_done = true;
                let bytes = w.into_inner().map_err(|e| io::Error::other(e.to_string()))?;
                self.out.write_all(&bytes)
            }
        }
    }

    pub fn note(&mut self, text: &str) -> io::Result<()> {
        if self.format == Format::Human {
            writeln!(self.out, "{text}")?;
        }
        Ok(())
    }

    pub fn flush(&mut self) -> io::Result<()> {
        self.out.flush()
    }
}
