use std::io::{self, Write};

use serde::Serialize;

use crate::args::Format;

/// A row of tabular output. CSV prints reals with 17 significant digits; JSON
/// uses serde's shortest round-trip form.
pub trait Row: Serialize {
    const HEADER: &'static [&'static str];
    fn cells(&self) -> Vec<String>;
}

fn real(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Debug, Serialize)]
pub struct RuleRow {
    pub index: usize,
    pub node: f64,
    pub quad_weight: f64,
    pub bary_weight: f64,
}

impl Row for RuleRow {
    const HEADER: &'static [&'static str] = &["index", "node", "quad_weight", "bary_weight"];

    fn cells(&self) -> Vec<String> {
        vec![
            self.index.to_string(),
            real(self.node),
            real(self.quad_weight),
            real(self.bary_weight),
        ]
    }
}

#[derive(Debug, Serialize)]
pub struct PointRow {
    pub x: f64,
    pub value: f64,
}

impl Row for PointRow {
    const HEADER: &'static [&'static str] = &["x", "value"];

    fn cells(&self) -> Vec<String> {
        vec![real(self.x), real(self.value)]
    }
}

#[derive(Debug, Serialize)]
pub struct ErrorRow {
    pub n: usize,
    pub error: f64,
}

impl Row for ErrorRow {
    const HEADER: &'static [&'static str] = &["n", "error"];

    fn cells(&self) -> Vec<String> {
        vec![self.n.to_string(), real(self.error)]
    }
}

pub fn write_rows<R: Row, W: Write>(out: W, format: Format, rows: &[R]) -> io::Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(R::HEADER)?;
            for row in rows {
                w.write_record(row.cells())?;
            }
            w.flush()
        }
        Format::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, rows)?;
            writeln!(out)?;
            out.flush()
        }
    }
}
