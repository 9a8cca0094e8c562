//! File formats.
//!
//! * Matrices: header-free, row-major CSV.
//! * Sampled profiles: CSV with header `t,value`.
//! * Point lists: CSV, every field one point.
//! * Measures, descriptors and samples: JSON.
//!
//! Floats written to CSV carry 17 significant digits so that reading them
//! back reproduces the same bits.

use std::fs::File;
use std::io::{BufReader, Read, Write};
use std::path::Path;

use nalgebra::DMatrix;
use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::error::{Error, Result};

/// 17 significant digits.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn parse_f64(field: &str) -> Result<f64> {
    field
        .trim()
        .parse::<f64>()
        .map_err(|_| Error::InvalidInput(format!("cannot parse `{field}` as a number")))
}

fn headerless(reader: impl Read) -> csv::Reader<impl Read> {
    csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(reader)
}

pub fn read_matrix(reader: impl Read) -> Result<Vec<Vec<f64>>> {
    let mut rows = Vec::new();
    for record in headerless(reader).records() {
        let record = record?;
        if record.iter().all(|f| f.is_empty()) {
            continue;
        }
        rows.push(record.iter().map(parse_f64).collect::<Result<Vec<_>>>()?);
    }
    Ok(rows)
}

pub fn read_matrix_file(path: &Path) -> Result<Vec<Vec<f64>>> {
    read_matrix(BufReader::new(File::open(path)?))
}

pub fn write_matrix(mut w: impl Write, m: &DMatrix<f64>) -> Result<()> {
    for i in 0..m.nrows() {
        let row: Vec<String> = m.row(i).iter().map(|&v| fmt_f64(v)).collect();
        writeln!(w, "{}", row.join(","))?;
    }
    Ok(())
}

pub fn read_points(reader: impl Read) -> Result<Vec<f64>> {
    Ok(read_matrix(reader)?.into_iter().flatten().collect())
}

pub fn read_points_file(path: &Path) -> Result<Vec<f64>> {
    read_points(BufReader::new(File::open(path)?))
}

/// Reads a `t,value` CSV.
pub fn read_profile(reader: impl Read) -> Result<(Vec<f64>, Vec<f64>)> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let headers = rdr.headers()?.clone();
    let col = |name: &str| {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Error::InvalidInput(format!("profile CSV lacks a `{name}` column")))
    };
    let (ti, vi) = (col("t")?, col("value")?);
    let (mut ts, mut vs) = (Vec::new(), Vec::new());
    for record in rdr.records() {
        let record = record?;
        ts.push(parse_f64(&record[ti])?);
        vs.push(parse_f64(&record[vi])?);
    }
    Ok((ts, vs))
}

pub fn read_profile_file(path: &Path) -> Result<(Vec<f64>, Vec<f64>)> {
    read_profile(BufReader::new(File::open(path)?))
}

pub fn write_profile(mut w: impl Write, ts: &[f64], values: &[f64]) -> Result<()> {
    writeln!(w, "t,value")?;
    for (t, v) in ts.iter().zip(values) {
        writeln!(w, "{},{}", fmt_f64(*t), fmt_f64(*v))?;
    }
    Ok(())
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    Ok(serde_json::from_reader(BufReader::new(File::open(path)?))?)
}

pub fn write_json<T: Serialize>(mut w: impl Write, value: &T) -> Result<()> {
    serde_json::to_writer(&mut w, value)?;
    writeln!(w)?;
    Ok(())
}
