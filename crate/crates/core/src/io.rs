//! Point-set files, run headers and CSV output.
//!
//! A point-set file starts with `rggpts 1 <n> <r> <metric>` followed by `n`
//! lines `<x> <y>`. Coordinates are written with 17 significant digits so
//! they read back bit-identically. Blank lines and lines starting with `#`
//! are ignored.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Metric, Point};
use crate::montecarlo::SweepRow;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq)]
pub struct PointFile {
    pub r: f64,
    pub metric: Metric,
    pub points: Vec<Point>,
}

pub fn write_points<W: Write>(mut w: W, points: &[Point], r: f64, metric: Metric) -> std::io::Result<()> {
    writeln!(w, "rggpts {FORMAT_VERSION} {} {r} {metric}", points.len())?;
    for p in points {
        writeln!(w, "{:.16e} {:.16e}", p.x(), p.y())?;
    }
    w.flush()
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn read_points<R: BufRead>(reader: R) -> Result<PointFile> {
    let mut lines = reader.lines().enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| {
        l.as_ref()
            .map_or(true, |s| !s.trim().is_empty() && !s.trim_start().starts_with('#'))
    });
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let header = header?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 5 || fields[0] != "rggpts" {
        return Err(parse_err(hl, "expected `rggpts 1 <n> <r> <metric>`"));
    }
    if fields[1] != FORMAT_VERSION.to_string() {
        return Err(parse_err(hl, format!("unsupported format version {}", fields[1])));
    }
    let n: usize = fields[2].parse().map_err(|_| parse_err(hl, "invalid point count"))?;
    let r: f64 = fields[3].parse().map_err(|_| parse_err(hl, "invalid radius"))?;
    let metric: Metric = fields[4].parse().map_err(|e: Error| parse_err(hl, e.to_string()))?;
    let mut points = Vec::with_capacity(n);
    for (line_no, line) in lines {
        let line = line?;
        if points.len() == n {
            return Err(parse_err(line_no, format!("more than {n} points")));
        }
        let mut it = line.split_whitespace();
        let mut coord = || -> Result<f64> {
            it.next()
                .ok_or_else(|| parse_err(line_no, "expected two coordinates"))?
                .parse()
                .map_err(|_| parse_err(line_no, "invalid coordinate"))
        };
        let (x, y) = (coord()?, coord()?);
        if it.next().is_some() {
            return Err(parse_err(line_no, "expected two coordinates"));
        }
        points.push(Point::new(x, y).map_err(|e| parse_err(line_no, e.to_string()))?);
    }
    if points.len() != n {
        return Err(parse_err(
            hl,
            format!("header declares {n} points, found {}", points.len()),
        ));
    }
    Ok(PointFile { r, metric, points })
}

pub fn save_points(path: &Path, points: &[Point], r: f64, metric: Metric) -> Result<()> {
    write_points(BufWriter::new(File::create(path)?), points, r, metric)?;
    Ok(())
}

pub fn load_points(path: &Path) -> Result<PointFile> {
    read_points(BufReader::new(File::open(path)?))
}

/// Provenance attached to every output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunRecord {
    pub command: String,
    pub args: Vec<String>,
    pub master_seed: u64,
    pub version: String,
}

impl RunRecord {
    pub fn new(command: &str, args: Vec<String>, master_seed: u64) -> Self {
        RunRecord {
            command: command.to_string(),
            args,
            master_seed,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

pub const CSV_HEADER: &str = "n,r,property,k,trials,successes,p_hat,ci_lo,ci_hi,unknown,seed";

/// Sweep rows as CSV, preceded by `#` lines carrying the run record.
pub fn write_sweep_csv<W: Write>(mut w: W, run: &RunRecord, rows: &[SweepRow]) -> std::io::Result<()> {
    writeln!(w, "# command: {}", run.command)?;
    writeln!(w, "# args: {}", run.args.join(" "))?;
    writeln!(w, "# seed: {}", run.master_seed)?;
    writeln!(w, "# version: {}", run.version)?;
    writeln!(w, "{CSV_HEADER}")?;
    for row in rows {
        writeln!(
            w,
            "{},{},{},{},{},{},{},{},{},{},{}",
            row.n,
            row.r,
            row.property.name(),
            row.property.k().map_or(String::new(), |k| k.to_string()),
            row.trials,
            row.successes,
            row.p_hat,
            row.ci_lo,
            row.ci_hi,
            row.unknown_count,
            row.master_seed
        )?;
    }
    w.flush()
}
