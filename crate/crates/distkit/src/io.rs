//! Text formats for point sets and weights.
//!
//! Point-set files:
//!
//! ```text
//! 2 5          <- dimension, then point count
//! 0.0 0.0      <- one point per line
//! ...
//! # tol 1e-8   <- optional trailing tolerance directive
//! ```
//!
//! Exact Gram files, for exact-mode analysis:
//!
//! ```text
//! gram 5 2     <- header, point count, ambient dimension
//! 1, -1/4 + 1/4*sqrt(5), ...    <- comma-separated exact entries
//! ```
//!
//! Weight files carry one exact-or-decimal weight per line.

use std::str::FromStr;

use crate::error::Error;
use crate::exact::QExt;
use crate::geometry::PointSet;

/// A parsed point-set file: float coordinates or an exact Gram matrix.
#[derive(Clone, Debug)]
pub enum PointInput {
    Coords(PointSet),
    Gram { gram: Vec<Vec<QExt>>, dim: usize },
}

pub fn parse_point_file(text: &str, default_tol: f64) -> Result<PointInput, Error> {
    let mut tol = default_tol;
    let mut lines = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            let rest = rest.trim();
            if let Some(v) = rest.strip_prefix("tol") {
                tol = v.trim().parse::<f64>().map_err(|_| {
                    Error::Parse(format!("line {}: bad tol directive '{line}'", lineno + 1))
                })?;
            }
            continue;
        }
        lines.push((lineno + 1, line));
    }
    let Some(&(hline, header)) = lines.first() else {
        return Err(Error::Parse("empty input".into()));
    };
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.first() == Some(&"gram") {
        if fields.len() != 3 {
            return Err(Error::Parse(format!(
                "line {hline}: gram header needs 'gram <n> <dim>'"
            )));
        }
        let n: usize = fields[1]
            .parse()
            .map_err(|_| Error::Parse(format!("line {hline}: bad point count")))?;
        let dim: usize = fields[2]
            .parse()
            .map_err(|_| Error::Parse(format!("line {hline}: bad dimension")))?;
        if lines.len() != n + 1 {
            return Err(Error::Parse(format!(
                "expected {n} gram rows, found {}",
                lines.len() - 1
            )));
        }
        let mut gram = Vec::with_capacity(n);
        for &(lineno, row) in &lines[1..] {
            let entries: Result<Vec<QExt>, _> = row
                .split(',')
                .map(|e| {
                    QExt::from_str(e.trim()).map_err(|err| {
                        Error::Parse(format!("line {lineno}: entry '{}': {err}", e.trim()))
                    })
                })
                .collect();
            let entries = entries?;
            if entries.len() != n {
                return Err(Error::Parse(format!(
                    "line {lineno}: expected {n} entries, found {}",
                    entries.len()
                )));
            }
            gram.push(entries);
        }
        for i in 0..n {
            for j in 0..n {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::Parse(format!("gram not symmetric at ({i},{j})")));
                }
            }
            if gram[i][i] != QExt::from_int(1) {
                return Err(Error::Parse(format!(
                    "gram diagonal at {i} must be 1 (unit vectors)"
                )));
            }
        }
        return Ok(PointInput::Gram { gram, dim });
    }
    if fields.len() != 2 {
        return Err(Error::Parse(format!(
            "line {hline}: header must be '<dim> <n>' or 'gram <n> <dim>'"
        )));
    }
    let dim: usize = fields[0]
        .parse()
        .map_err(|_| Error::Parse(format!("line {hline}: bad dimension")))?;
    let n: usize = fields[1]
        .parse()
        .map_err(|_| Error::Parse(format!("line {hline}: bad point count")))?;
    if lines.len() != n + 1 {
        return Err(Error::Parse(format!(
            "expected {n} coordinate rows, found {}",
            lines.len() - 1
        )));
    }
    let mut points = Vec::with_capacity(n);
    for &(lineno, row) in &lines[1..] {
        let coords: Result<Vec<f64>, _> = row
            .split_whitespace()
            .map(|c| {
                c.parse::<f64>()
                    .map_err(|_| Error::Parse(format!("line {lineno}: bad coordinate '{c}'")))
            })
            .collect();
        let coords = coords?;
        if coords.len() != dim {
            return Err(Error::Parse(format!(
                "line {lineno}: expected {dim} coordinates, found {}",
                coords.len()
            )));
        }
        points.push(coords);
    }
    Ok(PointInput::Coords(PointSet::new(dim, points, tol)?))
}

pub fn parse_weights(text: &str) -> Result<(Vec<f64>, Option<Vec<QExt>>), Error> {
    let mut floats = Vec::new();
    let mut exacts: Option<Vec<QExt>> = Some(Vec::new());
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match QExt::from_str(line) {
            Ok(q) => {
                floats.push(q.to_f64());
                if let Some(v) = exacts.as_mut() {
                    v.push(q);
                }
            }
            Err(_) => {
                let f: f64 = line.parse().map_err(|_| {
                    Error::Parse(format!("line {}: bad weight '{line}'", lineno + 1))
                })?;
                floats.push(f);
                exacts = None;
            }
        }
    }
    if floats.is_empty() {
        return Err(Error::Parse("no weights in file".into()));
    }
    Ok((floats, exacts))
}

/// Renders a point set back into the coordinate file format.
pub fn emit_point_file(x: &PointSet) -> String {
    let mut out = format!("{} {}\n", x.dim(), x.len());
    for p in x.points() {
        let row: Vec<String> = p.iter().map(|c| format!("{c:?}")).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
