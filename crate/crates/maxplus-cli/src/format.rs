//! Matrix and schedule file formats.
//!
//! Matrix files: `#` comment lines and blank lines are skipped anywhere; the
//! first data line is the dimension n; the next n data lines hold n
//! whitespace-separated entry tokens each. Tokens are `eps`
//! (case-insensitive), integers, fractions `p/q` with positive denominator,
//! or decimal literals (converted exactly). A matrix is named after its file
//! stem.
//!
//! Schedule files: data lines `phase <matrix-name> <length>` with positive
//! integer lengths, at least one phase.
//!
//! All diagnostics carry `path:line:col`.

use std::fmt;
use std::path::Path;

use maxplus::{Matrix, Phase, Scalar, Schedule};

/// Parse failure with source position (1-based line and column).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub source: String,
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}: {}", self.source, self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

/// Data lines (1-based number) with comments and blanks skipped.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line))
        .filter(|(_, line)| {
            let trimmed = line.trim_start();
            !trimmed.is_empty() && !trimmed.starts_with('#')
        })
}

/// Tokens of a line with their 1-based starting columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (idx, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..idx]));
            }
        } else if start.is_none() {
            start = Some(idx);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn err(source: &str, line: usize, col: usize, msg: impl Into<String>) -> ParseError {
    ParseError {
        source: source.to_string(),
        line,
        col,
        msg: msg.into(),
    }
}

/// Parses matrix-file text. `source` is used in diagnostics only.
pub fn parse_matrix_text(source: &str, text: &str) -> Result<Matrix, ParseError> {
    let mut lines = data_lines(text);

    let (dim_line, dim_text) = lines
        .next()
        .ok_or_else(|| err(source, 1, 1, "missing dimension line"))?;
    let dim_tokens = tokens(dim_text);
    if dim_tokens.len() != 1 {
        let col = dim_tokens.get(1).map_or(1, |t| t.0);
        return Err(err(source, dim_line, col, "dimension line must hold a single integer"));
    }
    let n: usize = dim_tokens[0]
        .1
        .parse()
        .map_err(|_| err(source, dim_line, dim_tokens[0].0, "malformed dimension"))?;
    if n == 0 {
        return Err(err(source, dim_line, dim_tokens[0].0, "dimension must be >= 1"));
    }

    let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(n);
    let mut last_line = dim_line;
    for (line_no, line) in lines {
        if rows.len() == n {
            return Err(err(source, line_no, 1, format!("expected exactly {n} rows, found extra data")));
        }
        let toks = tokens(line);
        if toks.len() != n {
            let col = toks.get(n).map_or_else(|| line.len() + 1, |t| t.0);
            return Err(err(
                source,
                line_no,
                col,
                format!("row {} must hold {n} entries, found {}", rows.len() + 1, toks.len()),
            ));
        }
        let mut row = Vec::with_capacity(n);
        for (col, tok) in toks {
            let scalar = tok
                .parse::<Scalar>()
                .map_err(|e| err(source, line_no, col, e))?;
            row.push(scalar);
        }
        rows.push(row);
        last_line = line_no;
    }
    if rows.len() != n {
        return Err(err(
            source,
            last_line,
            1,
            format!("expected {n} rows, found {}", rows.len()),
        ));
    }
    Ok(Matrix::from_rows(rows))
}

/// Canonical matrix-file text: dimension line, then one row per line.
pub fn print_matrix_file(m: &Matrix) -> String {
    format!("{}\n{}\n", m.dim(), m)
}

/// Parses schedule-file text.
pub fn parse_schedule_text(source: &str, text: &str) -> Result<Schedule, ParseError> {
    let mut phases = Vec::new();
    let mut saw_data = false;
    for (line_no, line) in data_lines(text) {
        saw_data = true;
        let toks = tokens(line);
        if toks[0].1 != "phase" {
            return Err(err(source, line_no, toks[0].0, "expected `phase <matrix-name> <length>`"));
        }
        if toks.len() != 3 {
            let col = toks.get(3).map_or_else(|| line.len() + 1, |t| t.0);
            return Err(err(source, line_no, col, "expected `phase <matrix-name> <length>`"));
        }
        let length: usize = toks[2]
            .1
            .parse()
            .map_err(|_| err(source, line_no, toks[2].0, "malformed phase length"))?;
        if length == 0 {
            return Err(err(source, line_no, toks[2].0, "phase length must be >= 1"));
        }
        phases.push(Phase {
            matrix: toks[1].1.to_string(),
            length,
        });
    }
    if !saw_data {
        return Err(err(source, 1, 1, "schedule has no phases"));
    }
    Schedule::new(phases).map_err(|e| err(source, 1, 1, e.to_string()))
}

/// Canonical schedule-file text.
pub fn print_schedule_file(schedule: &Schedule) -> String {
    let mut out = String::new();
    for phase in schedule.phases() {
        out.push_str(&format!("phase {} {}\n", phase.matrix, phase.length));
    }
    out
}

/// Matrix name for CLI binding: the file stem.
pub fn matrix_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.to_string_lossy().into_owned())
}
