//! Gram matrix files: JSON (array of arrays, entries `"p/q"` strings or
//! integers) or plain text (one row per line, whitespace separated).

use std::path::Path;

use hodgetate_core::matrix::Matrix;
use hodgetate_core::quad::QuadSpace;
use hodgetate_core::scalar::Scalar;

#[derive(Debug, thiserror::Error)]
pub enum GramError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("gram parse error: {0}")]
    Parse(String),
}

pub fn parse_gram_file(path: &Path) -> Result<QuadSpace, GramError> {
    let text = std::fs::read_to_string(path).map_err(|source| GramError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_gram_str(&text)
}

pub fn parse_gram_str(text: &str) -> Result<QuadSpace, GramError> {
    let trimmed = text.trim_start();
    let rows = if trimmed.starts_with('[') {
        parse_json_rows(text)?
    } else {
        parse_text_rows(text)?
    };
    rows_to_space(rows)
}

fn rows_to_space(rows: Vec<Vec<Scalar>>) -> Result<QuadSpace, GramError> {
    if rows.is_empty() {
        return Err(GramError::Parse("empty matrix".into()));
    }
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(GramError::Parse(format!(
            "matrix must be square, got {n} rows of lengths {:?}",
            rows.iter().map(Vec::len).collect::<Vec<_>>()
        )));
    }
    let m = Matrix::from_rows(rows);
    QuadSpace::new(m).map_err(|e| GramError::Parse(e.to_string()))
}

fn parse_json_rows(text: &str) -> Result<Vec<Vec<Scalar>>, GramError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| GramError::Parse(e.to_string()))?;
    let arr = value
        .as_array()
        .ok_or_else(|| GramError::Parse("expected a JSON array of rows".into()))?;
    arr.iter()
        .map(|row| {
            let cells = row
                .as_array()
                .ok_or_else(|| GramError::Parse("expected a JSON array row".into()))?;
            cells
                .iter()
                .map(|cell| {
                    crate::report::scalar_from_json(cell).ok_or_else(|| {
                        GramError::Parse(format!("bad rational entry: {cell}"))
                    })
                })
                .collect()
        })
        .collect()
}

fn parse_text_rows(text: &str) -> Result<Vec<Vec<Scalar>>, GramError> {
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row: Result<Vec<Scalar>, _> = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<Scalar>().map_err(|e| {
                    GramError::Parse(format!("line {}: token `{tok}`: {e}", lineno + 1))
                })
            })
            .collect();
        rows.push(row?);
    }
    if rows.is_empty() {
        return Err(GramError::Parse("no rows found".into()));
    }
    Ok(rows)
}
