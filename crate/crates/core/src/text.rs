//! Plain-text tableau format.
//!
//! One row per line, entries separated by spaces. An optional first line
//! `n=<bound>` sets the entry bound; without it the bound is the largest
//! entry present. A blank line ends the tableau.
//!
//! ```text
//! n=9
//! 1 1 3
//! 2 4
//! ```

use thiserror::Error;

use crate::tableau::{Tableau, TableauError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Invalid(#[from] TableauError),
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Parses the first tableau in `text`. Leading blank lines are skipped and
/// anything after the terminating blank line is ignored.
pub fn parse_tableau(text: &str) -> Result<Tableau, ParseError> {
    let lines: Vec<&str> = text.lines().collect();
    let mut cursor = 0;
    parse_block(&lines, &mut cursor)
}

/// Parses every blank-line-separated tableau in `text`.
pub fn parse_tableaux(text: &str) -> Result<Vec<Tableau>, ParseError> {
    let lines: Vec<&str> = text.lines().collect();
    let mut cursor = 0;
    let mut out = Vec::new();
    loop {
        while cursor < lines.len() && lines[cursor].trim().is_empty() {
            cursor += 1;
        }
        if cursor == lines.len() {
            return Ok(out);
        }
        out.push(parse_block(&lines, &mut cursor)?);
    }
}

fn parse_block(lines: &[&str], cursor: &mut usize) -> Result<Tableau, ParseError> {
    while *cursor < lines.len() && lines[*cursor].trim().is_empty() {
        *cursor += 1;
    }
    let mut bound = None;
    if let Some(line) = lines.get(*cursor) {
        if let Some(value) = line.trim_start().strip_prefix("n=") {
            let line_no = *cursor + 1;
            let column = line.len() - value.len() + 1;
            let n: u32 = value
                .trim_end()
                .parse()
                .map_err(|_| syntax(line_no, column, format!("invalid bound {value:?}")))?;
            if n == 0 {
                return Err(syntax(line_no, column, "bound must be positive"));
            }
            bound = Some(n);
            *cursor += 1;
        }
    }
    let mut rows = Vec::new();
    while let Some(line) = lines.get(*cursor) {
        if line.trim().is_empty() {
            break;
        }
        rows.push(parse_row(line, *cursor + 1)?);
        *cursor += 1;
    }
    let max = rows.iter().flatten().copied().max().unwrap_or(1);
    Ok(Tableau::from_rows(&rows, bound.unwrap_or(max))?)
}

fn parse_row(line: &str, line_no: usize) -> Result<Vec<u32>, ParseError> {
    let mut row = Vec::new();
    let mut rest = line;
    let mut offset = 0;
    loop {
        let trimmed = rest.trim_start_matches([' ', '\t']);
        offset += rest.len() - trimmed.len();
        if trimmed.is_empty() {
            return Ok(row);
        }
        let token_len = trimmed.find([' ', '\t']).unwrap_or(trimmed.len());
        let token = &trimmed[..token_len];
        let column = offset + 1;
        match token.parse::<u32>() {
            Ok(0) => return Err(syntax(line_no, column, "entries must be positive")),
            Ok(v) => row.push(v),
            Err(_) => return Err(syntax(line_no, column, format!("expected a positive integer, found {token:?}"))),
        }
        offset += token_len;
        rest = &trimmed[token_len..];
    }
}

/// Formats `t` as rows. The `n=` header is written only when the bound
/// differs from the largest entry, so `parse_tableau(format_tableau(t)) == t`.
pub fn format_tableau(t: &Tableau) -> String {
    let default_bound = t.max_entry().unwrap_or(1);
    let mut lines = Vec::new();
    if t.bound() != default_bound {
        lines.push(format!("n={}", t.bound()));
    }
    for row in t.rows() {
        let cells: Vec<String> = row.iter().map(u32::to_string).collect();
        lines.push(cells.join(" "));
    }
    lines.join("\n")
}
