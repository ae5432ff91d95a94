//! Shared helpers for the line-oriented table formats.

use crate::error::{Error, Result};
use crate::group::CayleyGroup;

/// Non-blank, non-comment lines with 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_header(line: usize, header: &str, keyword: &str) -> Result<usize> {
    let mut parts = header.split_whitespace();
    if parts.next() != Some(keyword) {
        return Err(Error::Parse {
            line,
            message: format!("expected `{keyword} <n>`"),
        });
    }
    let n = parts
        .next()
        .and_then(|t| t.parse::<usize>().ok())
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::Parse {
            line,
            message: "expected a positive order".into(),
        })?;
    if parts.next().is_some() {
        return Err(Error::Parse {
            line,
            message: "trailing tokens after order".into(),
        });
    }
    Ok(n)
}

pub(crate) fn parse_rows<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    n: usize,
) -> Result<Vec<Vec<usize>>> {
    let mut rows = Vec::with_capacity(n);
    for r in 0..n {
        let (line, text) = lines.next().ok_or(Error::Parse {
            line: 0,
            message: format!("expected {n} table rows, found {r}"),
        })?;
        let row = text
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse {
                line,
                message: e.to_string(),
            })?;
        if row.len() != n {
            return Err(Error::Parse {
                line,
                message: format!("expected {n} entries, found {}", row.len()),
            });
        }
        rows.push(row);
    }
    Ok(rows)
}

pub(crate) fn push_rows(out: &mut String, g: &CayleyGroup) {
    for a in 0..g.order() {
        let row: Vec<String> = g.row(a).iter().map(|x| x.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
}
