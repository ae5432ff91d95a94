//! Rendering of tables and key-value reports in the three output formats.

use std::fmt::Write;

use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Aligned columns and `key: value` lines.
    Human,
    /// Tab-separated values with a header row.
    Tsv,
    /// `key=value` lines, one blank-line-terminated block per row.
    Records,
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    pub title: Option<String>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Table {
            title: None,
            columns: columns.to_vec(),
            rows: vec![],
        }
    }

    pub fn titled(mut self, title: impl Into<String>) -> Self {
        self.title = Some(title.into());
        self
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Human => {
                if let Some(t) = &self.title {
                    writeln!(out, "# {t}").unwrap();
                }
                let widths: Vec<usize> = (0..self.columns.len())
                    .map(|c| {
                        self.rows
                            .iter()
                            .map(|r| r[c].len())
                            .chain([self.columns[c].len()])
                            .max()
                            .unwrap()
                    })
                    .collect();
                let line = |cells: Vec<&str>| {
                    let padded: Vec<String> = cells
                        .iter()
                        .zip(&widths)
                        .map(|(s, w)| format!("{s:<w$}"))
                        .collect();
                    padded.join("  ").trim_end().to_string()
                };
                writeln!(out, "{}", line(self.columns.clone())).unwrap();
                for r in &self.rows {
                    writeln!(out, "{}", line(r.iter().map(String::as_str).collect())).unwrap();
                }
            }
            Format::Tsv => {
                if let Some(t) = &self.title {
                    writeln!(out, "# {t}").unwrap();
                }
                writeln!(out, "{}", self.columns.join("\t")).unwrap();
                for r in &self.rows {
                    writeln!(out, "{}", r.join("\t")).unwrap();
                }
            }
            Format::Records => {
                for r in &self.rows {
                    if let Some(t) = &self.title {
                        writeln!(out, "section={t}").unwrap();
                    }
                    for (k, v) in self.columns.iter().zip(r) {
                        writeln!(out, "{k}={v}").unwrap();
                    }
                    out.push('\n');
                }
            }
        }
        out
    }
}

/// Ordered `key -> value` pairs describing one object.
#[derive(Debug, Clone, Default)]
pub struct KeyValues(pub Vec<(&'static str, String)>);

impl KeyValues {
    pub fn add(&mut self, key: &'static str, value: impl ToString) {
        self.0.push((key, value.to_string()));
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        for (k, v) in &self.0 {
            match format {
                Format::Human => writeln!(out, "{k}: {v}").unwrap(),
                Format::Tsv => writeln!(out, "{k}\t{v}").unwrap(),
                Format::Records => writeln!(out, "{k}={v}").unwrap(),
            }
        }
        out
    }
}
