//! Minimal numeric CSV: optional `# key=value` metadata lines, a header row
//! starting with `trial`, then one row per trial with reals printed to 17
//! significant digits.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::{CliResult, Failure};

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub metadata: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new(columns: Vec<String>, rows: Vec<Vec<f64>>) -> Self {
        Self {
            metadata: Vec::new(),
            columns,
            rows,
        }
    }

    pub fn with_metadata(mut self, key: &str, value: impl ToString) -> Self {
        self.metadata.push((key.to_string(), value.to_string()));
        self
    }

    pub fn column_index(&self, name: &str) -> CliResult<usize> {
        self.columns.iter().position(|c| c == name).ok_or_else(|| {
            Failure::parameter(format!(
                "no column named '{name}' (have: {})",
                self.columns.join(", ")
            ))
        })
    }

    pub fn column(&self, name: &str) -> CliResult<Vec<f64>> {
        let i = self.column_index(name)?;
        Ok(self.rows.iter().map(|r| r[i]).collect())
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.metadata {
            let _ = writeln!(out, "# {k}={v}");
        }
        out.push_str("trial");
        for c in &self.columns {
            out.push(',');
            out.push_str(c);
        }
        out.push('\n');
        for (t, row) in self.rows.iter().enumerate() {
            let _ = write!(out, "{t}");
            for v in row {
                let _ = write!(out, ",{v:.16e}");
            }
            out.push('\n');
        }
        out
    }
}

/// Numbered names `prefix0, prefix1, ...` (or from `first`).
pub fn numbered(prefix: &str, first: usize, count: usize) -> Vec<String> {
    (first..first + count)
        .map(|i| format!("{prefix}{i}"))
        .collect()
}

/// Parses CSV text; errors name the 1-based line.
pub fn parse_table(text: &str, source: &str) -> CliResult<Table> {
    let mut metadata = Vec::new();
    let mut columns: Option<Vec<String>> = None;
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(meta) = line.strip_prefix('#') {
            if let Some((k, v)) = meta.trim().split_once('=') {
                metadata.push((k.trim().to_string(), v.trim().to_string()));
            }
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        match &columns {
            None => {
                if fields.first() != Some(&"trial") || fields.len() < 2 {
                    return Err(Failure::parameter(format!(
                        "{source}:{line_no}: expected a header row starting with 'trial'"
                    )));
                }
                columns = Some(fields[1..].iter().map(|s| s.to_string()).collect());
            }
            Some(cols) => {
                if fields.len() != cols.len() + 1 {
                    return Err(Failure::parameter(format!(
                        "{source}:{line_no}: expected {} fields, found {}",
                        cols.len() + 1,
                        fields.len()
                    )));
                }
                let row = fields[1..]
                    .iter()
                    .map(|f| {
                        f.parse::<f64>()
                            .ok()
                            .filter(|v| !v.is_nan())
                            .ok_or_else(|| {
                                Failure::parameter(format!(
                                    "{source}:{line_no}: cannot parse '{f}' as a number"
                                ))
                            })
                    })
                    .collect::<CliResult<Vec<f64>>>()?;
                rows.push(row);
            }
        }
    }
    let columns = columns.ok_or_else(|| Failure::parameter(format!("{source}: no header row")))?;
    Ok(Table {
        metadata,
        columns,
        rows,
    })
}

pub fn read_table(path: &Path) -> CliResult<Table> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::parameter(format!("cannot read {}: {e}", path.display())))?;
    parse_table(&text, &path.display().to_string())
}
