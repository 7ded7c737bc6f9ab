use std::io::Write;

use anyhow::{Context, Result};
use serde::Serialize;

use crate::args::{Cli, Format};

pub const SCHEMA: &str = "1";
pub const CSV_VERSION: &str = "v1";

/// Rows for the CSV form of a report.
#[derive(Debug, Default)]
pub struct Table {
    /// Extra `# ` lines between the config line and the header.
    pub comments: Vec<String>,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Table { header: header.into_iter().map(Into::into).collect(), ..Table::default() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema: &'static str,
    config: &'a Cli,
    result: &'a T,
}

fn command_name(cli: &Cli) -> String {
    let v = serde_json::to_value(&cli.command).expect("config serializes");
    v["name"].as_str().unwrap_or("unknown").to_string()
}

fn render<T: Serialize>(cli: &Cli, result: &T, table: &Table) -> Result<Vec<u8>> {
    let mut buf = Vec::new();
    match cli.common.format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut buf, &Envelope { schema: SCHEMA, config: cli, result })?;
            buf.push(b'\n');
        }
        Format::Csv => {
            writeln!(buf, "# hyperbent {} report {CSV_VERSION}", command_name(cli))?;
            writeln!(buf, "# config {}", serde_json::to_string(cli)?)?;
            for c in &table.comments {
                writeln!(buf, "# {c}")?;
            }
            let mut w = csv::Writer::from_writer(&mut buf);
            w.write_record(&table.header)?;
            for row in &table.rows {
                w.write_record(row)?;
            }
            w.flush()?;
        }
    }
    Ok(buf)
}

/// Writes the report to `--out` or stdout.
pub fn emit<T: Serialize>(cli: &Cli, result: &T, table: &Table) -> Result<()> {
    let bytes = render(cli, result, table)?;
    match &cli.common.out {
        Some(path) => std::fs::write(path, bytes).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(&bytes)?;
            Ok(out.flush()?)
        }
    }
}

pub fn hex(x: u32) -> String {
    format!("{x:#x}")
}

pub fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}
