//! Artifact rendering: one computation, three views.
//!
//! Every subcommand produces a [`CommandOutput`] holding a JSON value, an
//! optional CSV block, and a one-screen text summary.  Rendering the same
//! output twice yields identical bytes: the JSON value is serialized through
//! `serde_json::Value`, whose object representation keeps keys sorted, and
//! CSV/text are built from already-ordered rows.

use std::fs;
use std::io::Write as _;
use std::path::Path;

use clap::ValueEnum;

/// Output format selector shared by every subcommand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// A CSV block: header row plus data rows, all stringified.
#[derive(Clone, Debug, Default)]
pub struct CsvBlock {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

/// The uniform result of running one subcommand.
pub struct CommandOutput {
    /// Canonical JSON artifact (object keys sorted by construction).
    pub json: serde_json::Value,
    /// Flattened per-row view; `None` when a CSV rendering makes no sense.
    pub csv: Option<CsvBlock>,
    /// Human-readable verdict summary.
    pub text: String,
    /// `false` when a mathematical verification failed.  The artifact is
    /// still written, but the process exits with code 2.
    pub math_ok: bool,
}

impl CommandOutput {
    pub fn render(&self, format: Format) -> Result<Vec<u8>, String> {
        match format {
            Format::Json => {
                let mut pretty = serde_json::to_string_pretty(&self.json)
                    .map_err(|e| format!("json rendering failed: {e}"))?;
                pretty.push('\n');
                Ok(pretty.into_bytes())
            }
            Format::Csv => {
                let block = self
                    .csv
                    .as_ref()
                    .ok_or_else(|| "this subcommand has no csv rendering".to_string())?;
                let mut writer = csv::Writer::from_writer(Vec::new());
                writer
                    .write_record(&block.header)
                    .map_err(|e| format!("csv rendering failed: {e}"))?;
                for row in &block.rows {
                    writer
                        .write_record(row)
                        .map_err(|e| format!("csv rendering failed: {e}"))?;
                }
                writer
                    .into_inner()
                    .map_err(|e| format!("csv rendering failed: {e}"))
            }
            Format::Text => {
                let mut text = self.text.clone();
                if !text.ends_with('\n') {
                    text.push('\n');
                }
                Ok(text.into_bytes())
            }
        }
    }

    /// Write the rendered artifact to `out` (or stdout when absent).
    pub fn emit(&self, format: Format, out: Option<&Path>) -> Result<(), String> {
        let bytes = self.render(format)?;
        match out {
            Some(path) => {
                if let Some(parent) = path.parent() {
                    if !parent.as_os_str().is_empty() {
                        fs::create_dir_all(parent)
                            .map_err(|e| format!("cannot create {}: {e}", parent.display()))?;
                    }
                }
                fs::write(path, &bytes).map_err(|e| format!("cannot write {}: {e}", path.display()))
            }
            None => {
                let stdout = std::io::stdout();
                let mut lock = stdout.lock();
                lock.write_all(&bytes)
                    .and_then(|()| lock.flush())
                    .map_err(|e| format!("cannot write to stdout: {e}"))
            }
        }
    }
}

/// Convert any serializable report into the canonical JSON value.
pub fn to_canonical_json<T: serde::Serialize>(value: &T) -> serde_json::Value {
    serde_json::to_value(value).expect("report serialization cannot fail")
}
