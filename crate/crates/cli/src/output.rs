use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::ValueEnum;
use farey_core::spectra::SpectrumRecord;
use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Report sink: stdout, or a file given by `--out`.
pub struct Output {
    path: Option<PathBuf>,
}

impl Output {
    pub fn new(path: Option<PathBuf>) -> Self {
        Self { path }
    }

    pub fn write_text(&self, text: &str) -> io::Result<()> {
        match &self.path {
            Some(path) => fs::write(path, text),
            None => io::stdout().lock().write_all(text.as_bytes()),
        }
    }

    pub fn write_json<T: Serialize + ?Sized>(&self, value: &T) -> io::Result<()> {
        let mut text = serde_json::to_string_pretty(value)?;
        text.push('\n');
        self.write_text(&text)
    }

    pub fn write_csv<T: Serialize>(&self, rows: &[T]) -> io::Result<()> {
        let mut writer = csv::Writer::from_writer(Vec::new());
        for row in rows {
            writer.serialize(row).map_err(io::Error::other)?;
        }
        let bytes = writer.into_inner().map_err(|e| io::Error::other(e.to_string()))?;
        self.write_text(&String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn write_records(&self, records: &[SpectrumRecord], format: Format) -> io::Result<()> {
        match format {
            Format::Json => self.write_json(records),
            Format::Csv => self.write_csv(records),
        }
    }
}
