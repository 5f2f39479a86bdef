use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use super::ReportFormat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Cell {
    Text(String),
    Count(usize),
    /// Empty in Markdown and CSV, `null` in JSON.
    Missing,
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Count(n) => n.to_string(),
            Cell::Missing => String::new(),
        }
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Cell::Text(s) => serializer.serialize_str(s),
            Cell::Count(n) => serializer.serialize_u64(*n as u64),
            Cell::Missing => serializer.serialize_none(),
        }
    }
}

/// A rendered table before formatting. `columns` pairs display headers
/// with JSON keys.
#[derive(Debug, Clone)]
pub(crate) struct Table {
    pub columns: &'static [(&'static str, &'static str)],
    pub rows: Vec<Vec<Cell>>,
    /// Markdown-only lines printed below the table.
    pub footnotes: Vec<String>,
}

struct JsonRow<'a> {
    columns: &'static [(&'static str, &'static str)],
    cells: &'a [Cell],
}

impl Serialize for JsonRow<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.columns.len()))?;
        for ((_, key), cell) in self.columns.iter().zip(self.cells) {
            map.serialize_entry(key, cell)?;
        }
        map.end()
    }
}

impl Serialize for Table {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.rows.len()))?;
        for row in &self.rows {
            seq.serialize_element(&JsonRow {
                columns: self.columns,
                cells: row,
            })?;
        }
        seq.end()
    }
}

impl Table {
    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Markdown => self.markdown(),
            ReportFormat::Csv => self.csv(),
            ReportFormat::Json => self.json(),
        }
    }

    fn markdown(&self) -> String {
        let mut out = String::new();
        let header: Vec<&str> = self.columns.iter().map(|(h, _)| *h).collect();
        out.push_str(&format!("| {} |\n", header.join(" | ")));
        out.push_str(&format!(
            "|{}\n",
            self.columns.iter().map(|_| "---|").collect::<String>()
        ));
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|c| escape_markdown(&c.text())).collect();
            out.push_str(&format!("| {} |\n", cells.join(" | ")));
        }
        if !self.footnotes.is_empty() {
            out.push('\n');
            for note in &self.footnotes {
                out.push_str(note);
                out.push('\n');
            }
        }
        out
    }

    fn csv(&self) -> String {
        let mut writer = csv::WriterBuilder::new()
            .quote_style(csv::QuoteStyle::Always)
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        let header: Vec<&str> = self.columns.iter().map(|(h, _)| *h).collect();
        // Writing into a Vec cannot fail.
        writer.write_record(&header).expect("in-memory csv write");
        for row in &self.rows {
            writer
                .write_record(row.iter().map(Cell::text))
                .expect("in-memory csv write");
        }
        let bytes = writer.into_inner().expect("in-memory csv flush");
        String::from_utf8(bytes).expect("csv of UTF-8 cells is UTF-8")
    }

    fn json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("table serializes");
        s.push('\n');
        s
    }
}

fn escape_markdown(text: &str) -> String {
    text.replace('\\', "\\\\")
        .replace('|', "\\|")
        .replace('*', "\\*")
        .replace(['\n', '\r'], " ")
}
