//! Tabular reports rendered as aligned text, JSON lines or CSV.

use std::fmt::Write;

use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    #[value(alias = "json-lines")]
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell {
    Text(String),
    List(Vec<String>),
}

impl Cell {
    fn joined(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::List(items) => items.join(" "),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Text(s) => Value::String(s.clone()),
            Cell::List(items) => Value::Array(items.iter().cloned().map(Value::String).collect()),
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

impl From<Vec<String>> for Cell {
    fn from(items: Vec<String>) -> Self {
        Cell::List(items)
    }
}

/// Rows sharing one set of columns. A `record` report has a single row and
/// prints as `key value` lines in table format.
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub record: bool,
}

impl Report {
    pub fn new(columns: &[&'static str]) -> Self {
        Report {
            columns: columns.to_vec(),
            ..Default::default()
        }
    }

    pub fn record(fields: Vec<(&'static str, Cell)>) -> Self {
        let (columns, row) = fields.into_iter().unzip();
        Report {
            columns,
            rows: vec![row],
            record: true,
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.table(),
            Format::Json => self.json_lines(),
            Format::Csv => self.csv(),
        }
    }

    fn table(&self) -> String {
        let mut out = String::new();
        if self.record {
            let width = self.columns.iter().map(|c| c.chars().count()).max().unwrap_or(0);
            for (name, cell) in self.columns.iter().zip(&self.rows[0]) {
                writeln!(out, "{name:<width$}  {}", cell.joined()).unwrap();
            }
            return out;
        }
        let cells: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(Cell::joined).collect()).collect();
        let widths: Vec<usize> = self
            .columns
            .iter()
            .enumerate()
            .map(|(i, c)| {
                cells
                    .iter()
                    .map(|r| r[i].chars().count())
                    .chain([c.chars().count()])
                    .max()
                    .unwrap()
            })
            .collect();
        let line = |fields: Vec<&str>| -> String {
            let padded: Vec<String> = fields
                .iter()
                .zip(&widths)
                .map(|(f, w)| format!("{f}{}", " ".repeat(w - f.chars().count())))
                .collect();
            padded.join("  ").trim_end().to_string()
        };
        writeln!(out, "{}", line(self.columns.clone())).unwrap();
        for row in &cells {
            writeln!(out, "{}", line(row.iter().map(String::as_str).collect())).unwrap();
        }
        out
    }

    fn json_lines(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            // serde_json's default map is ordered by key
            let obj: Map<String, Value> = self
                .columns
                .iter()
                .zip(row)
                .map(|(c, cell)| (c.to_string(), cell.json()))
                .collect();
            writeln!(out, "{}", Value::Object(obj)).unwrap();
        }
        out
    }

    fn csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(&self.columns).unwrap();
        for row in &self.rows {
            writer.write_record(row.iter().map(Cell::joined)).unwrap();
        }
        String::from_utf8(writer.into_inner().unwrap()).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new(&["point", "Q"]);
        r.push(vec!["(4,6,3,2,1)".into(), "1".into()]);
        r.push(vec!["(10,15,6,4,2)".into(), "6".into()]);
        r
    }

    #[test]
    fn json_keys_sorted() {
        let out = sample().render(Format::Json);
        assert_eq!(out.lines().next().unwrap(), r#"{"Q":"1","point":"(4,6,3,2,1)"}"#);
    }

    #[test]
    fn csv_quotes_points() {
        let out = sample().render(Format::Csv);
        assert_eq!(out.lines().nth(1).unwrap(), r#""(4,6,3,2,1)",1"#);
    }

    #[test]
    fn table_aligns() {
        let out = sample().render(Format::Table);
        let lines: Vec<_> = out.lines().collect();
        assert_eq!(lines[0], "point          Q");
        assert_eq!(lines[2], "(10,15,6,4,2)  6");
    }
}
