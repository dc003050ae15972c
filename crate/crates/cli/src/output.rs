use std::io::Write;

use clap::ValueEnum;
use serde_json::{json, Map, Value};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Records of one run: a fixed column list, one row per result, and the
/// human-readable line for each row.
#[derive(Debug, Default)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
    pub lines: Vec<String>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Self { columns: columns.to_vec(), ..Self::default() }
    }

    pub fn push(&mut self, row: Vec<Value>, line: String) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
        self.lines.push(line);
    }

    fn records(&self) -> Vec<Value> {
        self.rows
            .iter()
            .map(|row| {
                let object: Map<String, Value> =
                    self.columns.iter().map(|c| c.to_string()).zip(row.iter().cloned()).collect();
                Value::Object(object)
            })
            .collect()
    }
}

/// Top-level fields shared by every report.
pub struct Envelope<'a> {
    pub key: &'a str,
    pub name: &'a str,
    pub bound: Option<usize>,
    pub status: &'a str,
    pub list: &'a str,
    pub words_checked: u64,
    pub elapsed_ms: u64,
}

fn csv_cell(value: &Value) -> String {
    match value {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(csv_cell).collect::<Vec<_>>().join(";"),
        other => other.to_string(),
    }
}

pub fn to_json(envelope: &Envelope<'_>, table: &Table, extra: Map<String, Value>) -> Value {
    let mut object = Map::new();
    object.insert(envelope.key.into(), json!(envelope.name));
    object.insert("bound".into(), json!(envelope.bound));
    object.insert("status".into(), json!(envelope.status));
    object.insert(envelope.list.into(), Value::Array(table.records()));
    object
        .insert("stats".into(), json!({ "words_checked": envelope.words_checked, "elapsed_ms": envelope.elapsed_ms }));
    object.extend(extra);
    Value::Object(object)
}

pub fn write_json(out: &mut impl Write, value: &Value) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(|e| CliError::Output(e.to_string()))?;
    writeln!(out).map_err(|e| CliError::Output(e.to_string()))
}

pub fn write_csv(out: &mut impl Write, table: &Table) -> Result<(), CliError> {
    let mut writer = csv::Writer::from_writer(out);
    let fail = |e: csv::Error| CliError::Output(e.to_string());
    writer.write_record(&table.columns).map_err(fail)?;
    for row in &table.rows {
        writer.write_record(row.iter().map(csv_cell)).map_err(fail)?;
    }
    writer.flush().map_err(|e| CliError::Output(e.to_string()))
}

pub fn write_text(out: &mut impl Write, table: &Table) -> Result<(), CliError> {
    for line in &table.lines {
        writeln!(out, "{line}").map_err(|e| CliError::Output(e.to_string()))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_cells() {
        assert_eq!(csv_cell(&Value::Null), "");
        assert_eq!(csv_cell(&json!(["ab", "bc"])), "ab;bc");
        assert_eq!(csv_cell(&json!(true)), "true");
        assert_eq!(csv_cell(&json!(3)), "3");
    }

    #[test]
    fn json_keys_are_sorted() {
        let mut table = Table::new(&["word", "bwt"]);
        table.push(vec![json!("abc"), json!("cab")], "cab".into());
        let envelope = Envelope {
            key: "subcommand",
            name: "bwt",
            bound: None,
            status: "ok",
            list: "results",
            words_checked: 1,
            elapsed_ms: 0,
        };
        let text = serde_json::to_string(&to_json(&envelope, &table, Map::new())).unwrap();
        assert!(text.find("\"bound\"").unwrap() < text.find("\"results\"").unwrap());
        assert!(text.find("\"bwt\":\"cab\"").unwrap() < text.find("\"word\"").unwrap());
    }
}
