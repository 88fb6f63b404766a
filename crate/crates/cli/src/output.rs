//! CSV and JSON rendering of flat records.

use serde_json::{Map, Number, Value};

#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Num(f64),
    Text(String),
}

impl From<f64> for Field {
    fn from(v: f64) -> Self {
        Field::Num(v)
    }
}

impl From<&str> for Field {
    fn from(v: &str) -> Self {
        Field::Text(v.to_string())
    }
}

impl From<String> for Field {
    fn from(v: String) -> Self {
        Field::Text(v)
    }
}

/// Ordered list of named fields; every record of one stream has the same keys.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Record(pub Vec<(&'static str, Field)>);

impl Record {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &'static str, value: impl Into<Field>) -> Self {
        self.0.push((key, value.into()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Field> {
        self.0.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }

    pub fn num(&self, key: &str) -> Option<f64> {
        match self.get(key)? {
            Field::Num(v) => Some(*v),
            Field::Text(_) => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Scientific notation with 12 significant digits.
pub fn csv_number(v: f64) -> String {
    format!("{v:.11e}")
}

/// JSON numbers beyond 10^±300 become decimal strings; many parsers map them
/// to infinity or zero otherwise.
fn json_number(v: f64) -> Value {
    let huge_or_tiny = v != 0.0 && v.abs().log10().abs() > 300.0;
    match Number::from_f64(v) {
        Some(n) if !huge_or_tiny => Value::Number(n),
        _ => Value::String(format!("{v:e}")),
    }
}

pub fn to_csv(records: &[Record]) -> String {
    let mut out = String::new();
    let Some(first) = records.first() else {
        return out;
    };
    let header: Vec<&str> = first.0.iter().map(|(k, _)| *k).collect();
    out.push_str(&header.join(","));
    out.push('\n');
    for record in records {
        let row: Vec<String> = record
            .0
            .iter()
            .map(|(_, v)| match v {
                Field::Num(x) => csv_number(*x),
                Field::Text(s) => s.clone(),
            })
            .collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn to_json(records: &[Record]) -> String {
    let array: Vec<Value> = records
        .iter()
        .map(|r| {
            let mut map = Map::new();
            for (k, v) in &r.0 {
                let value = match v {
                    Field::Num(x) => json_number(*x),
                    Field::Text(s) => Value::String(s.clone()),
                };
                map.insert((*k).to_string(), value);
            }
            Value::Object(map)
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&Value::Array(array)).expect("plain values");
    s.push('\n');
    s
}

pub fn render(records: &[Record], format: Format) -> String {
    match format {
        Format::Csv => to_csv(records),
        Format::Json => to_json(records),
    }
}
