//! Number formatting and key-value emitters shared by the subcommands.

use std::io::Write;

use serde::ser::{Serialize, SerializeMap, Serializer};
use serde_json::value::RawValue;

use crate::args::OutputFormat;
use crate::error::CliError;

/// Scientific notation with 17 significant digits; round-trips through f64.
pub fn sci(v: f64) -> String {
    format!("{v:.16e}")
}

/// A JSON number literal in the same notation as [`sci`]; non-finite values
/// become `null`.
pub fn raw_number(v: f64) -> Option<Box<RawValue>> {
    if v.is_finite() {
        RawValue::from_string(sci(v)).ok()
    } else {
        None
    }
}

#[derive(Debug, Clone)]
pub enum Value {
    Num(f64),
    Int(u64),
    Text(String),
}

impl From<f64> for Value {
    fn from(v: f64) -> Self {
        Self::Num(v)
    }
}

impl From<u32> for Value {
    fn from(v: u32) -> Self {
        Self::Int(v as u64)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Self::Text(v.to_owned())
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Self::Text(v)
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Num(v) => raw_number(*v).serialize(s),
            Value::Int(v) => s.serialize_u64(*v),
            Value::Text(t) => s.serialize_str(t),
        }
    }
}

/// Ordered key-value record.
#[derive(Debug, Clone, Default)]
pub struct Record(pub Vec<(String, Value)>);

impl Record {
    pub fn push(&mut self, key: impl Into<String>, value: impl Into<Value>) -> &mut Self {
        self.0.push((key.into(), value.into()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.0.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }
}

impl Serialize for Record {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

/// `key=value` lines, or one JSON object.
pub fn write_record(out: &mut dyn Write, format: OutputFormat, rec: &Record) -> Result<(), CliError> {
    match format {
        OutputFormat::Csv => {
            for (k, v) in &rec.0 {
                let text = match v {
                    Value::Num(x) => sci(*x),
                    Value::Int(i) => i.to_string(),
                    Value::Text(t) => t.clone(),
                };
                writeln!(out, "{k}={text}")?;
            }
        }
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, rec)?;
            writeln!(out)?;
        }
    }
    Ok(())
}
