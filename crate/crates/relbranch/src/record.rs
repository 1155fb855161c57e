//! The JSON record every command emits, and its CSV projection.

use std::collections::BTreeMap;
use std::io::Write;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Bumped whenever a field is renamed or removed.
pub const SCHEMA: &str = "relbranch/1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub schema: String,
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub result: Value,
    /// Identifiers of the rules the result rests on.
    pub provenance: Vec<String>,
}

impl OutputRecord {
    pub fn new(command: &str, inputs: BTreeMap<String, String>, result: Value, provenance: &[&str]) -> Self {
        OutputRecord {
            schema: SCHEMA.to_string(),
            command: command.to_string(),
            inputs,
            result,
            provenance: provenance.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

/// Builds an `inputs` map from `(key, value)` pairs.
pub fn inputs<I, K, V>(pairs: I) -> BTreeMap<String, String>
where
    I: IntoIterator<Item = (K, V)>,
    K: Into<String>,
    V: ToString,
{
    pairs.into_iter().map(|(k, v)| (k.into(), v.to_string())).collect()
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// One row per record: the inputs, then the top-level result fields.
/// Nested values are written as compact JSON. Columns come from the first
/// record.
pub fn write_csv<W: Write>(records: &[OutputRecord], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let Some(first) = records.first() else {
        return w.flush().map_err(Into::into);
    };
    let input_keys: Vec<&String> = first.inputs.keys().collect();
    let result_keys: Vec<String> = match &first.result {
        Value::Object(m) => m.keys().cloned().collect(),
        _ => vec!["result".to_string()],
    };
    let mut header: Vec<String> = vec!["command".to_string()];
    header.extend(input_keys.iter().map(|k| k.to_string()));
    header.extend(result_keys.iter().cloned());
    w.write_record(&header)?;
    for r in records {
        let mut row = vec![r.command.clone()];
        row.extend(input_keys.iter().map(|k| r.inputs.get(*k).cloned().unwrap_or_default()));
        match &r.result {
            Value::Object(m) => row.extend(result_keys.iter().map(|k| m.get(k).map(cell).unwrap_or_default())),
            other => row.push(cell(other)),
        }
        w.write_record(&row)?;
    }
    w.flush().map_err(Into::into)
}
