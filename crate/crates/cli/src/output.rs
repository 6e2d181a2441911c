//! JSON and text encodings shared by the commands.

use num_bigint::BigInt;
use qchar_core::{Laurent, Weight};
use serde_json::{json, Value};

/// An exact integer as a JSON number of any size.
pub fn big(v: &BigInt) -> Value {
    serde_json::from_str(&v.to_string()).expect("integers are valid JSON numbers")
}

pub fn weight(w: &Weight) -> Value {
    json!(w.entries())
}

/// `[[exponent, coefficient], …]`, largest exponent first.
pub fn character(p: &Laurent) -> Value {
    Value::Array(p.terms().map(|(e, c)| json!([e, big(c)])).collect())
}

pub fn matrix(rows: &[Vec<BigInt>]) -> Value {
    Value::Array(
        rows.iter()
            .map(|r| Value::Array(r.iter().map(big).collect()))
            .collect(),
    )
}

/// Right-aligned integer matrix with one row per line.
pub fn matrix_text(rows: &[Vec<BigInt>]) -> String {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.iter().map(|v| v.to_string()).collect())
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    cells
        .iter()
        .map(|r| {
            let line: Vec<String> = r.iter().map(|c| format!("{c:>width$}")).collect();
            format!("  [{}]\n", line.join(" "))
        })
        .collect()
}
