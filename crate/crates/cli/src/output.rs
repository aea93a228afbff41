//! JSON and CSV emission.
//!
//! Every JSON document has the shape
//! `{"command", "knot", "region", "value", "provenance"}`. Scalars are
//! `{"num", "den"}` (integers, or decimal strings when they overflow `i64`),
//! PL functions are `{"breakpoints": [["t", "v"], ...]}` with `p/q` strings,
//! and a secondary invariant without obstruction is `"no-obstruction"`.

use clap::ValueEnum;
use serde_json::{json, Map, Value};
use upsilon_core::{PLFunction, Rational, SecondaryValue};

use crate::error::{CliError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

pub fn rational(r: &Rational) -> Value {
    let part = |b: &num_bigint::BigInt| match i64::try_from(b) {
        Ok(v) => json!(v),
        Err(_) => json!(b.to_string()),
    };
    json!({ "num": part(r.numer()), "den": part(r.denom()) })
}

pub fn pl_function(f: &PLFunction) -> Value {
    let points: Vec<Value> = f
        .breakpoints()
        .iter()
        .map(|(t, v)| json!([t.to_string(), v.to_string()]))
        .collect();
    json!({ "breakpoints": points })
}

pub fn secondary(v: &SecondaryValue) -> Value {
    match v {
        SecondaryValue::Value(r) => rational(r),
        SecondaryValue::NoObstruction => json!("no-obstruction"),
    }
}

/// Tabular payload used for `--format csv`.
pub enum Table {
    /// `t,value` rows.
    Series(Vec<(Rational, Rational)>),
    /// A single `value` row; `None` prints `no-obstruction`.
    Scalar(Option<Rational>),
    /// Not representable as CSV.
    Report,
}

pub struct Output {
    pub command: &'static str,
    pub knot: Option<String>,
    pub region: Option<String>,
    pub value: Value,
    pub provenance: Vec<String>,
    pub extra: Map<String, Value>,
    pub table: Table,
}

impl Output {
    pub fn new(command: &'static str, value: Value, table: Table) -> Self {
        Output {
            command,
            knot: None,
            region: None,
            value,
            provenance: Vec::new(),
            extra: Map::new(),
            table,
        }
    }

    pub fn knot(mut self, knot: impl Into<String>) -> Self {
        self.knot = Some(knot.into());
        self
    }

    pub fn region(mut self, region: impl Into<String>) -> Self {
        self.region = Some(region.into());
        self
    }

    pub fn provenance(mut self, op: impl Into<String>) -> Self {
        self.provenance.push(op.into());
        self
    }

    pub fn field(mut self, key: &str, value: Value) -> Self {
        self.extra.insert(key.to_string(), value);
        self
    }

    pub fn to_json(&self) -> Value {
        let mut doc = Map::new();
        doc.insert("command".into(), json!(self.command));
        doc.insert("knot".into(), json!(self.knot));
        doc.insert("region".into(), json!(self.region));
        doc.insert("value".into(), self.value.clone());
        doc.insert("provenance".into(), json!(self.provenance));
        for (k, v) in &self.extra {
            doc.insert(k.clone(), v.clone());
        }
        Value::Object(doc)
    }

    /// CSV text, or a usage error for report commands.
    pub fn to_csv(&self) -> Result<String> {
        let dec = |r: &Rational| r.to_decimal_string(12);
        let mut out = String::new();
        match &self.table {
            Table::Series(rows) => {
                out.push_str("t,value\n");
                for (t, v) in rows {
                    out.push_str(&format!("{},{}\n", dec(t), dec(v)));
                }
            }
            Table::Scalar(v) => {
                out.push_str("value\n");
                match v {
                    Some(v) => out.push_str(&format!("{}\n", dec(v))),
                    None => out.push_str("no-obstruction\n"),
                }
            }
            Table::Report => {
                return Err(CliError::Usage(format!(
                    "`{}` produces a report; use --format json",
                    self.command
                )))
            }
        }
        Ok(out)
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => Ok(serde_json::to_string_pretty(&self.to_json()).expect("json values serialize") + "\n"),
            Format::Csv => self.to_csv(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use upsilon_core::exactmath::q;

    #[test]
    fn rationals_are_exact() {
        assert_eq!(rational(&q(-4, 3)), json!({"num": -4, "den": 3}));
        let huge: Rational = "123456789012345678901234567891/2".parse().unwrap();
        assert_eq!(rational(&huge)["num"], json!("123456789012345678901234567891"));
    }

    #[test]
    fn envelope_and_csv() {
        let f = PLFunction::from_breakpoints(vec![(q(0, 1), q(0, 1)), (q(1, 1), q(-1, 1)), (q(2, 1), q(0, 1))]).unwrap();
        let out = Output::new("upsilon", pl_function(&f), Table::Series(f.breakpoints().to_vec()))
            .knot("T(3,2)")
            .provenance("Engine::upsilon_function");
        let doc = out.to_json();
        assert_eq!(doc["value"]["breakpoints"][1], json!(["1", "-1"]));
        assert_eq!(doc["region"], Value::Null);
        let csv = out.to_csv().unwrap();
        assert_eq!(csv.lines().next(), Some("t,value"));
        assert_eq!(csv.lines().nth(2), Some("1.000000000000,-1.000000000000"));
        assert!(Output::new("thin-check", json!({}), Table::Report).to_csv().is_err());
    }
}
