//! Result records and their CSV / JSON renderings.
//!
//! A subcommand produces one or more [`Record`]s with the same field layout.
//! CSV output is a header row followed by one row per record with the input
//! columns, the output columns, `numerical_error` and `flags` (`;`-joined).
//! JSON output is one object per record and line:
//! `{"inputs":{..},"outputs":{..},"flags":[..],"numerical_error":x,"version":".."}`.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Num(f64),
    Int(u64),
    Text(String),
}

impl From<f64> for Field {
    fn from(v: f64) -> Self {
        Field::Num(v)
    }
}

impl From<u64> for Field {
    fn from(v: u64) -> Self {
        Field::Int(v)
    }
}

impl From<usize> for Field {
    fn from(v: usize) -> Self {
        Field::Int(v as u64)
    }
}

impl From<String> for Field {
    fn from(v: String) -> Self {
        Field::Text(v)
    }
}

impl From<&str> for Field {
    fn from(v: &str) -> Self {
        Field::Text(v.to_string())
    }
}

impl Field {
    fn csv(&self) -> String {
        match self {
            Field::Num(v) => format_number(*v),
            Field::Int(v) => v.to_string(),
            Field::Text(s) => csv_escape(s),
        }
    }

    fn json(&self) -> Value {
        match self {
            Field::Num(v) => serde_json::Number::from_f64(*v).map_or(Value::Null, Value::Number),
            Field::Int(v) => Value::from(*v),
            Field::Text(s) => Value::from(s.as_str()),
        }
    }
}

/// Scientific notation with 9 significant digits.
pub fn format_number(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.8e}")
    } else {
        v.to_string()
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Record {
    pub inputs: Vec<(&'static str, Field)>,
    pub outputs: Vec<(&'static str, Field)>,
    pub flags: Vec<String>,
    pub numerical_error: f64,
}

impl Record {
    pub fn input(mut self, name: &'static str, value: impl Into<Field>) -> Self {
        self.inputs.push((name, value.into()));
        self
    }

    pub fn output(mut self, name: &'static str, value: impl Into<Field>) -> Self {
        self.outputs.push((name, value.into()));
        self
    }

    pub fn flag(mut self, flag: impl Into<String>) -> Self {
        self.flags.push(flag.into());
        self
    }

    pub fn flag_if(self, condition: bool, flag: &str) -> Self {
        if condition {
            self.flag(flag)
        } else {
            self
        }
    }

    pub fn error(mut self, numerical_error: f64) -> Self {
        self.numerical_error = numerical_error;
        self
    }

    /// Output value by name, if numeric.
    pub fn value(&self, name: &str) -> Option<f64> {
        self.outputs
            .iter()
            .find(|(n, _)| *n == name)
            .and_then(|(_, f)| match f {
                Field::Num(v) => Some(*v),
                Field::Int(v) => Some(*v as f64),
                Field::Text(_) => None,
            })
    }

    fn header(&self) -> Vec<&'static str> {
        let names = self.inputs.iter().chain(&self.outputs).map(|(n, _)| *n);
        names.chain(["numerical_error", "flags"]).collect()
    }

    fn to_json(&self) -> Value {
        let object = |fields: &[(&'static str, Field)]| {
            Value::Object(
                fields
                    .iter()
                    .map(|(n, f)| (n.to_string(), f.json()))
                    .collect::<Map<_, _>>(),
            )
        };
        let mut map = Map::new();
        map.insert("inputs".into(), object(&self.inputs));
        map.insert("outputs".into(), object(&self.outputs));
        map.insert("flags".into(), Value::from(self.flags.clone()));
        map.insert(
            "numerical_error".into(),
            Field::Num(self.numerical_error).json(),
        );
        map.insert("version".into(), Value::from(crate::version()));
        Value::Object(map)
    }
}

pub fn render(records: &[Record], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Csv => {
            if let Some(first) = records.first() {
                out.push_str(&first.header().join(","));
                out.push('\n');
            }
            for r in records {
                let cells = r.inputs.iter().chain(&r.outputs).map(|(_, f)| f.csv());
                let cells: Vec<String> = cells
                    .chain([
                        format_number(r.numerical_error),
                        csv_escape(&r.flags.join(";")),
                    ])
                    .collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
        }
        Format::Json => {
            for r in records {
                writeln!(out, "{}", r.to_json()).expect("write to String");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Record {
        Record::default()
            .input("length_um", 1.0)
            .input("material", "plasma:136")
            .output("force_N", 1.300_125_772_447_753_7e-7)
            .output("terms", 42usize)
            .flag("few_matsubara_terms")
            .error(3e-11)
    }

    #[test]
    fn nine_significant_digits() {
        assert_eq!(format_number(1.300_125_772_447_753_7e-7), "1.30012577e-7");
        assert_eq!(format_number(0.0), "0.00000000e0");
        assert_eq!(format_number(-2.5e300), "-2.50000000e300");
        assert_eq!(format_number(f64::NAN), "NaN");
    }

    #[test]
    fn csv_layout() {
        let text = render(&[sample(), sample()], Format::Csv);
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(
            lines[0],
            "length_um,material,force_N,terms,numerical_error,flags"
        );
        assert_eq!(
            lines[1],
            "1.00000000e0,plasma:136,1.30012577e-7,42,3.00000000e-11,few_matsubara_terms"
        );
        assert_eq!(lines.len(), 3);
        assert!(text.ends_with('\n'));
        assert_eq!(render(&[], Format::Csv), "");
    }

    #[test]
    fn csv_quotes_separators() {
        assert_eq!(csv_escape("a,b"), "\"a,b\"");
        assert_eq!(csv_escape("say \"x\""), "\"say \"\"x\"\"\"");
    }

    #[test]
    fn json_layout() {
        let text = render(&[sample()], Format::Json);
        let v: Value = serde_json::from_str(text.trim_end()).unwrap();
        assert_eq!(v["inputs"]["material"], "plasma:136");
        assert_eq!(v["outputs"]["force_N"], 1.300_125_772_447_753_7e-7);
        assert_eq!(v["outputs"]["terms"], 42);
        assert_eq!(v["flags"][0], "few_matsubara_terms");
        assert_eq!(v["numerical_error"], 3e-11);
        assert_eq!(v["version"], crate::version());
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys.len(), 5);
    }

    #[test]
    fn non_finite_json_is_null() {
        let r = Record::default().output("x", f64::INFINITY);
        let v: Value = serde_json::from_str(render(&[r], Format::Json).trim_end()).unwrap();
        assert!(v["outputs"]["x"].is_null());
    }

    #[test]
    fn value_lookup() {
        let r = sample();
        assert_eq!(r.value("terms"), Some(42.0));
        assert_eq!(r.value("missing"), None);
    }
}
