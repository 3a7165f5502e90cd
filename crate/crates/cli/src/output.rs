//! Records printed as CSV or JSON. Numbers are rounded to the requested
//! number of significant digits once, so both formats carry the same values.

use std::fmt::Write as _;

use serde_json::{Map, Value};

#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Num(f64),
    Int(i64),
    Text(String),
    List(Vec<f64>),
}

impl From<f64> for Field {
    fn from(x: f64) -> Self {
        Field::Num(x)
    }
}

impl From<u64> for Field {
    fn from(x: u64) -> Self {
        Field::Int(x as i64)
    }
}

impl From<u32> for Field {
    fn from(x: u32) -> Self {
        Field::Int(x as i64)
    }
}

impl From<usize> for Field {
    fn from(x: usize) -> Self {
        Field::Int(x as i64)
    }
}

impl From<&str> for Field {
    fn from(s: &str) -> Self {
        Field::Text(s.to_string())
    }
}

impl From<String> for Field {
    fn from(s: String) -> Self {
        Field::Text(s)
    }
}

/// An ordered list of named fields.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Record(Vec<(&'static str, Field)>);

impl Record {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &'static str, value: impl Into<Field>) -> Self {
        self.0.push((name, value.into()));
        self
    }

    fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.0.iter().map(|(n, _)| *n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OutputFormat {
    pub kind: Kind,
    /// Significant digits, 6 to 17.
    pub precision: usize,
}

impl OutputFormat {
    /// `x` rounded to `precision` significant digits.
    fn round(&self, x: f64) -> f64 {
        if !x.is_finite() || x == 0.0 {
            return x;
        }
        format!("{:.*e}", self.precision - 1, x)
            .parse()
            .unwrap_or(x)
    }

    fn csv_number(&self, x: f64) -> String {
        let x = self.round(x);
        if x.is_nan() {
            "NaN".into()
        } else if x.is_infinite() {
            if x > 0.0 { "inf" } else { "-inf" }.into()
        } else if x == 0.0 || (1e-5..1e16).contains(&x.abs()) {
            format!("{x}")
        } else {
            format!("{x:e}")
        }
    }

    fn csv_field(&self, f: &Field) -> String {
        match f {
            Field::Num(x) => self.csv_number(*x),
            Field::Int(i) => i.to_string(),
            Field::Text(s) => s.clone(),
            Field::List(xs) => xs
                .iter()
                .map(|&x| self.csv_number(x))
                .collect::<Vec<_>>()
                .join(";"),
        }
    }

    fn json_field(&self, f: &Field) -> Value {
        let num = |x: f64| {
            serde_json::Number::from_f64(self.round(x))
                .map(Value::Number)
                .unwrap_or(Value::Null)
        };
        match f {
            Field::Num(x) => num(*x),
            Field::Int(i) => Value::from(*i),
            Field::Text(s) => Value::from(s.as_str()),
            Field::List(xs) => Value::Array(xs.iter().map(|&x| num(x)).collect()),
        }
    }

    fn json_record(&self, r: &Record) -> Value {
        let map: Map<String, Value> =
            r.0.iter()
                .map(|(n, f)| (n.to_string(), self.json_field(f)))
                .collect();
        Value::Object(map)
    }

    /// One record: a header and a value line, or a JSON object.
    pub fn single(&self, r: &Record) -> String {
        match self.kind {
            Kind::Csv => self.table(std::slice::from_ref(r)),
            Kind::Json => format!("{}\n", self.json_record(r)),
        }
    }

    /// Rows sharing the first row's columns: CSV with a header, or a JSON array.
    pub fn table(&self, rows: &[Record]) -> String {
        match self.kind {
            Kind::Csv => {
                let mut out = String::new();
                if let Some(first) = rows.first() {
                    let _ = writeln!(out, "{}", first.names().collect::<Vec<_>>().join(","));
                }
                for r in rows {
                    let line: Vec<String> = r.0.iter().map(|(_, f)| self.csv_field(f)).collect();
                    let _ = writeln!(out, "{}", line.join(","));
                }
                out
            }
            Kind::Json => {
                let arr = Value::Array(rows.iter().map(|r| self.json_record(r)).collect());
                format!("{arr}\n")
            }
        }
    }
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;

    fn fmt(kind: Kind, precision: usize) -> OutputFormat {
        OutputFormat { kind, precision }
    }

    #[test]
    fn csv_and_json_carry_the_same_numbers() {
        let r = Record::new()
            .with("a", std::f64::consts::E - 1.0)
            .with("b", 5.237048923789256e-319)
            .with("c", 3u32)
            .with("d", "Series");
        for p in [6, 12, 17] {
            let csv = fmt(Kind::Csv, p).single(&r);
            let json: Value = serde_json::from_str(&fmt(Kind::Json, p).single(&r)).unwrap();
            let values: Vec<&str> = csv.lines().nth(1).unwrap().split(',').collect();
            assert_eq!(
                values[0].parse::<f64>().unwrap(),
                json["a"].as_f64().unwrap()
            );
            assert_eq!(
                values[1].parse::<f64>().unwrap(),
                json["b"].as_f64().unwrap()
            );
            assert_eq!(values[2], "3");
            assert_eq!(json["d"], "Series");
        }
    }

    #[test]
    fn rounding_to_precision() {
        let f = fmt(Kind::Csv, 6);
        assert_eq!(f.csv_number(std::f64::consts::PI), "3.14159");
        assert_eq!(f.csv_number(-2.5e-7), "-2.5e-7");
        assert_eq!(f.csv_number(0.0), "0");
        assert_eq!(f.csv_number(f64::NAN), "NaN");
    }

    #[test]
    fn table_has_one_header() {
        let rows: Vec<Record> = (0..3).map(|i| Record::new().with("i", i as u32)).collect();
        assert_eq!(fmt(Kind::Csv, 17).table(&rows), "i\n0\n1\n2\n");
        assert_eq!(
            fmt(Kind::Json, 17).table(&rows),
            "[{\"i\":0},{\"i\":1},{\"i\":2}]\n"
        );
    }
}
