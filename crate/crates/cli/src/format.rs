//! Table rendering: CSV with `%.15g` numbers and an equivalent JSON object.

use serde_json::{json, Map, Value};

/// C-style `%.{prec}g`.
pub fn fmt_g(x: f64, prec: usize) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.into();
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0" } else { "0" }.into();
    }
    let p = prec.max(1);
    let sci = format!("{:.*e}", p - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= p as i32 {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_zeros(mantissa), exp.abs())
    } else {
        let decimals = (p as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn g15(x: f64) -> String {
    fmt_g(x, 15)
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
    Bool(bool),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Num(x) => g15(*x),
            Cell::Int(i) => i.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
        }
    }

    /// JSON value carrying exactly the number printed in CSV.
    fn json(&self) -> Value {
        match self {
            Cell::Num(x) => number(*x),
            Cell::Int(i) => json!(i),
            Cell::Text(s) => json!(s),
            Cell::Bool(b) => json!(b),
        }
    }
}

pub(crate) fn number(x: f64) -> Value {
    let rounded: f64 = g15(x).parse().unwrap_or(x);
    serde_json::Number::from_f64(rounded).map_or(Value::Null, Value::Number)
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

impl From<usize> for Cell {
    fn from(i: usize) -> Self {
        Cell::Int(i as i64)
    }
}

impl From<u8> for Cell {
    fn from(i: u8) -> Self {
        Cell::Int(i as i64)
    }
}

/// Result of one command: a table plus its pass/fail summary.
#[derive(Debug, Clone)]
pub struct Report {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    /// Named matrices, emitted under `matrix` in JSON.
    pub matrices: Vec<(&'static str, [[f64; 4]; 4])>,
    pub max_deviation: f64,
    pub tol: f64,
    /// Human-readable description of every case over tolerance.
    pub failures: Vec<String>,
}

impl Report {
    pub fn new(columns: Vec<&'static str>, tol: f64) -> Self {
        Self {
            columns,
            rows: Vec::new(),
            matrices: Vec::new(),
            max_deviation: 0.0,
            tol,
            failures: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// Folds `dev` into the maximum and records a failure when it reaches
    /// the tolerance.
    pub fn observe(&mut self, dev: f64, case: impl FnOnce() -> String) {
        if dev.is_nan() || dev >= self.tol {
            self.failures.push(format!("{}: deviation {}", case(), g15(dev)));
        }
        if dev.is_nan() || dev > self.max_deviation {
            self.max_deviation = dev;
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::csv).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self, config: Value) -> String {
        let mut obj = Map::new();
        obj.insert("config".into(), config);
        obj.insert("version".into(), json!(phasespin_core::VERSION));
        obj.insert("columns".into(), json!(self.columns));
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| Value::Array(r.iter().map(Cell::json).collect()))
            .collect();
        obj.insert("rows".into(), Value::Array(rows));
        if !self.matrices.is_empty() {
            let m: Map<String, Value> = self
                .matrices
                .iter()
                .map(|(name, m)| {
                    let rows = m.iter().map(|r| Value::Array(r.iter().map(|x| number(*x)).collect()));
                    (name.to_string(), Value::Array(rows.collect()))
                })
                .collect();
            obj.insert("matrix".into(), Value::Object(m));
        }
        obj.insert(
            "summary".into(),
            json!({
                "max_deviation": number(self.max_deviation),
                "tol": number(self.tol),
                "pass": self.passed(),
                "failures": self.failures,
            }),
        );
        let mut s = serde_json::to_string_pretty(&Value::Object(obj)).expect("serializable");
        s.push('\n');
        s
    }
}
