use cyclie_core::linalg::format_rational;
use cyclie_core::{Matrix, Rational};
use serde::Serialize;
use serde_json::{Map, Value};

/// Output of one command: text lines for people, a JSON object for
/// machines, and whether the checked property held.
pub struct Report {
    lines: Vec<String>,
    json: Map<String, Value>,
    pub ok: bool,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut json = Map::new();
        json.insert("command".into(), Value::String(command.into()));
        Self {
            lines: Vec::new(),
            json,
            ok: true,
        }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn set(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("serializable");
        self.json.insert(key.to_string(), v);
    }

    /// Adds `value` under `section.name`, e.g. `algebras.result`.
    pub fn define(&mut self, section: &str, name: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("serializable");
        let entry = self
            .json
            .entry(section.to_string())
            .or_insert_with(|| Value::Object(Map::new()));
        entry.as_object_mut().expect("section is an object").insert(name.to_string(), v);
    }

    pub fn matrix(&mut self, indent: usize, m: &Matrix) {
        for l in matrix_lines(m) {
            self.lines.push(format!("{}{l}", " ".repeat(indent)));
        }
    }

    pub fn text(&self) -> String {
        let mut s = self.lines.join("\n");
        s.push('\n');
        s
    }

    pub fn json(mut self, meta: Option<Value>) -> String {
        self.json.insert("ok".into(), Value::Bool(self.ok));
        if let Some(m) = meta {
            self.json.insert("meta".into(), m);
        }
        let mut s = serde_json::to_string_pretty(&Value::Object(self.json)).expect("serializable");
        s.push('\n');
        s
    }
}

pub fn matrix_lines(m: &Matrix) -> Vec<String> {
    if m.rows() == 0 || m.cols() == 0 {
        return vec!["[]".into()];
    }
    let cells: Vec<Vec<String>> = (0..m.rows())
        .map(|r| m.row(r).iter().map(format_rational).collect())
        .collect();
    let width = cells.iter().flatten().map(|c| c.chars().count()).max().unwrap_or(1);
    cells
        .iter()
        .map(|row| {
            let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            format!("[ {} ]", padded.join("  "))
        })
        .collect()
}

/// `a·x + b·y` style rendering of a vector over named basis elements.
pub fn combination(v: &[Rational], names: &[String]) -> String {
    use num_traits::{One, Signed, Zero};
    let mut out = String::new();
    for (c, n) in v.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !a.is_one() {
            out.push_str(&format_rational(&a));
            out.push('·');
        }
        out.push_str(n);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
