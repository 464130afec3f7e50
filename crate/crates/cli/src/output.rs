//! Deterministic JSON and CSV writers and their readers.

use std::fmt::Write as _;

use num_complex::Complex64;
use susy_dirac::oracles::{format_float, json_string};

/// JSON value with insertion-ordered objects.
#[derive(Debug, Clone, PartialEq)]
pub enum Json {
    Null,
    Bool(bool),
    Int(i64),
    Num(f64),
    Str(String),
    Arr(Vec<Json>),
    Obj(Vec<(String, Json)>),
}

impl Json {
    pub fn obj<K: Into<String>>(fields: impl IntoIterator<Item = (K, Json)>) -> Self {
        Json::Obj(fields.into_iter().map(|(k, v)| (k.into(), v)).collect())
    }

    pub fn str(s: impl Into<String>) -> Self {
        Json::Str(s.into())
    }

    pub fn complex(z: Complex64) -> Self {
        Json::obj([("re", Json::Num(z.re)), ("im", Json::Num(z.im))])
    }

    /// Pretty-printed with two-space indent, floats as `%.12e`, trailing newline.
    pub fn render(&self) -> String {
        let mut s = String::new();
        self.write(&mut s, 0);
        s.push('\n');
        s
    }

    fn write(&self, s: &mut String, depth: usize) {
        let pad = |d: usize| "  ".repeat(d);
        match self {
            Json::Null => s.push_str("null"),
            Json::Bool(b) => {
                let _ = write!(s, "{b}");
            }
            Json::Int(i) => {
                let _ = write!(s, "{i}");
            }
            Json::Num(x) => s.push_str(&format_float(*x)),
            Json::Str(t) => s.push_str(&json_string(t)),
            Json::Arr(items) if items.is_empty() => s.push_str("[]"),
            Json::Obj(items) if items.is_empty() => s.push_str("{}"),
            Json::Arr(items) if items.iter().all(Json::is_compact) => {
                s.push('[');
                for (k, v) in items.iter().enumerate() {
                    if k > 0 {
                        s.push_str(", ");
                    }
                    v.write(s, depth);
                }
                s.push(']');
            }
            Json::Obj(items) if self.is_compact() => {
                s.push('{');
                for (k, (key, v)) in items.iter().enumerate() {
                    if k > 0 {
                        s.push_str(", ");
                    }
                    let _ = write!(s, "{}: ", json_string(key));
                    v.write(s, depth);
                }
                s.push('}');
            }
            Json::Arr(items) => {
                s.push('[');
                for (k, v) in items.iter().enumerate() {
                    s.push_str(if k == 0 { "\n" } else { ",\n" });
                    s.push_str(&pad(depth + 1));
                    v.write(s, depth + 1);
                }
                let _ = write!(s, "\n{}]", pad(depth));
            }
            Json::Obj(items) => {
                s.push('{');
                for (k, (key, v)) in items.iter().enumerate() {
                    s.push_str(if k == 0 { "\n" } else { ",\n" });
                    let _ = write!(s, "{}{}: ", pad(depth + 1), json_string(key));
                    v.write(s, depth + 1);
                }
                let _ = write!(s, "\n{}}}", pad(depth));
            }
        }
    }

    /// Leaves and small leaf-only objects (such as complex numbers) print on one line.
    fn is_compact(&self) -> bool {
        match self {
            Json::Obj(o) => o.len() <= 2 && o.iter().all(|(_, v)| v.is_leaf()),
            v => v.is_leaf(),
        }
    }

    fn is_leaf(&self) -> bool {
        !matches!(self, Json::Arr(_) | Json::Obj(_))
    }
}

/// CSV field: `%.12e` for floats, quoted when it contains a comma, quote or newline.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Float for CSV (non-finite values spelled `NaN`, `inf`, `-inf`).
pub fn csv_float(x: f64) -> String {
    if x.is_finite() {
        format_float(x)
    } else {
        x.to_string()
    }
}

/// Header plus rows, comma separated, trailing newline.
pub fn render_csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut s = header.iter().map(|h| csv_field(h)).collect::<Vec<_>>().join(",");
    s.push('\n');
    for r in rows {
        s.push_str(&r.iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(","));
        s.push('\n');
    }
    s
}

/// Parses emitted JSON.
pub fn read_json(text: &str) -> Result<serde_json::Value, String> {
    serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))
}

/// Parses emitted CSV into a header and rows of fields.
pub fn read_csv(text: &str) -> Result<(Vec<String>, Vec<Vec<String>>), String> {
    let mut lines = Vec::new();
    let mut field = String::new();
    let mut record = Vec::new();
    let mut quoted = false;
    let mut chars = text.chars().peekable();
    while let Some(ch) = chars.next() {
        match (quoted, ch) {
            (true, '"') if chars.peek() == Some(&'"') => {
                chars.next();
                field.push('"');
            }
            (true, '"') => quoted = false,
            (true, c) => field.push(c),
            (false, '"') if field.is_empty() => quoted = true,
            (false, ',') => record.push(std::mem::take(&mut field)),
            (false, '\n') => {
                record.push(std::mem::take(&mut field));
                lines.push(std::mem::take(&mut record));
            }
            (false, c) => field.push(c),
        }
    }
    if quoted {
        return Err("unterminated quoted CSV field".into());
    }
    if !field.is_empty() || !record.is_empty() {
        record.push(field);
        lines.push(record);
    }
    let mut it = lines.into_iter();
    let header = it.next().ok_or("empty CSV")?;
    let rows: Vec<Vec<String>> = it.collect();
    if let Some(k) = rows.iter().position(|r| r.len() != header.len()) {
        return Err(format!("CSV row {} has {} fields, header has {}", k + 1, rows[k].len(), header.len()));
    }
    Ok((header, rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let doc = Json::obj([
            ("a", Json::Num(0.1)),
            ("b", Json::Arr(vec![Json::Int(1), Json::Null, Json::str("x\"y")])),
            ("c", Json::complex(Complex64::new(-2.5e-9, 3.0))),
            ("d", Json::Arr(vec![Json::obj([("k", Json::Arr(vec![]))])])),
            ("e", Json::Num(f64::NAN)),
        ]);
        let text = doc.render();
        let v = read_json(&text).unwrap();
        assert_eq!(v["a"].as_f64(), Some(0.1));
        assert_eq!(v["b"][2].as_str(), Some("x\"y"));
        assert_eq!(v["c"]["re"].as_f64(), Some(-2.5e-9));
        assert_eq!(v["e"].as_str(), Some("NaN"));
        assert_eq!(text, doc.render());
    }

    #[test]
    fn csv_round_trip() {
        let rows = vec![
            vec!["a,b".to_string(), csv_float(1.5)],
            vec!["q\"x".to_string(), String::new()],
        ];
        let text = render_csv(&["name", "value"], &rows);
        let (h, r) = read_csv(&text).unwrap();
        assert_eq!(h, ["name", "value"]);
        assert_eq!(r, rows);
        assert!(read_csv("a,b\n1\n").is_err());
    }
}
