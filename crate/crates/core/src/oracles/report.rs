//! Verification reports and their JSON form.

use std::fmt::Write as _;
use std::time::Instant;

/// One measured deviation against its tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub measured: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub note: Option<String>,
}

impl Check {
    /// Passes when `measured <= tolerance` (a NaN measurement fails).
    pub fn new(name: impl Into<String>, measured: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            measured,
            tolerance,
            pass: measured <= tolerance,
            note: None,
        }
    }

    /// A yes/no check, recorded as deviation 0 or 1 against tolerance 0.
    pub fn boolean(name: impl Into<String>, ok: bool) -> Self {
        Self::new(name, if ok { 0.0 } else { 1.0 }, 0.0)
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Result of one verification job.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub name: String,
    pub inputs: Vec<(String, String)>,
    pub checks: Vec<Check>,
    pub runtime_seconds: f64,
}

impl VerificationReport {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            inputs: Vec::new(),
            checks: Vec::new(),
            runtime_seconds: 0.0,
        }
    }

    pub fn input(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.inputs.push((key.into(), value.to_string()));
        self
    }

    pub fn push(&mut self, check: Check) -> &mut Self {
        self.checks.push(check);
        self
    }

    pub fn check(&mut self, name: impl Into<String>, measured: f64, tolerance: f64) -> &mut Self {
        self.push(Check::new(name, measured, tolerance))
    }

    /// True when every check passes (and there is at least one).
    pub fn pass(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.pass)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// Largest `measured / tolerance` over the checks.
    pub fn worst_ratio(&self) -> f64 {
        self.checks
            .iter()
            .map(|c| if c.tolerance > 0.0 { c.measured / c.tolerance } else if c.pass { 0.0 } else { f64::INFINITY })
            .fold(0.0, f64::max)
    }

    /// Runs `f` and stores its wall-clock time.
    pub fn timed<F: FnOnce(&mut Self)>(mut self, f: F) -> Self {
        let t0 = Instant::now();
        f(&mut self);
        self.runtime_seconds = t0.elapsed().as_secs_f64();
        self
    }

    /// Deterministic JSON: fixed key order, floats as `%.12e`. Runtime only if `timing`.
    pub fn to_json(&self, timing: bool) -> String {
        let mut s = String::new();
        write_report(&mut s, self, timing, "");
        s
    }
}

/// Merges reports sorted by name into one JSON document.
pub fn merged_json(reports: &[VerificationReport], timing: bool) -> String {
    let mut sorted: Vec<&VerificationReport> = reports.iter().collect();
    sorted.sort_by(|a, b| a.name.cmp(&b.name));
    let pass = !sorted.is_empty() && sorted.iter().all(|r| r.pass());
    let mut s = String::new();
    let _ = write!(s, "{{\n  \"pass\": {pass},\n  \"reports\": [");
    for (i, r) in sorted.iter().enumerate() {
        s.push_str(if i == 0 { "\n    " } else { ",\n    " });
        write_report(&mut s, r, timing, "    ");
    }
    s.push_str(if sorted.is_empty() { "]\n}\n" } else { "\n  ]\n}\n" });
    s
}

/// `%.12e` with a signed two-digit exponent; non-finite values become strings.
pub fn format_float(x: f64) -> String {
    if !x.is_finite() {
        return format!("\"{x}\"");
    }
    let raw = format!("{x:.12e}");
    let (mant, exp) = raw.split_once('e').expect("exponent");
    let e: i32 = exp.parse().expect("integer exponent");
    let sign = if e < 0 { '-' } else { '+' };
    format!("{mant}e{sign}{:02}", e.abs())
}

pub fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn write_report(s: &mut String, r: &VerificationReport, timing: bool, indent: &str) {
    let i1 = format!("{indent}  ");
    let i2 = format!("{indent}    ");
    let _ = write!(s, "{{\n{i1}\"name\": {},\n{i1}\"inputs\": {{", json_string(&r.name));
    for (k, (key, value)) in r.inputs.iter().enumerate() {
        let sep = if k == 0 { "" } else { "," };
        let _ = write!(s, "{sep}\n{i2}{}: {}", json_string(key), json_string(value));
    }
    if !r.inputs.is_empty() {
        let _ = write!(s, "\n{i1}");
    }
    let _ = write!(s, "}},\n{i1}\"checks\": [");
    for (k, c) in r.checks.iter().enumerate() {
        let sep = if k == 0 { "" } else { "," };
        let _ = write!(
            s,
            "{sep}\n{i2}{{\"name\": {}, \"measured\": {}, \"tolerance\": {}, \"pass\": {}",
            json_string(&c.name),
            format_float(c.measured),
            format_float(c.tolerance),
            c.pass
        );
        if let Some(note) = &c.note {
            let _ = write!(s, ", \"note\": {}", json_string(note));
        }
        s.push('}');
    }
    if !r.checks.is_empty() {
        let _ = write!(s, "\n{i1}");
    }
    let _ = write!(s, "],\n{i1}\"pass\": {}", r.pass());
    if timing {
        let _ = write!(s, ",\n{i1}\"runtime_seconds\": {}", format_float(r.runtime_seconds));
    }
    let _ = write!(s, "\n{indent}}}");
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_format_is_fixed() {
        assert_eq!(format_float(1.0), "1.000000000000e+00");
        assert_eq!(format_float(-2.5e-7), "-2.500000000000e-07");
        assert_eq!(format_float(3e120), "3.000000000000e+120");
    }

    #[test]
    fn pass_flag_follows_checks() {
        let mut r = VerificationReport::new("demo");
        assert!(!r.pass());
        r.check("a", 1e-9, 1e-8);
        assert!(r.pass());
        r.check("b", f64::NAN, 1.0);
        assert!(!r.pass());
        assert_eq!(r.failed().count(), 1);
    }

    #[test]
    fn json_is_deterministic() {
        let mut r = VerificationReport::new("x \"q\"");
        r.input("model", "free");
        r.push(Check::boolean("ok", true).with_note("n"));
        r.runtime_seconds = 0.25;
        let a = merged_json(&[r.clone()], false);
        r.runtime_seconds = 9.0;
        assert_eq!(a, merged_json(&[r], false));
        assert!(a.contains("\\\"q\\\""));
    }
}
