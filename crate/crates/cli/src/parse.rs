//! Literal parsers for command-line and config-file values.

use num_complex::Complex64;
use susy_dirac::angular::{Channel, Sign};

/// Parses `"1/2"`, `"3/2"`, `"2"` or a decimal such as `"2.5"` into twice its value.
pub fn parse_half_integer(s: &str) -> Result<u32, String> {
    let t = s.trim();
    let bad = || format!("'{s}' is not a non-negative half-integer (use e.g. 1/2, 3/2 or 2.5)");
    if let Some((num, den)) = t.split_once('/') {
        let num: u32 = num.trim().parse().map_err(|_| bad())?;
        return match den.trim() {
            "2" => Ok(num),
            "1" => num.checked_mul(2).ok_or_else(bad),
            _ => Err(bad()),
        };
    }
    let x: f64 = t.parse().map_err(|_| bad())?;
    let twice = 2.0 * x;
    if !(twice >= 0.0 && twice <= u32::MAX as f64 && twice.fract() == 0.0) {
        return Err(bad());
    }
    Ok(twice as u32)
}

/// Doubled half-integer as `"k/2"` (odd) or `"k"` (even).
pub fn format_half_integer(twice: u32) -> String {
    if twice % 2 == 0 {
        format!("{}", twice / 2)
    } else {
        format!("{twice}/2")
    }
}

/// Parses `"a+bi"`, `"a-bi"`, `"a"`, `"bi"`, `"i"` (exponents such as `1e-3` allowed).
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("'{s}' is not a complex literal (use e.g. 0.3+0.4i)");
    if t.is_empty() {
        return Err(bad());
    }
    let finite = |z: Complex64| if z.re.is_finite() && z.im.is_finite() { Ok(z) } else { Err(bad()) };
    let Some(body) = t.strip_suffix(['i', 'j']) else {
        let re: f64 = t.parse().map_err(|_| bad())?;
        return finite(Complex64::new(re, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let imag = |part: &str| -> Result<f64, String> {
        match part {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => part.parse().map_err(|_| bad()),
        }
    };
    let z = match split {
        Some(k) => Complex64::new(body[..k].parse().map_err(|_| bad())?, imag(&body[k..])?),
        None => Complex64::new(0.0, imag(body)?),
    };
    finite(z)
}

/// Parses `"x,y,z"`.
pub fn parse_vec3(s: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = || format!("'{s}' is not a point (use x,y,z)");
    if parts.len() != 3 {
        return Err(bad());
    }
    let mut out = [0.0; 3];
    for (o, p) in out.iter_mut().zip(parts) {
        *o = p.parse::<f64>().map_err(|_| bad())?;
        if !o.is_finite() {
            return Err(bad());
        }
    }
    Ok(out)
}

/// Parses `"+"`, `"-"`, `"+1"`, `"-1"`, `"1"`.
pub fn parse_sign(s: &str) -> Result<Sign, String> {
    match s.trim() {
        "+" | "+1" | "1" | "plus" => Ok(Sign::Plus),
        "-" | "-1" | "−" | "minus" => Ok(Sign::Minus),
        _ => Err(format!("'{s}' is not a sign (use + or -)")),
    }
}

/// Parses `"j=1/2,sigma=+1"` with optional `mj=...` (defaults to `+1/2`).
pub fn parse_channel(s: &str) -> Result<Channel, String> {
    let mut twice_j = None;
    let mut twice_mj = 1i32;
    let mut sigma = None;
    for item in s.split(',') {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| format!("channel item '{item}' is not key=value (use j=1/2,sigma=+1)"))?;
        match k.trim() {
            "j" => twice_j = Some(parse_half_integer(v)?),
            "mj" => {
                let v = v.trim();
                let (neg, mag) = match v.strip_prefix('-') {
                    Some(rest) => (true, rest),
                    None => (false, v.strip_prefix('+').unwrap_or(v)),
                };
                let m = parse_half_integer(mag)? as i32;
                twice_mj = if neg { -m } else { m };
            }
            "sigma" => sigma = Some(parse_sign(v)?),
            other => return Err(format!("unknown channel key '{other}' (expected j, mj, sigma)")),
        }
    }
    let twice_j = twice_j.ok_or("channel needs j=...")?;
    let sigma = sigma.ok_or("channel needs sigma=...")?;
    Channel::new(twice_j, twice_mj, sigma).map_err(|e| e.to_string())
}

/// Parses `"lo,hi"`.
pub fn parse_window(s: &str) -> Result<(f64, f64), String> {
    let bad = || format!("'{s}' is not a window (use lo,hi)");
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    let lo: f64 = a.trim().parse().map_err(|_| bad())?;
    let hi: f64 = b.trim().parse().map_err(|_| bad())?;
    if !(lo < hi && lo.is_finite() && hi.is_finite()) {
        return Err(bad());
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_integers() {
        assert_eq!(parse_half_integer("1/2"), Ok(1));
        assert_eq!(parse_half_integer("5/2"), Ok(5));
        assert_eq!(parse_half_integer("2.5"), Ok(5));
        assert_eq!(parse_half_integer("3"), Ok(6));
        assert_eq!(parse_half_integer("4/1"), Ok(8));
        for bad in ["1/3", "0.3", "-1/2", "x", "", "-0.5"] {
            assert!(parse_half_integer(bad).is_err(), "{bad}");
        }
        for t in 0..40 {
            assert_eq!(parse_half_integer(&format_half_integer(t)), Ok(t));
        }
    }

    #[test]
    fn complex_literals() {
        assert_eq!(parse_complex("0.3+0.4i"), Ok(Complex64::new(0.3, 0.4)));
        assert_eq!(parse_complex("-1-2i"), Ok(Complex64::new(-1.0, -2.0)));
        assert_eq!(parse_complex("5"), Ok(Complex64::new(5.0, 0.0)));
        assert_eq!(parse_complex("-i"), Ok(Complex64::new(0.0, -1.0)));
        assert_eq!(parse_complex("2.5i"), Ok(Complex64::new(0.0, 2.5)));
        assert_eq!(parse_complex("1e-3-2E+1i"), Ok(Complex64::new(1e-3, -20.0)));
        assert_eq!(parse_complex("-1e-3i"), Ok(Complex64::new(0.0, -1e-3)));
        for bad in ["", "a+bi", "1+2", "1++2i", "inf", "nan+1i"] {
            assert!(parse_complex(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn channels_and_points() {
        let ch = parse_channel("j=1/2,sigma=+1").unwrap();
        assert_eq!((ch.twice_j, ch.twice_mj, ch.sigma), (1, 1, Sign::Plus));
        let ch = parse_channel("j=3/2, mj=-3/2, sigma=-").unwrap();
        assert_eq!((ch.twice_j, ch.twice_mj, ch.sigma), (3, -3, Sign::Minus));
        assert!(parse_channel("j=1,sigma=+").is_err());
        assert!(parse_channel("j=1/2").is_err());
        assert_eq!(parse_vec3("0, 0,1"), Ok([0.0, 0.0, 1.0]));
        assert!(parse_vec3("0,1").is_err());
        assert_eq!(parse_window("0.5,18"), Ok((0.5, 18.0)));
        assert!(parse_window("3,1").is_err());
    }
}
