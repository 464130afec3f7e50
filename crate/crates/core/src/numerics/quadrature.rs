//! Quadrature rules: Gauss-Legendre, adaptive Gauss-Kronrod, double-exponential and
//! composite rules on uniform grids.

use num_complex::Complex64;

use crate::consts::{ADAPTIVE_QUAD_MAX_INTERVALS, DE_QUAD_MAX_LEVELS};
use crate::error::{Error, Result};

/// Nodes and weights of the `n`-point Gauss-Legendre rule on [-1, 1].
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n > 0, "Gauss-Legendre rule needs at least one node");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        // Tricomi initial guess, refined by Newton on P_n.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

const GK_XK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const GK_WK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const GK_WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn gk15<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> (Complex64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = fc * GK_WK[7];
    let mut gauss = fc * GK_WG[3];
    for j in 0..7 {
        let dx = h * GK_XK[j];
        let s = f(c - dx) + f(c + dx);
        kron += s * GK_WK[j];
        if j % 2 == 1 {
            gauss += s * GK_WG[j / 2];
        }
    }
    (kron * h, ((kron - gauss) * h).norm())
}

/// Result of an adaptive quadrature: value and estimated absolute error.
#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: Complex64,
    pub error: f64,
    pub intervals: usize,
}

/// Globally adaptive Gauss-Kronrod (7/15) quadrature of a complex integrand on `[a, b]`.
pub fn adaptive_gk<F: Fn(f64) -> Complex64>(
    f: F,
    a: f64,
    b: f64,
    rel_tol: f64,
    abs_tol: f64,
) -> Result<QuadResult> {
    let mut segs: Vec<(f64, f64, Complex64, f64)> = Vec::new();
    let (v, e) = gk15(&f, a, b);
    segs.push((a, b, v, e));
    loop {
        let total: Complex64 = segs.iter().map(|s| s.2).sum();
        let err: f64 = segs.iter().map(|s| s.3).sum();
        if !total.re.is_finite() || !total.im.is_finite() {
            return Err(Error::NonConvergence {
                op: "adaptive_gk",
                detail: "non-finite integrand".into(),
            });
        }
        if err <= abs_tol.max(rel_tol * total.norm()) {
            return Ok(QuadResult {
                value: total,
                error: err,
                intervals: segs.len(),
            });
        }
        if segs.len() >= ADAPTIVE_QUAD_MAX_INTERVALS {
            return Err(Error::NonConvergence {
                op: "adaptive_gk",
                detail: format!(
                    "{} intervals, error estimate {:.3e} vs value {:.3e}",
                    segs.len(),
                    err,
                    total.norm()
                ),
            });
        }
        let (idx, _) = segs
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.total_cmp(&y.1 .3))
            .expect("non-empty");
        let (lo, hi, _, _) = segs.swap_remove(idx);
        let mid = 0.5 * (lo + hi);
        let (v1, e1) = gk15(&f, lo, mid);
        let (v2, e2) = gk15(&f, mid, hi);
        segs.push((lo, mid, v1, e1));
        segs.push((mid, hi, v2, e2));
    }
}

/// Adaptive quadrature over `[a, inf)` using `t = a + s / (1 - s)`.
pub fn adaptive_gk_semi_infinite<F: Fn(f64) -> Complex64>(
    f: F,
    a: f64,
    rel_tol: f64,
    abs_tol: f64,
) -> Result<QuadResult> {
    let g = |s: f64| {
        if s >= 1.0 {
            return Complex64::new(0.0, 0.0);
        }
        let one_minus = 1.0 - s;
        let t = a + s / one_minus;
        let v = f(t) / (one_minus * one_minus);
        if v.re.is_finite() && v.im.is_finite() {
            v
        } else {
            Complex64::new(0.0, 0.0)
        }
    };
    adaptive_gk(g, 0.0, 1.0, rel_tol, abs_tol)
}

/// Exp-sinh quadrature on `(0, inf)`: `t = exp(pi/2 sinh u)`.
///
/// Suited to integrands with algebraic endpoint behavior at 0 and exponential decay.
pub fn exp_sinh<F: Fn(f64) -> Complex64>(f: F, rel_tol: f64) -> Result<Complex64> {
    let half_pi = std::f64::consts::FRAC_PI_2;
    let term = |u: f64| -> Complex64 {
        let t = (half_pi * u.sinh()).exp();
        if t == 0.0 || !t.is_finite() {
            return Complex64::new(0.0, 0.0);
        }
        let w = t * half_pi * u.cosh();
        let v = f(t) * w;
        if v.re.is_finite() && v.im.is_finite() {
            v
        } else {
            Complex64::new(0.0, 0.0)
        }
    };
    // Truncation: sum until terms are negligible in both directions.
    let mut h = 0.5;
    let mut sum = term(0.0);
    let mut k = 1;
    let sweep = |h: f64, start: usize, step: usize, acc: &mut Complex64| {
        let mut k = start;
        let mut small = 0;
        loop {
            let u = k as f64 * h;
            if u > 6.5 {
                break;
            }
            let a = term(u);
            let b = term(-u);
            *acc += a + b;
            if (a.norm() + b.norm()) <= 1e-18 * acc.norm().max(1e-300) {
                small += 1;
                if small >= 3 {
                    break;
                }
            } else {
                small = 0;
            }
            k += step;
        }
    };
    sweep(h, k, 1, &mut sum);
    let mut estimate = sum * h;
    for _level in 0..DE_QUAD_MAX_LEVELS {
        h *= 0.5;
        k = 1;
        let mut odd = Complex64::new(0.0, 0.0);
        sweep(h, k, 2, &mut odd);
        sum += odd;
        let next = sum * h;
        let diff = (next - estimate).norm();
        estimate = next;
        if diff <= rel_tol * estimate.norm() {
            return Ok(estimate);
        }
    }
    Err(Error::NonConvergence {
        op: "exp_sinh",
        detail: format!("no convergence after {DE_QUAD_MAX_LEVELS} levels, value {estimate}"),
    })
}

/// Composite Simpson rule for uniformly sampled data (3/8 rule closes an even count).
pub fn simpson_uniform(values: &[f64], h: f64) -> f64 {
    let n = values.len();
    match n {
        0 | 1 => 0.0,
        2 => 0.5 * h * (values[0] + values[1]),
        3 => h / 3.0 * (values[0] + 4.0 * values[1] + values[2]),
        _ => {
            let (simpson_end, tail) = if (n - 1) % 2 == 0 {
                (n - 1, 0.0)
            } else {
                let m = n - 4;
                let t = 3.0 * h / 8.0
                    * (values[m] + 3.0 * values[m + 1] + 3.0 * values[m + 2] + values[m + 3]);
                (m, t)
            };
            let mut s = values[0] + values[simpson_end];
            for (i, v) in values.iter().enumerate().take(simpson_end).skip(1) {
                s += if i % 2 == 1 { 4.0 * v } else { 2.0 * v };
            }
            s * h / 3.0 + tail
        }
    }
}

/// Simpson rule for complex samples.
pub fn simpson_uniform_complex(values: &[Complex64], h: f64) -> Complex64 {
    let re: Vec<f64> = values.iter().map(|v| v.re).collect();
    let im: Vec<f64> = values.iter().map(|v| v.im).collect();
    Complex64::new(simpson_uniform(&re, h), simpson_uniform(&im, h))
}
