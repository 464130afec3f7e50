//! Finite-difference derivatives on uniform grids.

use num_complex::Complex64;

/// First derivative, 4th-order central in the interior with one-sided 4th-order closure
/// at both ends. Requires at least 5 samples.
pub fn derivative(values: &[Complex64], h: f64) -> Vec<Complex64> {
    let n = values.len();
    assert!(n >= 5, "derivative stencil needs at least 5 samples");
    let f = values;
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    for i in 2..n - 2 {
        out[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * h);
    }
    let fwd = |i: usize| {
        (-25.0 * f[i] + 48.0 * f[i + 1] - 36.0 * f[i + 2] + 16.0 * f[i + 3] - 3.0 * f[i + 4])
            / (12.0 * h)
    };
    let skew = |i: usize| {
        (-3.0 * f[i - 1] - 10.0 * f[i] + 18.0 * f[i + 1] - 6.0 * f[i + 2] + f[i + 3]) / (12.0 * h)
    };
    let bwd = |i: usize| {
        (25.0 * f[i] - 48.0 * f[i - 1] + 36.0 * f[i - 2] - 16.0 * f[i - 3] + 3.0 * f[i - 4])
            / (12.0 * h)
    };
    let skew_back = |i: usize| {
        (3.0 * f[i + 1] + 10.0 * f[i] - 18.0 * f[i - 1] + 6.0 * f[i - 2] - f[i - 3]) / (12.0 * h)
    };
    out[0] = fwd(0);
    out[1] = skew(1);
    out[n - 1] = bwd(n - 1);
    out[n - 2] = skew_back(n - 2);
    out
}

/// Real-valued convenience wrapper around [`derivative`].
pub fn derivative_real(values: &[f64], h: f64) -> Vec<f64> {
    let c: Vec<Complex64> = values.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    derivative(&c, h).into_iter().map(|v| v.re).collect()
}

/// Second derivative, 4th-order central in the interior, 4th-order one-sided at the ends.
/// Requires at least 6 samples.
pub fn second_derivative(values: &[Complex64], h: f64) -> Vec<Complex64> {
    let n = values.len();
    assert!(n >= 6, "second-derivative stencil needs at least 6 samples");
    let f = values;
    let h2 = h * h;
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    for i in 2..n - 2 {
        out[i] = (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2])
            / (12.0 * h2);
    }
    let fwd = |i: usize| {
        (45.0 * f[i] - 154.0 * f[i + 1] + 214.0 * f[i + 2] - 156.0 * f[i + 3] + 61.0 * f[i + 4]
            - 10.0 * f[i + 5])
            / (12.0 * h2)
    };
    let skew = |i: usize| {
        (10.0 * f[i - 1] - 15.0 * f[i] - 4.0 * f[i + 1] + 14.0 * f[i + 2] - 6.0 * f[i + 3]
            + f[i + 4])
            / (12.0 * h2)
    };
    let bwd = |i: usize| {
        (45.0 * f[i] - 154.0 * f[i - 1] + 214.0 * f[i - 2] - 156.0 * f[i - 3] + 61.0 * f[i - 4]
            - 10.0 * f[i - 5])
            / (12.0 * h2)
    };
    let skew_back = |i: usize| {
        (10.0 * f[i + 1] - 15.0 * f[i] - 4.0 * f[i - 1] + 14.0 * f[i - 2] - 6.0 * f[i - 3]
            + f[i - 4])
            / (12.0 * h2)
    };
    out[0] = fwd(0);
    out[1] = skew(1);
    out[n - 1] = bwd(n - 1);
    out[n - 2] = skew_back(n - 2);
    out
}

/// Derivative of a smooth function at a point by a 4th-order central difference with step `h`.
pub fn central_derivative<F: Fn(f64) -> Complex64>(f: F, x: f64, h: f64) -> Complex64 {
    (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h)
}
