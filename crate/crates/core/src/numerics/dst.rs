//! Type-I discrete sine transform built on an FFT.

use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

/// Planned DST-I of a fixed length: `X_k = sum_n x_n sin(pi (n+1)(k+1)/(N+1))`.
pub struct DstI {
    len: usize,
    fft: Arc<dyn Fft<f64>>,
}

impl DstI {
    pub fn new(len: usize) -> Self {
        let mut planner = FftPlanner::new();
        let fft = planner.plan_fft_forward(2 * (len + 1));
        Self { len, fft }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Unnormalized transform; applying it twice multiplies by `(N+1)/2`.
    pub fn transform(&self, x: &mut [f64]) {
        assert_eq!(x.len(), self.len);
        let n = self.len;
        let m = 2 * (n + 1);
        let mut buf = vec![Complex64::new(0.0, 0.0); m];
        for i in 0..n {
            buf[i + 1] = Complex64::new(x[i], 0.0);
            buf[m - 1 - i] = Complex64::new(-x[i], 0.0);
        }
        self.fft.process(&mut buf);
        for k in 0..n {
            x[k] = -0.5 * buf[k + 1].im;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_direct_sum() {
        let n = 9;
        let x: Vec<f64> = (0..n).map(|i| (i as f64 * 0.37).cos() + 0.1 * i as f64).collect();
        let mut y = x.clone();
        DstI::new(n).transform(&mut y);
        for k in 0..n {
            let direct: f64 = (0..n)
                .map(|i| {
                    x[i] * (std::f64::consts::PI * ((i + 1) * (k + 1)) as f64 / (n + 1) as f64)
                        .sin()
                })
                .sum();
            assert!((y[k] - direct).abs() < 1e-12);
        }
    }

    #[test]
    fn inverse_up_to_scale() {
        let n = 16;
        let x: Vec<f64> = (0..n).map(|i| i as f64 * 0.5 - 3.0).collect();
        let dst = DstI::new(n);
        let mut y = x.clone();
        dst.transform(&mut y);
        dst.transform(&mut y);
        let s = 2.0 / (n + 1) as f64;
        for i in 0..n {
            assert!((y[i] * s - x[i]).abs() < 1e-12);
        }
    }
}
