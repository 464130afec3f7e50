//! Generalized Laguerre polynomials.

use crate::scalar::Real;

/// `L_n^α(x)` by the three-term recurrence.
pub fn assoc_laguerre<T: Real>(n: usize, alpha: T, x: T) -> T {
    let mut prev = T::one();
    if n == 0 {
        return prev;
    }
    let mut cur = T::one() + alpha - x;
    for k in 1..n {
        let kf = T::int(k as i64);
        let next = ((T::two() * kf + T::one() + alpha - x) * cur - (kf + alpha) * prev)
            / (kf + T::one());
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_orders_match_closed_forms() {
        let (a, x) = (0.5f64, 1.0f64);
        assert_eq!(assoc_laguerre(0, a, x), 1.0);
        assert!((assoc_laguerre(1, a, x) - 0.5).abs() < 1e-15);
        let quad = (a + 1.0) * (a + 2.0) / 2.0 - (a + 2.0) * x + x * x / 2.0;
        assert!((assoc_laguerre(2, a, x) - quad).abs() < 1e-15);
        assert!((assoc_laguerre(2, a, x) + 0.125).abs() < 1e-15);
    }

    #[test]
    fn single_precision() {
        assert!((assoc_laguerre(2, 0.5f32, 1.0f32) + 0.125).abs() < 1e-6);
    }
}
