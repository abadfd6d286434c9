//! The Lobachevsky function `L(x) = -integral_0^x ln|2 sin z| dz`.
//!
//! `L` is odd and `pi`-periodic, and `L(x) = Cl2(2x) / 2` where `Cl2` is the
//! Clausen function. After reducing to `|x| <= pi/2` we sum the expansion
//!
//! ```text
//! Cl2(t) = t - t ln|t| + sum_{n>=1} zeta(2n) / (n (2n+1)) * t * (t / 2pi)^(2n)
//! ```
//!
//! which converges like `4^-n` on `|t| <= pi`. The Fourier series
//! `L(x) = 1/2 sum sin(2mx) / m^2` converges only like `1/M` and is kept as
//! [`lobachevsky_fourier`].

use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
#[error("Lobachevsky function of non-finite argument {0}")]
pub struct NonFiniteArgument(pub f64);

/// `zeta(2n)` for `n >= 1`.
fn zeta_even(n: u32) -> f64 {
    let p2 = PI * PI;
    match n {
        1 => p2 / 6.0,
        2 => p2 * p2 / 90.0,
        3 => p2 * p2 * p2 / 945.0,
        4 => p2 * p2 * p2 * p2 / 9450.0,
        _ => {
            let s = 2 * n as i32;
            let mut sum = 1.0;
            for k in 2..200 {
                let term = (k as f64).powi(-s);
                sum += term;
                if term < 1e-18 {
                    break;
                }
            }
            sum
        }
    }
}

/// Clausen function on `0 <= t <= pi`.
fn clausen(t: f64) -> f64 {
    if t == 0.0 {
        return 0.0;
    }
    let r2 = (t / (2.0 * PI)).powi(2);
    let mut power = t;
    let mut tail = 0.0;
    for n in 1..=60u32 {
        power *= r2;
        let term = zeta_even(n) / (n as f64 * (2 * n + 1) as f64) * power;
        tail += term;
        if term < 1e-18 {
            break;
        }
    }
    t - t * t.ln() + tail
}

/// `L(x)` to absolute accuracy near machine precision.
pub fn lobachevsky(x: f64) -> Result<f64, NonFiniteArgument> {
    if !x.is_finite() {
        return Err(NonFiniteArgument(x));
    }
    // Reduce to (-pi/2, pi/2].
    let mut y = x - PI * (x / PI).round();
    if y <= -PI / 2.0 {
        y += PI;
    }
    let value = 0.5 * clausen(2.0 * y.abs());
    Ok(if y < 0.0 { -value } else { value })
}

/// Partial sum of `1/2 sum_{m=1}^{terms} sin(2mx) / m^2`, compensated. The
/// truncation error is at most `1 / (2 terms)`.
pub fn lobachevsky_fourier(x: f64, terms: usize) -> Result<f64, NonFiniteArgument> {
    if !x.is_finite() {
        return Err(NonFiniteArgument(x));
    }
    let y = x - PI * (x / PI).round();
    let (mut sum, mut carry) = (0.0f64, 0.0f64);
    for m in 1..=terms {
        let mf = m as f64;
        let term = (2.0 * mf * y).sin() / (mf * mf) - carry;
        let next = sum + term;
        carry = (next - sum) - term;
        sum = next;
    }
    Ok(0.5 * sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::lobachevsky_by_quadrature;

    fn l(x: f64) -> f64 {
        lobachevsky(x).unwrap()
    }

    #[test]
    fn special_values() {
        assert_eq!(l(0.0), 0.0);
        assert!(l(PI / 2.0).abs() < 1e-12);
        assert!((l(PI / 4.0) - 0.457_982_797_088_609_5).abs() < 1e-14);
        // Global maximum.
        assert!((l(PI / 6.0) - 0.507_470_803_204_826_8).abs() < 1e-13);
        assert!(lobachevsky(f64::NAN).is_err());
        assert!(lobachevsky(f64::INFINITY).is_err());
    }

    #[test]
    fn odd_periodic_and_duplication() {
        for i in 0..100 {
            let x = -4.0 + 8.0 * i as f64 / 99.0;
            assert!((l(-x) + l(x)).abs() < 1e-12);
            assert!((l(x + PI) - l(x)).abs() < 1e-12);
            assert!((0.5 * l(2.0 * x) - l(x) - l(x + PI / 2.0)).abs() < 1e-11);
        }
    }

    #[test]
    fn agrees_with_quadrature_of_definition() {
        for i in 1..40 {
            let x = PI * i as f64 / 40.0;
            let q = lobachevsky_by_quadrature(x);
            assert!((l(x) - q).abs() < 1e-9, "x={x}: {} vs {q}", l(x));
        }
    }

    #[test]
    fn fourier_partial_sum_converges() {
        for &x in &[0.3, PI / 4.0, 1.2, 2.5] {
            let f = lobachevsky_fourier(x, 200_000).unwrap();
            assert!((f - l(x)).abs() < 1e-5, "x={x}");
        }
    }
}
