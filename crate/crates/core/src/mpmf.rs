//! Multivariate power mean function Γ(x, y) with all limit cases.
//!
//! Every measure and health index in this crate reduces to ratios of these
//! means. The exponent is an extended real: −∞ selects the minimum, 0 the
//! geometric mean, +∞ the maximum, and any other finite value the classical
//! power mean `(Σ xᵢ^y / N)^(1/y)`.

use crate::error::{Error, Result};

/// Exponent threshold above which evaluation switches to the log domain.
const LOG_PATH_EXPONENT: f64 = 8.0;

/// Dynamic-range threshold (max/min) above which evaluation switches to the
/// log domain regardless of exponent.
const LOG_PATH_RANGE: f64 = 1e6;

/// A non-empty vector of strictly positive, finite reals.
///
/// Strict positivity is required because power means are evaluated at
/// exponents `y <= 0`, where zeros make the mean (or its logarithm)
/// undefined. Zeros are rejected rather than clamped; callers that need
/// robustness against zeros apply a slip offset first (see the health-index
/// preparation step).
#[derive(Debug, Clone, PartialEq)]
pub struct PositiveVector(Vec<f64>);

impl PositiveVector {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyVector);
        }
        for (index, &value) in values.iter().enumerate() {
            if !(value > 0.0) || !value.is_finite() {
                return Err(Error::NonPositiveElement { index, value });
            }
        }
        Ok(Self(values))
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }

    /// Natural logs of the elements, in order.
    pub fn ln_values(&self) -> Vec<f64> {
        self.0.iter().map(|v| v.ln()).collect()
    }
}

/// Extended-real exponent of a power mean.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Exponent {
    NegInf,
    Finite(f64),
    PosInf,
}

impl From<f64> for Exponent {
    fn from(y: f64) -> Self {
        if y == f64::NEG_INFINITY {
            Exponent::NegInf
        } else if y == f64::INFINITY {
            Exponent::PosInf
        } else {
            Exponent::Finite(y)
        }
    }
}

/// Power mean Γ(x, y) of a strictly positive vector.
///
/// Case split: minimum at y = −∞, `(Σ xᵢ^y / N)^(1/y)` for finite y ≠ 0,
/// `exp(mean(ln xᵢ))` at y = 0, maximum at y = +∞. The result always lies in
/// `[min(x), max(x)]`.
///
/// For |y| > 8 or dynamic range above 1e6 the evaluation runs in the log
/// domain (shifted log-sum-exp) so wide ranges and large exponents cannot
/// overflow.
pub fn power_mean(x: &PositiveVector, y: Exponent) -> f64 {
    let v = x.as_slice();
    match y {
        Exponent::NegInf => v.iter().copied().fold(f64::INFINITY, f64::min),
        Exponent::PosInf => v.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        Exponent::Finite(y) if y == 0.0 => {
            let mean_ln = v.iter().map(|t| t.ln()).sum::<f64>() / v.len() as f64;
            mean_ln.exp()
        }
        Exponent::Finite(y) => {
            let max = v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let min = v.iter().copied().fold(f64::INFINITY, f64::min);
            if y.abs() > LOG_PATH_EXPONENT || max / min > LOG_PATH_RANGE {
                finite_mean_from_logs(&x.ln_values(), y)
            } else {
                let n = v.len() as f64;
                let s = v.iter().map(|t| t.powf(y)).sum::<f64>() / n;
                s.powf(1.0 / y)
            }
        }
    }
}

/// Power mean evaluated from element logarithms.
///
/// `log_x` must hold the natural logs of a [`PositiveVector`]; the result
/// equals `power_mean` on `exp(log_x)`. Always runs through the shifted
/// log-sum-exp path, so it is safe for any finite exponent and dynamic range.
pub fn log_power_mean(log_x: &[f64], y: Exponent) -> f64 {
    assert!(!log_x.is_empty(), "log_power_mean on empty vector");
    match y {
        Exponent::NegInf => log_x.iter().copied().fold(f64::INFINITY, f64::min).exp(),
        Exponent::PosInf => log_x.iter().copied().fold(f64::NEG_INFINITY, f64::max).exp(),
        Exponent::Finite(y) if y == 0.0 => {
            (log_x.iter().sum::<f64>() / log_x.len() as f64).exp()
        }
        Exponent::Finite(y) => finite_mean_from_logs(log_x, y),
    }
}

/// `(mean(exp(y·log_x)))^(1/y)` via shifted log-sum-exp, finite y != 0.
fn finite_mean_from_logs(log_x: &[f64], y: f64) -> f64 {
    let n = log_x.len() as f64;
    let shift = log_x
        .iter()
        .map(|&l| y * l)
        .fold(f64::NEG_INFINITY, f64::max);
    let sum: f64 = log_x.iter().map(|&l| (y * l - shift).exp()).sum();
    (((shift + sum.ln()) - n.ln()) / y).exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn pv(v: &[f64]) -> PositiveVector {
        PositiveVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn all_equal_vector_gives_the_constant_for_any_exponent() {
        let x = pv(&[5.0, 5.0, 5.0]);
        for y in [
            Exponent::NegInf,
            Exponent::Finite(-3.5),
            Exponent::Finite(0.0),
            Exponent::Finite(1.0),
            Exponent::Finite(7.0),
            Exponent::PosInf,
        ] {
            assert_relative_eq!(power_mean(&x, y), 5.0, max_relative = 1e-14);
        }
    }

    #[test]
    fn two_element_anchors() {
        let x = pv(&[1.0, 4.0]);
        assert_relative_eq!(power_mean(&x, Exponent::Finite(1.0)), 2.5);
        assert_relative_eq!(power_mean(&x, Exponent::Finite(0.0)), 2.0, max_relative = 1e-15);
        assert_eq!(power_mean(&x, Exponent::NegInf), 1.0);
        assert_eq!(power_mean(&x, Exponent::PosInf), 4.0);
    }

    #[test]
    fn rms_is_power_mean_at_two() {
        let x = pv(&[1.0, 2.0, 3.0, 4.0]);
        let rms = (x.as_slice().iter().map(|v| v * v).sum::<f64>() / 4.0).sqrt();
        assert_relative_eq!(power_mean(&x, Exponent::Finite(2.0)), rms, max_relative = 1e-15);
        assert_relative_eq!(rms, 2.7386127875258306, max_relative = 1e-12);
    }

    #[test]
    fn log_path_agrees_with_direct_summation() {
        // Wide dynamic range forces the log path inside power_mean; compare
        // against the plain summation formula, which does not overflow here.
        let x = pv(&[1e-8, 1e8]);
        let direct = ((1e-8f64.powi(4) + 1e8f64.powi(4)) / 2.0).powf(0.25);
        let via_pm = power_mean(&x, Exponent::Finite(4.0));
        let via_logs = log_power_mean(&x.ln_values(), Exponent::Finite(4.0));
        assert_relative_eq!(via_pm, direct, max_relative = 1e-12);
        assert_relative_eq!(via_logs, direct, max_relative = 1e-12);
    }

    #[test]
    fn log_power_mean_trivial_anchors() {
        let x = pv(&[5.0, 5.0, 5.0]);
        assert_relative_eq!(
            log_power_mean(&x.ln_values(), Exponent::Finite(7.0)),
            5.0,
            max_relative = 1e-12
        );
        let y = pv(&[1.0, 4.0]);
        assert_relative_eq!(
            log_power_mean(&y.ln_values(), Exponent::Finite(0.0)),
            2.0,
            max_relative = 1e-12
        );
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(
            PositiveVector::new(vec![]),
            Err(Error::EmptyVector)
        ));
        assert!(matches!(
            PositiveVector::new(vec![1.0, 0.0]),
            Err(Error::NonPositiveElement { index: 1, .. })
        ));
        assert!(matches!(
            PositiveVector::new(vec![-2.0]),
            Err(Error::NonPositiveElement { index: 0, .. })
        ));
        assert!(matches!(
            PositiveVector::new(vec![f64::NAN]),
            Err(Error::NonPositiveElement { .. })
        ));
    }

    #[test]
    fn continuity_near_zero_exponent() {
        let x = pv(&[0.5, 2.0, 100.0, 13.3]);
        let at_eps = power_mean(&x, Exponent::Finite(1e-6));
        let at_zero = power_mean(&x, Exponent::Finite(0.0));
        assert!((at_eps - at_zero).abs() / at_zero <= 1e-5);
    }

    #[test]
    fn bounds_and_monotonicity_spot_checks() {
        let x = pv(&[0.3, 1.0, 7.0, 2.5]);
        let min = 0.3;
        let max = 7.0;
        let mut prev = f64::NEG_INFINITY;
        for y in [-30.0, -8.0, -2.0, -1.0, 0.0, 0.5, 1.0, 2.0, 8.0, 30.0] {
            let g = power_mean(&x, Exponent::Finite(y));
            assert!(g >= min * (1.0 - 1e-12) && g <= max * (1.0 + 1e-12));
            assert!(g >= prev * (1.0 - 1e-12), "not monotone at y={y}");
            prev = g;
        }
    }
}
