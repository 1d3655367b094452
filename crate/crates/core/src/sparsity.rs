//! Six classical sparsity measures, each computed along two independently
//! coded paths: the direct textbook definition and the power-mean-ratio
//! reformulation. Both values are always returned so callers can cross-check
//! them; the dual-path gap doubles as an online correctness monitor.

use crate::error::{Error, Result};
use crate::mpmf::{log_power_mean, power_mean, Exponent, PositiveVector};

/// Euler-Mascheroni constant.
pub const EULER_MASCHERONI: f64 = 0.577_215_664_901_532_9;

/// Denominator floor used when normalising the dual-path gap.
const GAP_DENOMINATOR_FLOOR: f64 = 1e-300;

/// A strictly positive squared-envelope sequence of at least two samples.
///
/// Positivity is all the type enforces: the same measures are applied to raw
/// positive vectors in the attribute laboratory.
#[derive(Debug, Clone, PartialEq)]
pub struct EnvelopeVector(Vec<f64>);

impl EnvelopeVector {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::TooFewElements {
                needed: 2,
                got: values.len(),
            });
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

    fn positive(&self) -> PositiveVector {
        PositiveVector::new(self.0.clone()).expect("envelope invariants imply a positive vector")
    }
}

/// Value of a measure along both computation paths.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureResult {
    /// Textbook-definition value.
    pub direct_value: f64,
    /// Power-mean-ratio value.
    pub mpmf_value: f64,
    /// `|direct − mpmf| / max(|direct|, 1e-300)`.
    pub relative_gap: f64,
}

impl MeasureResult {
    fn new(direct_value: f64, mpmf_value: f64) -> Self {
        let relative_gap =
            (direct_value - mpmf_value).abs() / direct_value.abs().max(GAP_DENOMINATOR_FLOOR);
        Self {
            direct_value,
            mpmf_value,
            relative_gap,
        }
    }
}

/// Exponent pair for the Lp/Lq norm index and the pq-mean.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PqParams {
    pub p: f64,
    pub q: f64,
}

impl PqParams {
    pub fn new(p: f64, q: f64) -> Self {
        Self { p, q }
    }

    fn validate_for_lp_lq(&self) -> Result<()> {
        if !(self.p > 0.0 && self.q >= 0.0 && self.p > self.q) {
            return Err(Error::InvalidParameter(format!(
                "Lp/Lq norm index needs p > q >= 0 and p > 0, got p={}, q={}",
                self.p, self.q
            )));
        }
        Ok(())
    }

    fn validate_for_pq_mean(&self) -> Result<()> {
        if !(self.p > 0.0 && self.p <= 1.0 && self.q > 1.0) {
            return Err(Error::InvalidParameter(format!(
                "pq-mean needs 0 < p <= 1 and q > 1, got p={}, q={}",
                self.p, self.q
            )));
        }
        Ok(())
    }
}

/// Spectral kurtosis: normalized 4th-order moment of the envelope, equal to
/// `[Γ(X,2)/Γ(X,1)]²` on the squared envelope.
pub fn spectral_kurtosis(x: &EnvelopeVector) -> MeasureResult {
    let v = x.as_slice();
    let n = v.len() as f64;

    let m2: f64 = v.iter().map(|t| t * t).sum::<f64>() / n;
    let m1: f64 = v.iter().sum::<f64>() / n;
    let direct = m2 / (m1 * m1);

    let p = x.positive();
    let ratio = power_mean(&p, Exponent::Finite(2.0)) / power_mean(&p, Exponent::Finite(1.0));
    MeasureResult::new(direct, ratio * ratio)
}

/// Constant offset `(p!)^{1/p} / (q!)^{1/q}` of the Lp/Lq norm index, with
/// `(0!)^{1/0}` read as its limit `e^{-γ}`. Non-integer factorials use the
/// gamma function, `p! = Γ_E(p+1)`.
pub fn lp_lq_offset(params: PqParams) -> Result<f64> {
    params.validate_for_lp_lq()?;
    let PqParams { p, q } = params;
    let num = statrs::function::gamma::gamma(p + 1.0).powf(1.0 / p);
    let den = if q == 0.0 {
        (-EULER_MASCHERONI).exp()
    } else {
        statrs::function::gamma::gamma(q + 1.0).powf(1.0 / q)
    };
    Ok(num / den)
}

/// Spectral Lp/Lq norm index.
///
/// For q > 0 the direct path is the norm quotient with the `N^(1/q - 1/p)`
/// prefactor; for q = 0 the denominator is the geometric mean with the
/// `N^(-1/p)` prefactor. The power-mean path is `Γ(X,p)/Γ(X,q)` (with
/// `Γ(X,0)` realised through logs) minus the same constant offset.
pub fn lp_lq_norm_index(x: &EnvelopeVector, params: PqParams) -> Result<MeasureResult> {
    params.validate_for_lp_lq()?;
    let PqParams { p, q } = params;
    let v = x.as_slice();
    let n = v.len() as f64;
    let offset = lp_lq_offset(params)?;

    let lp_norm = v.iter().map(|t| t.powf(p)).sum::<f64>().powf(1.0 / p);
    let direct = if q > 0.0 {
        let lq_norm = v.iter().map(|t| t.powf(q)).sum::<f64>().powf(1.0 / q);
        n.powf(1.0 / q - 1.0 / p) * lp_norm / lq_norm - offset
    } else {
        // N-th root taken elementwise before multiplying keeps the running
        // product in range for long envelopes.
        let geo: f64 = v.iter().map(|t| t.powf(1.0 / n)).product();
        n.powf(-1.0 / p) * lp_norm / geo - offset
    };

    let pos = x.positive();
    let ln_x = pos.ln_values();
    let denominator = if q > 0.0 {
        power_mean(&pos, Exponent::Finite(q))
    } else {
        log_power_mean(&ln_x, Exponent::Finite(0.0))
    };
    let mpmf = power_mean(&pos, Exponent::Finite(p)) / denominator - offset;

    Ok(MeasureResult::new(direct, mpmf))
}

/// pq-mean: `-Γ(X,p)/Γ(X,q)` with 0 < p <= 1 < q.
pub fn pq_mean(x: &EnvelopeVector, params: PqParams) -> Result<MeasureResult> {
    params.validate_for_pq_mean()?;
    let PqParams { p, q } = params;
    let v = x.as_slice();
    let n = v.len() as f64;

    let mp = (v.iter().map(|t| t.powf(p)).sum::<f64>() / n).powf(1.0 / p);
    let mq = (v.iter().map(|t| t.powf(q)).sum::<f64>() / n).powf(-1.0 / q);
    let direct = -mp * mq;

    let pos = x.positive();
    let mpmf = -power_mean(&pos, Exponent::Finite(p)) / power_mean(&pos, Exponent::Finite(q));

    Ok(MeasureResult::new(direct, mpmf))
}

/// Smoothness index: geometric mean over arithmetic mean, in (0, 1].
pub fn smoothness_index(x: &EnvelopeVector) -> MeasureResult {
    let v = x.as_slice();
    let n = v.len() as f64;

    let geo: f64 = v.iter().map(|t| t.powf(1.0 / n)).product();
    let am = v.iter().sum::<f64>() / n;
    let direct = geo / am;

    let pos = x.positive();
    let mpmf = log_power_mean(&pos.ln_values(), Exponent::Finite(0.0))
        / power_mean(&pos, Exponent::Finite(1.0));

    MeasureResult::new(direct, mpmf)
}

/// Spectral negative entropy: `⟨(X/⟨X⟩)·ln(X/⟨X⟩)⟩`, non-negative.
///
/// The power-mean path builds the transformed vector with Γ(X,1) and takes
/// its arithmetic mean; the trailing division by Γ(1,1) is identically one.
pub fn spectral_negative_entropy(x: &EnvelopeVector) -> MeasureResult {
    let v = x.as_slice();
    let n = v.len() as f64;

    let mean = v.iter().sum::<f64>() / n;
    let direct = v
        .iter()
        .map(|&t| {
            let r = t / mean;
            r * r.ln()
        })
        .sum::<f64>()
        / n;

    let pos = x.positive();
    let gamma1 = power_mean(&pos, Exponent::Finite(1.0));
    let transformed: Vec<f64> = v
        .iter()
        .map(|&t| {
            let r = t / gamma1;
            r * r.ln()
        })
        .collect();
    // Γ(·, 1) of the (signed) transformed vector is its arithmetic mean.
    let mpmf = transformed.iter().sum::<f64>() / n;

    MeasureResult::new(direct, mpmf)
}

/// Evaluates SNE through the SNE/SI identity:
/// `Γ(X·ln(X/Γ(X,1)), 1) / [Γ(X,1)·(Γ(ln X,1) − ln Γ(X,1))] · ln(SI)`.
///
/// Singular on all-equal vectors where `ln(SI) = 0`.
pub fn sne_via_si_identity(x: &EnvelopeVector) -> Result<f64> {
    let v = x.as_slice();
    let n = v.len() as f64;
    let min = v.iter().copied().fold(f64::INFINITY, f64::min);
    let max = v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if min == max {
        return Err(Error::SingularIdentity);
    }

    let pos = x.positive();
    let ln_x = pos.ln_values();
    let gamma1 = power_mean(&pos, Exponent::Finite(1.0));
    let mean_ln = ln_x.iter().sum::<f64>() / n;
    let ln_si = mean_ln - gamma1.ln();
    if ln_si == 0.0 {
        return Err(Error::SingularIdentity);
    }

    let numerator = v
        .iter()
        .map(|&t| t * (t / gamma1).ln())
        .sum::<f64>()
        / n;
    let denominator = gamma1 * (mean_ln - gamma1.ln());
    Ok(numerator / denominator * ln_si)
}

/// Gini index via the half-sample-corrected ordered weights, in [0, 1).
///
/// The vector is sorted ascending; only that order together with weights
/// `(N - n + 0.5)/N` gives 0 on constant vectors and `1 - 1/N` on one-hot
/// vectors.
pub fn gini_index(x: &EnvelopeVector) -> MeasureResult {
    let mut sorted = x.as_slice().to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("envelope elements are finite"));
    let n = sorted.len() as f64;

    let l1: f64 = sorted.iter().sum();
    let direct = 1.0
        - 2.0
            * sorted
                .iter()
                .enumerate()
                .map(|(i, &t)| (t / l1) * ((n - (i as f64 + 1.0) + 0.5) / n))
                .sum::<f64>();

    let weighted: Vec<f64> = sorted
        .iter()
        .enumerate()
        .map(|(i, &t)| 2.0 * ((n - (i as f64 + 1.0) + 0.5) / n) * t)
        .collect();
    let weighted = PositiveVector::new(weighted).expect("weights and elements are positive");
    let pos = x.positive();
    let mpmf = 1.0
        - power_mean(&weighted, Exponent::Finite(1.0)) / power_mean(&pos, Exponent::Finite(1.0));

    MeasureResult::new(direct, mpmf)
}
