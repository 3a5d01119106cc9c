//! Two-sample Kolmogorov-Smirnov statistic with the asymptotic critical
//! value `c(alpha) * sqrt((n+m)/(n*m))`, `c(alpha) = sqrt(-ln(alpha/2)/2)`,
//! and KS-screened path selection.

use serde::{Deserialize, Serialize};

use super::gbm::{generate_price_path, PricePath, PricePathConfig};
use super::SynthError;
use crate::rng;

/// Result of a two-sample KS comparison.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KsOutcome {
    /// `sup_x |F_a(x) - F_b(x)|`, in [0, 1].
    pub d: f64,
    /// Critical value at the requested level.
    pub threshold: f64,
    /// True when `d <= threshold`.
    pub accept: bool,
}

/// Two-sample KS test at level `alpha`. Errors on empty samples.
pub fn ks_statistic(
    sample_a: &[f64],
    sample_b: &[f64],
    alpha: f64,
) -> Result<KsOutcome, SynthError> {
    if sample_a.is_empty() {
        return Err(SynthError::EmptySample("sample_a"));
    }
    if sample_b.is_empty() {
        return Err(SynthError::EmptySample("sample_b"));
    }
    let mut a = sample_a.to_vec();
    let mut b = sample_b.to_vec();
    a.sort_unstable_by(|x, y| x.partial_cmp(y).expect("finite sample"));
    b.sort_unstable_by(|x, y| x.partial_cmp(y).expect("finite sample"));
    let (n, m) = (a.len(), b.len());
    // Walk the merged order, tracking both empirical CDFs.
    let mut i = 0usize;
    let mut j = 0usize;
    let mut d = 0.0f64;
    while i < n && j < m {
        let x = a[i].min(b[j]);
        while i < n && a[i] <= x {
            i += 1;
        }
        while j < m && b[j] <= x {
            j += 1;
        }
        let diff = (i as f64 / n as f64 - j as f64 / m as f64).abs();
        d = d.max(diff);
    }
    let c = (-(alpha / 2.0).ln() / 2.0).sqrt();
    let threshold = c * (((n + m) as f64) / ((n * m) as f64)).sqrt();
    Ok(KsOutcome {
        d,
        threshold,
        accept: d <= threshold,
    })
}

/// A path chosen by KS screening against a reference sample.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SelectedPath {
    pub path: PricePath,
    /// KS distance of the selected candidate's returns to the reference.
    pub d: f64,
    /// Zero-based index of the accepted candidate.
    pub candidate_index: usize,
    /// Set when no candidate passed and the minimum-D candidate was
    /// returned instead.
    pub fallback: bool,
}

/// Generate up to `cfg.candidates` paths and return the first whose monthly
/// log returns pass the KS screen against `reference`; if none pass, return
/// the minimum-D candidate flagged as a fallback. Deterministic per seed.
pub fn select_path(
    cfg: &PricePathConfig,
    reference: &[f64],
    seed: u64,
) -> Result<SelectedPath, SynthError> {
    cfg.validate()?;
    if reference.is_empty() {
        return Err(SynthError::EmptySample("reference"));
    }
    let mut best: Option<SelectedPath> = None;
    for i in 0..cfg.candidates {
        let path = generate_price_path(cfg, rng::derive_seed(seed, "select-path", i as u64))?;
        let outcome = ks_statistic(&path.log_returns(), reference, cfg.ks_alpha)?;
        if outcome.accept {
            return Ok(SelectedPath {
                path,
                d: outcome.d,
                candidate_index: i,
                fallback: false,
            });
        }
        if best.as_ref().is_none_or(|b| outcome.d < b.d) {
            best = Some(SelectedPath {
                path,
                d: outcome.d,
                candidate_index: i,
                fallback: true,
            });
        }
    }
    Ok(best.expect("candidates >= 1"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn identical_samples_give_zero() {
        let xs: Vec<f64> = (0..100).map(|i| i as f64 * 0.1).collect();
        let out = ks_statistic(&xs, &xs, 0.05).unwrap();
        assert_eq!(out.d, 0.0);
        assert!(out.accept);
    }

    #[test]
    fn disjoint_supports_give_one() {
        let a = vec![0.0; 50];
        let b = vec![1.0; 50];
        let out = ks_statistic(&a, &b, 0.05).unwrap();
        assert_eq!(out.d, 1.0);
        assert!(!out.accept);
    }

    #[test]
    fn empty_sample_errors() {
        assert!(ks_statistic(&[], &[1.0], 0.05).is_err());
        assert!(ks_statistic(&[1.0], &[], 0.05).is_err());
    }

    #[test]
    fn symmetric_in_arguments() {
        let mut stream = rng::from_seed(3);
        let a: Vec<f64> = (0..80).map(|_| stream.random::<f64>()).collect();
        let b: Vec<f64> = (0..120).map(|_| stream.random::<f64>() * 1.2).collect();
        let ab = ks_statistic(&a, &b, 0.05).unwrap();
        let ba = ks_statistic(&b, &a, 0.05).unwrap();
        assert!((ab.d - ba.d).abs() < 1e-15);
    }

    #[test]
    fn invariant_under_common_monotone_transform() {
        let mut stream = rng::from_seed(4);
        let a: Vec<f64> = (0..64).map(|_| stream.random::<f64>()).collect();
        let b: Vec<f64> = (0..64).map(|_| stream.random::<f64>()).collect();
        let d0 = ks_statistic(&a, &b, 0.05).unwrap().d;
        let fa: Vec<f64> = a.iter().map(|x| (3.0 * x + 1.0).exp()).collect();
        let fb: Vec<f64> = b.iter().map(|x| (3.0 * x + 1.0).exp()).collect();
        let d1 = ks_statistic(&fa, &fb, 0.05).unwrap().d;
        assert!((d0 - d1).abs() < 1e-15);
    }

    #[test]
    fn hand_checked_distance() {
        // F_a jumps at {1,2}, F_b at {2,3}: sup gap is 0.5 just below 2.
        let out = ks_statistic(&[1.0, 2.0], &[2.0, 3.0], 0.05).unwrap();
        assert!((out.d - 0.5).abs() < 1e-15);
    }

    #[test]
    fn select_path_deterministic_and_flags_mismatch() {
        let cfg = PricePathConfig::default();
        let reference = vec![0.5; 200];
        let a = select_path(&cfg, &reference, 10).unwrap();
        let b = select_path(&cfg, &reference, 10).unwrap();
        assert_eq!(a, b);
        assert!(a.fallback, "constant reference cannot be matched");
    }
}
