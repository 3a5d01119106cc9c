//! Small statistics toolbox shared across modules: moments, correlation,
//! ordinary least squares, a logistic fit, and normal / Student-t helpers
//! backed by `statrs`.

use statrs::distribution::{ContinuousCDF, Normal, StudentsT};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum StatsError {
    #[error("need at least {need} observations, got {got}")]
    TooFew { need: usize, got: usize },
    #[error("degenerate variance in {0}")]
    ZeroVariance(&'static str),
    #[error("collinear or singular design matrix")]
    Singular,
    #[error("logistic fit did not converge (separation or flat likelihood)")]
    NoConvergence,
}

pub fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Sample variance (n-1 denominator).
pub fn variance(xs: &[f64]) -> f64 {
    let m = mean(xs);
    xs.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / (xs.len() - 1) as f64
}

pub fn sd(xs: &[f64]) -> f64 {
    variance(xs).sqrt()
}

/// Sample skewness (population-style, n denominator).
pub fn skewness(xs: &[f64]) -> f64 {
    let m = mean(xs);
    let n = xs.len() as f64;
    let m2 = xs.iter().map(|x| (x - m).powi(2)).sum::<f64>() / n;
    let m3 = xs.iter().map(|x| (x - m).powi(3)).sum::<f64>() / n;
    if m2 <= 0.0 {
        0.0
    } else {
        m3 / m2.powf(1.5)
    }
}

/// Excess kurtosis (population-style, n denominator).
pub fn excess_kurtosis(xs: &[f64]) -> f64 {
    let m = mean(xs);
    let n = xs.len() as f64;
    let m2 = xs.iter().map(|x| (x - m).powi(2)).sum::<f64>() / n;
    let m4 = xs.iter().map(|x| (x - m).powi(4)).sum::<f64>() / n;
    if m2 <= 0.0 {
        0.0
    } else {
        m4 / (m2 * m2) - 3.0
    }
}

/// Pearson correlation.
pub fn pearson(xs: &[f64], ys: &[f64]) -> Result<f64, StatsError> {
    assert_eq!(xs.len(), ys.len());
    if xs.len() < 2 {
        return Err(StatsError::TooFew {
            need: 2,
            got: xs.len(),
        });
    }
    let (mx, my) = (mean(xs), mean(ys));
    let mut sxx = 0.0;
    let mut syy = 0.0;
    let mut sxy = 0.0;
    for (x, y) in xs.iter().zip(ys) {
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
        sxy += (x - mx) * (y - my);
    }
    if sxx <= 0.0 {
        return Err(StatsError::ZeroVariance("x"));
    }
    if syy <= 0.0 {
        return Err(StatsError::ZeroVariance("y"));
    }
    Ok(sxy / (sxx * syy).sqrt())
}

/// Sample autocorrelation at `lag` (biased normalization by total sum of
/// squares, the standard time-series estimator).
pub fn autocorr(xs: &[f64], lag: usize) -> Result<f64, StatsError> {
    if xs.len() < lag + 2 {
        return Err(StatsError::TooFew {
            need: lag + 2,
            got: xs.len(),
        });
    }
    let m = mean(xs);
    let denom: f64 = xs.iter().map(|x| (x - m) * (x - m)).sum();
    if denom <= 0.0 {
        return Err(StatsError::ZeroVariance("series"));
    }
    let num: f64 = xs[..xs.len() - lag]
        .iter()
        .zip(&xs[lag..])
        .map(|(a, b)| (a - m) * (b - m))
        .sum();
    Ok(num / denom)
}

/// Standard normal quantile.
pub fn normal_quantile(p: f64) -> f64 {
    Normal::standard().inverse_cdf(p)
}

/// Standard normal CDF.
pub fn normal_cdf(x: f64) -> f64 {
    Normal::standard().cdf(x)
}

/// Two-sided p-value from a t statistic with `df` degrees of freedom.
pub fn t_two_sided_p(t: f64, df: f64) -> f64 {
    if !t.is_finite() {
        return 0.0;
    }
    let dist = StudentsT::new(0.0, 1.0, df).expect("valid df");
    2.0 * dist.cdf(-t.abs())
}

/// One-sided (upper-tail) p-value from a t statistic.
pub fn t_upper_p(t: f64, df: f64) -> f64 {
    let dist = StudentsT::new(0.0, 1.0, df).expect("valid df");
    1.0 - dist.cdf(t)
}

/// Simple OLS of y on x with intercept. Returns (intercept, slope,
/// se_intercept, se_slope, residual variance).
pub struct Ols {
    pub intercept: f64,
    pub slope: f64,
    pub se_intercept: f64,
    pub se_slope: f64,
    pub sigma2: f64,
    pub n: usize,
}

pub fn ols(xs: &[f64], ys: &[f64]) -> Result<Ols, StatsError> {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    if n < 3 {
        return Err(StatsError::TooFew { need: 3, got: n });
    }
    let mx = mean(xs);
    let my = mean(ys);
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    if sxx <= 0.0 {
        return Err(StatsError::ZeroVariance("regressor"));
    }
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let rss: f64 = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| {
            let e = y - intercept - slope * x;
            e * e
        })
        .sum();
    let sigma2 = rss / (n as f64 - 2.0);
    let se_slope = (sigma2 / sxx).sqrt();
    let se_intercept = (sigma2 * (1.0 / n as f64 + mx * mx / sxx)).sqrt();
    Ok(Ols {
        intercept,
        slope,
        se_intercept,
        se_slope,
        sigma2,
        n,
    })
}

/// Two-regressor OLS `y = b0 + b1 x1 + b2 x2`, with coefficient covariance.
/// Returns `(b, cov, sigma2)` where `b = [b0, b1, b2]` and `cov` is the 3x3
/// coefficient covariance matrix (row-major).
pub fn ols2(
    x1: &[f64],
    x2: &[f64],
    ys: &[f64],
) -> Result<([f64; 3], [[f64; 3]; 3], f64), StatsError> {
    let n = ys.len();
    assert!(x1.len() == n && x2.len() == n);
    if n < 4 {
        return Err(StatsError::TooFew { need: 4, got: n });
    }
    // Normal equations with explicit 3x3 inverse.
    let mut xtx = [[0.0f64; 3]; 3];
    let mut xty = [0.0f64; 3];
    for i in 0..n {
        let row = [1.0, x1[i], x2[i]];
        for a in 0..3 {
            xty[a] += row[a] * ys[i];
            for b in 0..3 {
                xtx[a][b] += row[a] * row[b];
            }
        }
    }
    let inv = invert3(&xtx).ok_or(StatsError::Singular)?;
    let mut b = [0.0f64; 3];
    for a in 0..3 {
        for k in 0..3 {
            b[a] += inv[a][k] * xty[k];
        }
    }
    let rss: f64 = (0..n)
        .map(|i| {
            let e = ys[i] - b[0] - b[1] * x1[i] - b[2] * x2[i];
            e * e
        })
        .sum();
    let sigma2 = rss / (n as f64 - 3.0);
    let mut cov = [[0.0f64; 3]; 3];
    for a in 0..3 {
        for c in 0..3 {
            cov[a][c] = inv[a][c] * sigma2;
        }
    }
    Ok((b, cov, sigma2))
}

fn invert3(m: &[[f64; 3]; 3]) -> Option<[[f64; 3]; 3]> {
    let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if det.abs() < 1e-12 * m[0][0].abs().max(1.0) {
        return None;
    }
    let inv_det = 1.0 / det;
    let mut inv = [[0.0f64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let (a, b, c, d) = (
                m[(i + 1) % 3][(j + 1) % 3],
                m[(i + 1) % 3][(j + 2) % 3],
                m[(i + 2) % 3][(j + 1) % 3],
                m[(i + 2) % 3][(j + 2) % 3],
            );
            // Transposed cofactor.
            inv[j][i] = (a * d - b * c) * inv_det;
        }
    }
    Some(inv)
}

/// Result of a univariate logistic fit `P(y=1) = sigmoid(b0 + b1 x)`.
pub struct LogisticFit {
    pub b0: f64,
    pub b1: f64,
    /// Coefficient covariance from the observed information matrix.
    pub cov: [[f64; 2]; 2],
    pub iterations: usize,
    pub converged: bool,
}

/// Newton-Raphson logistic regression. Reports `converged = false` on
/// separation (coefficients diverge) or iteration exhaustion; callers decide
/// the fallback.
pub fn logistic_fit(xs: &[f64], ys: &[bool]) -> Result<LogisticFit, StatsError> {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    if n < 4 {
        return Err(StatsError::TooFew { need: 4, got: n });
    }
    // Standardize x for numerical stability; un-standardize at the end.
    let mx = mean(xs);
    let sx = sd(xs);
    if sx <= 0.0 {
        return Err(StatsError::ZeroVariance("regressor"));
    }
    let zs: Vec<f64> = xs.iter().map(|x| (x - mx) / sx).collect();
    let mut b0 = 0.0f64;
    let mut b1 = 0.0f64;
    let mut converged = false;
    let mut iterations = 0;
    const MAX_ITER: usize = 60;
    const COEF_BOUND: f64 = 50.0;
    let mut info = [[0.0f64; 2]; 2];
    for it in 0..MAX_ITER {
        iterations = it + 1;
        let mut g0 = 0.0;
        let mut g1 = 0.0;
        info = [[0.0; 2]; 2];
        for (z, &y) in zs.iter().zip(ys) {
            let eta = b0 + b1 * z;
            let p = 1.0 / (1.0 + (-eta).exp());
            let w = p * (1.0 - p);
            let r = f64::from(y) - p;
            g0 += r;
            g1 += r * z;
            info[0][0] += w;
            info[0][1] += w * z;
            info[1][1] += w * z * z;
        }
        info[1][0] = info[0][1];
        let det = info[0][0] * info[1][1] - info[0][1] * info[1][0];
        if det.abs() < 1e-10 {
            break;
        }
        let d0 = (info[1][1] * g0 - info[0][1] * g1) / det;
        let d1 = (info[0][0] * g1 - info[1][0] * g0) / det;
        b0 += d0;
        b1 += d1;
        if b0.abs() > COEF_BOUND || b1.abs() > COEF_BOUND {
            // Diverging: (quasi-)separated data.
            return Ok(LogisticFit {
                b0: b0 - b1 * mx / sx,
                b1: b1 / sx,
                cov: [[f64::NAN; 2]; 2],
                iterations,
                converged: false,
            });
        }
        if d0.abs() < 1e-10 && d1.abs() < 1e-10 {
            converged = true;
            break;
        }
    }
    // Covariance on the standardized scale, then delta back.
    let det = info[0][0] * info[1][1] - info[0][1] * info[1][0];
    let cov_z = if det.abs() > 1e-12 {
        [
            [info[1][1] / det, -info[0][1] / det],
            [-info[1][0] / det, info[0][0] / det],
        ]
    } else {
        [[f64::NAN; 2]; 2]
    };
    // b0_x = b0_z - b1_z * mx / sx ; b1_x = b1_z / sx  (linear map).
    let j = [[1.0, -mx / sx], [0.0, 1.0 / sx]];
    let mut cov = [[0.0f64; 2]; 2];
    for a in 0..2 {
        for c in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    cov[a][c] += j[a][k] * cov_z[k][l] * j[c][l];
                }
            }
        }
    }
    Ok(LogisticFit {
        b0: b0 - b1 * mx / sx,
        b1: b1 / sx,
        cov,
        iterations,
        converged,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moments_basic() {
        let xs = [1.0, 2.0, 3.0, 4.0];
        assert_eq!(mean(&xs), 2.5);
        assert!((variance(&xs) - 5.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn pearson_perfect_and_errors() {
        let xs = [1.0, 2.0, 3.0];
        let ys = [2.0, 4.0, 6.0];
        assert!((pearson(&xs, &ys).unwrap() - 1.0).abs() < 1e-12);
        let flat = [1.0, 1.0, 1.0];
        assert_eq!(pearson(&flat, &ys), Err(StatsError::ZeroVariance("x")));
    }

    #[test]
    fn quantiles_match_known_values() {
        assert!((normal_quantile(0.90) - 1.2815515655).abs() < 1e-8);
        assert!((normal_quantile(0.975) - 1.959963985).abs() < 1e-8);
        assert!((normal_cdf(0.0) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn ols_recovers_line() {
        let xs: Vec<f64> = (0..50).map(f64::from).collect();
        let ys: Vec<f64> = xs.iter().map(|x| 2.0 + 3.0 * x).collect();
        let fit = ols(&xs, &ys).unwrap();
        assert!((fit.slope - 3.0).abs() < 1e-10);
        assert!((fit.intercept - 2.0).abs() < 1e-8);
    }

    #[test]
    fn ols2_recovers_plane() {
        let n = 200;
        let x1: Vec<f64> = (0..n).map(|i| (i % 17) as f64).collect();
        let x2: Vec<f64> = (0..n).map(|i| ((i * 7) % 13) as f64).collect();
        let ys: Vec<f64> = (0..n).map(|i| 1.5 + 0.4 * x1[i] - 0.9 * x2[i]).collect();
        let (b, _, _) = ols2(&x1, &x2, &ys).unwrap();
        assert!((b[0] - 1.5).abs() < 1e-8);
        assert!((b[1] - 0.4).abs() < 1e-10);
        assert!((b[2] + 0.9).abs() < 1e-10);
    }

    #[test]
    fn logistic_recovers_threshold() {
        // P(accept) = sigmoid((x - 225) / 45): generate expected responses
        // deterministically by thresholding the CDF grid.
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for rep in 0..40 {
            for k in 0..21 {
                let x = 50.0 + 17.5 * k as f64;
                let p = 1.0 / (1.0 + (-(x - 225.0) / 45.0).exp());
                // Stratified pseudo-draws: accept iff u < p with u on a grid.
                let u = (rep as f64 + 0.5) / 40.0;
                xs.push(x);
                ys.push(u < p);
            }
        }
        let fit = logistic_fit(&xs, &ys).unwrap();
        assert!(fit.converged);
        let threshold = -fit.b0 / fit.b1;
        assert!((threshold - 225.0).abs() < 6.0, "threshold {threshold}");
    }

    #[test]
    fn logistic_flags_separation() {
        let xs: Vec<f64> = (0..30).map(f64::from).collect();
        let ys: Vec<bool> = xs.iter().map(|&x| x > 14.0).collect();
        let fit = logistic_fit(&xs, &ys).unwrap();
        assert!(!fit.converged);
    }
}
