//! Summary features of a price path, computed on monthly log returns plus
//! drawdown statistics on the price level. The feature vector is fixed at
//! [`FEATURE_COUNT`] entries and feeds the distribution discriminator.

use serde::{Deserialize, Serialize};

use crate::stats;

/// Number of entries in [`SeriesFeatures::to_vec`].
pub const FEATURE_COUNT: usize = 15;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesFeatures {
    pub mean: f64,
    pub sd: f64,
    pub skewness: f64,
    pub kurtosis: f64,
    /// Return autocorrelations at lags 1..=5 (0 when the series is too
    /// short or degenerate).
    pub autocorr: [f64; 5],
    /// Mean rolling SD of returns over windows of 3, 6 and 12 months.
    pub rolling_vol: [f64; 3],
    /// Maximum peak-to-trough drawdown of the price level, in [0, 1].
    pub max_drawdown: f64,
    /// Mean drawdown across periods.
    pub mean_drawdown: f64,
    /// Fraction of periods spent below the running peak.
    pub drawdown_frequency: f64,
}

impl SeriesFeatures {
    pub fn to_vec(&self) -> Vec<f64> {
        let mut v = Vec::with_capacity(FEATURE_COUNT);
        v.extend([self.mean, self.sd, self.skewness, self.kurtosis]);
        v.extend(self.autocorr);
        v.extend(self.rolling_vol);
        v.extend([
            self.max_drawdown,
            self.mean_drawdown,
            self.drawdown_frequency,
        ]);
        debug_assert_eq!(v.len(), FEATURE_COUNT);
        v
    }
}

/// Compute the feature vector for a strictly positive price series.
pub fn series_features(prices: &[f64]) -> SeriesFeatures {
    let returns: Vec<f64> = prices.windows(2).map(|w| (w[1] / w[0]).ln()).collect();
    let mut autocorr = [0.0f64; 5];
    for (k, slot) in autocorr.iter_mut().enumerate() {
        *slot = stats::autocorr(&returns, k + 1).unwrap_or(0.0);
    }
    let mut rolling_vol = [0.0f64; 3];
    for (slot, window) in rolling_vol.iter_mut().zip([3usize, 6, 12]) {
        *slot = mean_rolling_sd(&returns, window);
    }
    let (max_dd, mean_dd, dd_freq) = drawdowns(prices);
    SeriesFeatures {
        mean: stats::mean(&returns),
        sd: if returns.len() > 1 {
            stats::sd(&returns)
        } else {
            0.0
        },
        skewness: stats::skewness(&returns),
        kurtosis: stats::excess_kurtosis(&returns),
        autocorr,
        rolling_vol,
        max_drawdown: max_dd,
        mean_drawdown: mean_dd,
        drawdown_frequency: dd_freq,
    }
}

fn mean_rolling_sd(returns: &[f64], window: usize) -> f64 {
    if returns.len() < window || window < 2 {
        return if returns.len() > 1 {
            stats::sd(returns)
        } else {
            0.0
        };
    }
    let sds: Vec<f64> = returns.windows(window).map(stats::sd).collect();
    stats::mean(&sds)
}

fn drawdowns(prices: &[f64]) -> (f64, f64, f64) {
    let mut peak = f64::MIN;
    let mut max_dd = 0.0f64;
    let mut sum_dd = 0.0f64;
    let mut below = 0usize;
    for &p in prices {
        peak = peak.max(p);
        let dd = 1.0 - p / peak;
        max_dd = max_dd.max(dd);
        sum_dd += dd;
        if dd > 0.0 {
            below += 1;
        }
    }
    (
        max_dd,
        sum_dd / prices.len() as f64,
        below as f64 / prices.len() as f64,
    )
}
