//! Quarterly earnings series `E_t = E_{t-1} (1 + g + rho * eta_{t-1} + eta_t)`
//! with Gaussian shocks. The growth rate `g_t = E_t/E_{t-1} - 1` is an MA(1)
//! in the shocks, so its lag-1 autocorrelation has the closed form
//! `rho / (1 + rho^2)` used as the simulator oracle.

use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use super::SynthError;
use crate::rng;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct EarningsConfig {
    /// Mean of the per-asset growth prior (per quarter).
    pub growth_mean: f64,
    /// SD of the per-asset growth prior.
    pub growth_sd: f64,
    /// Shock persistence rho, |rho| < 1.
    pub persistence: f64,
    /// Shock SD.
    pub shock_sd: f64,
    /// Series length in quarters.
    pub quarters: usize,
    /// Initial earnings level (millions).
    pub initial: f64,
}

impl Default for EarningsConfig {
    fn default() -> Self {
        Self {
            growth_mean: 0.03,
            growth_sd: 0.08,
            persistence: 0.3,
            shock_sd: 0.12,
            quarters: 24,
            initial: 5.0,
        }
    }
}

impl EarningsConfig {
    pub fn validate(&self) -> Result<(), SynthError> {
        if self.persistence.abs() >= 1.0 || !self.persistence.is_finite() {
            return Err(SynthError::InvalidConfig(format!(
                "persistence must satisfy |rho| < 1, got {}",
                self.persistence
            )));
        }
        if self.initial <= 0.0 {
            return Err(SynthError::InvalidConfig(
                "initial earnings must be > 0".into(),
            ));
        }
        if self.quarters == 0 {
            return Err(SynthError::InvalidConfig("quarters must be >= 1".into()));
        }
        if self.shock_sd < 0.0 || self.growth_sd < 0.0 {
            return Err(SynthError::InvalidConfig(
                "shock_sd and growth_sd must be >= 0".into(),
            ));
        }
        Ok(())
    }

    /// Population lag-1 autocorrelation of the growth rate implied by the
    /// MA(1) recursion: `rho / (1 + rho^2)`; higher lags are zero.
    pub fn growth_lag1_autocorr(&self) -> f64 {
        self.persistence / (1.0 + self.persistence * self.persistence)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EarningsPath {
    /// Per-asset drawn growth rate.
    pub growth: f64,
    /// `quarters` earnings levels.
    pub levels: Vec<f64>,
}

impl EarningsPath {
    /// Quarter-over-quarter growth rates (length `quarters - 1`).
    pub fn growth_rates(&self) -> Vec<f64> {
        self.levels.windows(2).map(|w| w[1] / w[0] - 1.0).collect()
    }
}

/// Generate one earnings series; deterministic per `(cfg, seed)`. The
/// first-period lagged shock is zero.
pub fn generate_earnings_path(cfg: &EarningsConfig, seed: u64) -> Result<EarningsPath, SynthError> {
    cfg.validate()?;
    let mut stream = rng::from_seed(seed);
    let growth = if cfg.growth_sd > 0.0 {
        Normal::new(cfg.growth_mean, cfg.growth_sd)
            .expect("valid prior")
            .sample(&mut stream)
    } else {
        cfg.growth_mean
    };
    let shock = Normal::new(0.0, cfg.shock_sd.max(f64::MIN_POSITIVE)).expect("valid shock");
    let mut levels = Vec::with_capacity(cfg.quarters);
    let mut level = cfg.initial;
    levels.push(level);
    let mut prev_eta = 0.0;
    for _ in 1..cfg.quarters {
        let eta = if cfg.shock_sd > 0.0 {
            shock.sample(&mut stream)
        } else {
            0.0
        };
        level *= 1.0 + growth + cfg.persistence * prev_eta + eta;
        levels.push(level);
        prev_eta = eta;
    }
    Ok(EarningsPath { growth, levels })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stats;

    #[test]
    fn no_dynamics_gives_constant_series() {
        let cfg = EarningsConfig {
            growth_mean: 0.0,
            growth_sd: 0.0,
            shock_sd: 0.0,
            ..EarningsConfig::default()
        };
        let path = generate_earnings_path(&cfg, 3).unwrap();
        assert!(path.levels.iter().all(|&e| (e - 5.0).abs() < 1e-12));
    }

    #[test]
    fn deterministic_per_seed() {
        let cfg = EarningsConfig::default();
        assert_eq!(
            generate_earnings_path(&cfg, 77).unwrap(),
            generate_earnings_path(&cfg, 77).unwrap()
        );
    }

    #[test]
    fn rejects_unit_root() {
        let cfg = EarningsConfig {
            persistence: 1.0,
            ..EarningsConfig::default()
        };
        assert!(generate_earnings_path(&cfg, 1).is_err());
    }

    #[test]
    fn zero_persistence_growth_uncorrelated() {
        // Pool lag-1 products over many short paths: with rho = 0 the
        // growth autocorrelation vanishes (within MC error).
        let cfg = EarningsConfig {
            persistence: 0.0,
            growth_sd: 0.0,
            quarters: 40,
            ..EarningsConfig::default()
        };
        let ac = mean_lag1_growth_autocorr(&cfg, 10_000 / 40, 99);
        assert!(ac.abs() < 0.05, "autocorr {ac}");
    }

    #[test]
    fn lag1_growth_autocorr_matches_analytic_value() {
        // rho = 0.3 implies growth lag-1 autocorr 0.3/1.09. Pool moderate
        // paths instead of one huge one: a multiplicative series over tens
        // of thousands of steps drifts out of f64 range.
        let cfg = EarningsConfig {
            quarters: 5_000,
            growth_mean: 0.0,
            growth_sd: 0.0,
            ..EarningsConfig::default()
        };
        let paths: u64 = 20;
        let acs: Vec<f64> = (0..paths)
            .map(|i| {
                let p = generate_earnings_path(&cfg, rng::derive_seed(5, "earn-ma1", i)).unwrap();
                stats::autocorr(&p.growth_rates(), 1).unwrap()
            })
            .collect();
        let ac1 = stats::mean(&acs);
        let expect = cfg.growth_lag1_autocorr();
        let se = 1.0 / ((cfg.quarters as u64 * paths) as f64).sqrt();
        assert!(
            (ac1 - expect).abs() < 4.0 * se,
            "ac1 {ac1} vs analytic {expect}"
        );
        let ac2s: Vec<f64> = (0..paths)
            .map(|i| {
                let p = generate_earnings_path(&cfg, rng::derive_seed(5, "earn-ma1", i)).unwrap();
                stats::autocorr(&p.growth_rates(), 2).unwrap()
            })
            .collect();
        assert!(stats::mean(&ac2s).abs() < 4.0 * se, "lag-2 should vanish");
    }

    fn mean_lag1_growth_autocorr(cfg: &EarningsConfig, paths: usize, seed: u64) -> f64 {
        let acs: Vec<f64> = (0..paths)
            .filter_map(|i| {
                let p =
                    generate_earnings_path(cfg, rng::derive_seed(seed, "earn-test", i as u64))
                        .unwrap();
                stats::autocorr(&p.growth_rates(), 1).ok()
            })
            .collect();
        stats::mean(&acs)
    }
}
