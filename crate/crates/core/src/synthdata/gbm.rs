//! Geometric Brownian motion price paths with the exact log-normal
//! discretization `S_{t+1} = S_t * exp((mu - sigma^2/2) dt + sigma sqrt(dt) z)`,
//! which has no Euler drift bias. Drift and volatility priors are annual;
//! steps are monthly (`dt = 1/12`).

use rand::Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use super::SynthError;
use crate::rng;

/// Per-path GBM parameters, drawn from the config priors or supplied
/// directly.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GbmParams {
    /// Annual drift.
    pub mu: f64,
    /// Annual volatility, >= 0.
    pub sigma: f64,
    /// Initial price, > 0.
    pub s0: f64,
}

/// Prior and screening configuration for price-path generation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct PricePathConfig {
    /// Mean of the Gaussian drift prior (per year).
    pub drift_mean: f64,
    /// SD of the Gaussian drift prior (per year).
    pub drift_sd: f64,
    /// Lower bound of the uniform volatility prior (per year).
    pub vol_lo: f64,
    /// Upper bound of the uniform volatility prior (per year).
    pub vol_hi: f64,
    /// Lower bound of the uniform initial-price prior.
    pub s0_lo: f64,
    /// Upper bound of the uniform initial-price prior.
    pub s0_hi: f64,
    /// Path length in monthly steps (the path has `months + 1` prices).
    pub months: usize,
    /// Candidate paths tried by [`super::select_path`].
    pub candidates: usize,
    /// KS acceptance level for path screening.
    pub ks_alpha: f64,
}

impl Default for PricePathConfig {
    fn default() -> Self {
        Self {
            drift_mean: 0.05,
            drift_sd: 0.10,
            vol_lo: 0.15,
            vol_hi: 0.40,
            s0_lo: 20.0,
            s0_hi: 200.0,
            months: 24,
            candidates: 20,
            ks_alpha: 0.05,
        }
    }
}

impl PricePathConfig {
    pub fn validate(&self) -> Result<(), SynthError> {
        if !(self.vol_lo < self.vol_hi) || self.vol_lo < 0.0 {
            return Err(SynthError::InvalidConfig(format!(
                "volatility prior requires 0 <= vol_lo < vol_hi, got [{}, {}]",
                self.vol_lo, self.vol_hi
            )));
        }
        if self.candidates < 1 {
            return Err(SynthError::InvalidConfig("candidates must be >= 1".into()));
        }
        if !(self.s0_lo > 0.0 && self.s0_lo <= self.s0_hi) {
            return Err(SynthError::InvalidConfig(format!(
                "initial-price prior requires 0 < s0_lo <= s0_hi, got [{}, {}]",
                self.s0_lo, self.s0_hi
            )));
        }
        if self.months == 0 {
            return Err(SynthError::InvalidConfig("months must be >= 1".into()));
        }
        if !(0.0 < self.ks_alpha && self.ks_alpha < 1.0) {
            return Err(SynthError::InvalidConfig(format!(
                "ks_alpha must be in (0,1), got {}",
                self.ks_alpha
            )));
        }
        Ok(())
    }

    /// Draw `(mu, sigma, s0)` from the priors.
    pub fn sample_params<R: Rng>(&self, rng: &mut R) -> GbmParams {
        let drift = Normal::new(self.drift_mean, self.drift_sd).expect("valid prior");
        GbmParams {
            mu: drift.sample(rng),
            sigma: rng.random_range(self.vol_lo..self.vol_hi),
            s0: rng.random_range(self.s0_lo..=self.s0_hi),
        }
    }
}

/// A generated monthly price path together with the parameters that
/// produced it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PricePath {
    pub params: GbmParams,
    /// `months + 1` strictly positive prices, `prices[0] = s0`.
    pub prices: Vec<f64>,
}

impl PricePath {
    /// Monthly log returns (length `months`).
    pub fn log_returns(&self) -> Vec<f64> {
        self.prices
            .windows(2)
            .map(|w| (w[1] / w[0]).ln())
            .collect()
    }
}

const MONTHS_PER_YEAR: f64 = 12.0;

/// Generate a path from explicit parameters using an existing RNG stream.
pub fn path_with_params<R: Rng>(params: &GbmParams, months: usize, rng: &mut R) -> PricePath {
    let dt = 1.0 / MONTHS_PER_YEAR;
    let drift = (params.mu - 0.5 * params.sigma * params.sigma) * dt;
    let scale = params.sigma * dt.sqrt();
    let z = Normal::new(0.0, 1.0).expect("unit normal");
    let mut log_s = params.s0.ln();
    let mut prices = Vec::with_capacity(months + 1);
    prices.push(params.s0);
    for _ in 0..months {
        log_s += drift + scale * z.sample(rng);
        prices.push(log_s.exp());
    }
    PricePath {
        params: *params,
        prices,
    }
}

/// Draw parameters from the config priors and generate one path.
/// Deterministic per `(cfg, seed)`.
pub fn generate_price_path(cfg: &PricePathConfig, seed: u64) -> Result<PricePath, SynthError> {
    cfg.validate()?;
    let mut stream = rng::from_seed(seed);
    let params = cfg.sample_params(&mut stream);
    Ok(path_with_params(&params, cfg.months, &mut stream))
}

/// Generate a batch of paths with per-index derived seeds. Safe to call in
/// parallel contexts; index `i` always produces the same path.
pub fn generate_price_batch(
    cfg: &PricePathConfig,
    n: usize,
    root_seed: u64,
) -> Result<Vec<PricePath>, SynthError> {
    cfg.validate()?;
    (0..n)
        .map(|i| generate_price_path(cfg, rng::derive_seed(root_seed, "gbm-path", i as u64)))
        .collect()
}

/// Pooled monthly log returns from a GBM batch at the center of the shipped
/// priors (`mu = drift_mean`, `sigma = (vol_lo + vol_hi)/2`). Used as the
/// default reference distribution for KS screening when no user reference
/// file is supplied.
pub fn default_reference_sample(cfg: &PricePathConfig, n_paths: usize, seed: u64) -> Vec<f64> {
    let params = GbmParams {
        mu: cfg.drift_mean,
        sigma: 0.5 * (cfg.vol_lo + cfg.vol_hi),
        s0: 0.5 * (cfg.s0_lo + cfg.s0_hi),
    };
    let mut out = Vec::with_capacity(n_paths * cfg.months);
    for i in 0..n_paths {
        let mut stream = rng::from_seed(rng::derive_seed(seed, "gbm-reference", i as u64));
        out.extend(path_with_params(&params, cfg.months, &mut stream).log_returns());
    }
    out
}
