//! Distribution discriminator: an L2-regularized logistic classifier over
//! [`super::SeriesFeatures`], scored by k-fold cross-validation. Two batches
//! from the same generator should score near chance (0.5); separable batches
//! score high. The learner is deliberately simple — the screening claim is
//! "accuracy is indistinguishable from chance", which any calibrated
//! classifier tests.

use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};

use super::features::{series_features, FEATURE_COUNT};
use super::gbm::PricePath;
use super::SynthError;
use crate::rng;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct DiscriminatorConfig {
    /// Cross-validation folds.
    pub folds: usize,
    /// L2 penalty on the weights.
    pub l2: f64,
    /// Gradient-descent iterations per fold.
    pub iterations: usize,
    /// Gradient-descent step size.
    pub learning_rate: f64,
    /// Minimum paths per batch.
    pub min_paths: usize,
}

impl Default for DiscriminatorConfig {
    fn default() -> Self {
        Self {
            folds: 5,
            l2: 1e-2,
            iterations: 400,
            learning_rate: 0.5,
            min_paths: 100,
        }
    }
}

/// Held-out classification accuracy for batch A vs batch B.
///
/// Features are standardized with training-fold statistics; folds are a
/// seeded shuffle, so the result is deterministic per `(batches, seed)`.
pub fn discriminate(
    batch_a: &[PricePath],
    batch_b: &[PricePath],
    cfg: &DiscriminatorConfig,
    seed: u64,
) -> Result<f64, SynthError> {
    for batch in [batch_a, batch_b] {
        if batch.len() < cfg.min_paths {
            return Err(SynthError::InsufficientData {
                need: cfg.min_paths,
                got: batch.len(),
            });
        }
    }
    let mut xs: Vec<Vec<f64>> = Vec::with_capacity(batch_a.len() + batch_b.len());
    let mut ys: Vec<f64> = Vec::with_capacity(xs.capacity());
    for path in batch_a {
        xs.push(series_features(&path.prices).to_vec());
        ys.push(0.0);
    }
    for path in batch_b {
        xs.push(series_features(&path.prices).to_vec());
        ys.push(1.0);
    }
    let mut order: Vec<usize> = (0..xs.len()).collect();
    order.shuffle(&mut rng::from_seed(rng::derive_seed(
        seed,
        "discriminator-folds",
        0,
    )));

    let folds = cfg.folds.max(2);
    let mut correct = 0usize;
    let mut total = 0usize;
    for fold in 0..folds {
        let test: Vec<usize> = order
            .iter()
            .enumerate()
            .filter(|(pos, _)| pos % folds == fold)
            .map(|(_, &i)| i)
            .collect();
        let train: Vec<usize> = order
            .iter()
            .enumerate()
            .filter(|(pos, _)| pos % folds != fold)
            .map(|(_, &i)| i)
            .collect();
        let (mu, sigma) = standardization(&xs, &train);
        let weights = fit_logistic(&xs, &ys, &train, &mu, &sigma, cfg);
        for &i in &test {
            let p = predict(&xs[i], &weights, &mu, &sigma);
            let label = if p > 0.5 { 1.0 } else { 0.0 };
            if (label - ys[i]).abs() < 0.5 {
                correct += 1;
            }
            total += 1;
        }
    }
    Ok(correct as f64 / total as f64)
}

fn standardization(xs: &[Vec<f64>], train: &[usize]) -> (Vec<f64>, Vec<f64>) {
    let n = train.len() as f64;
    let mut mu = vec![0.0; FEATURE_COUNT];
    for &i in train {
        for (m, v) in mu.iter_mut().zip(&xs[i]) {
            *m += v;
        }
    }
    for m in &mut mu {
        *m /= n;
    }
    let mut sigma = vec![0.0; FEATURE_COUNT];
    for &i in train {
        for k in 0..FEATURE_COUNT {
            let d = xs[i][k] - mu[k];
            sigma[k] += d * d;
        }
    }
    for s in &mut sigma {
        *s = (*s / n).sqrt().max(1e-12);
    }
    (mu, sigma)
}

fn fit_logistic(
    xs: &[Vec<f64>],
    ys: &[f64],
    train: &[usize],
    mu: &[f64],
    sigma: &[f64],
    cfg: &DiscriminatorConfig,
) -> Vec<f64> {
    // weights[0] is the intercept.
    let mut w = vec![0.0f64; FEATURE_COUNT + 1];
    let n = train.len() as f64;
    for _ in 0..cfg.iterations {
        let mut grad = vec![0.0f64; FEATURE_COUNT + 1];
        for &i in train {
            let p = predict(&xs[i], &w, mu, sigma);
            let err = p - ys[i];
            grad[0] += err;
            for k in 0..FEATURE_COUNT {
                grad[k + 1] += err * (xs[i][k] - mu[k]) / sigma[k];
            }
        }
        for (k, g) in grad.iter().enumerate() {
            let penalty = if k == 0 { 0.0 } else { cfg.l2 * w[k] };
            w[k] -= cfg.learning_rate * (g / n + penalty);
        }
    }
    w
}

fn predict(x: &[f64], w: &[f64], mu: &[f64], sigma: &[f64]) -> f64 {
    let mut eta = w[0];
    for k in 0..FEATURE_COUNT {
        eta += w[k + 1] * (x[k] - mu[k]) / sigma[k];
    }
    1.0 / (1.0 + (-eta).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synthdata::gbm::{generate_price_batch, PricePathConfig};

    fn batch(vol_scale: f64, n: usize, seed: u64) -> Vec<PricePath> {
        let cfg = PricePathConfig {
            vol_lo: 0.15 * vol_scale,
            vol_hi: 0.40 * vol_scale,
            ..PricePathConfig::default()
        };
        generate_price_batch(&cfg, n, seed).unwrap()
    }

    #[test]
    fn same_distribution_scores_near_chance() {
        let a = batch(1.0, 150, 21);
        let b = batch(1.0, 150, 22);
        let acc = discriminate(&a, &b, &DiscriminatorConfig::default(), 5).unwrap();
        assert!((0.40..=0.60).contains(&acc), "accuracy {acc}");
    }

    #[test]
    fn doubled_volatility_is_separable() {
        let a = batch(1.0, 150, 31);
        let b = batch(2.0, 150, 32);
        let acc = discriminate(&a, &b, &DiscriminatorConfig::default(), 5).unwrap();
        assert!(acc > 0.80, "accuracy {acc}");
    }

    #[test]
    fn shuffled_labels_center_at_half() {
        // Mix both halves from one generator and label arbitrarily: the
        // label carries no information.
        let all = batch(1.0, 300, 41);
        let (a, b) = all.split_at(150);
        let acc = discriminate(a, b, &DiscriminatorConfig::default(), 6).unwrap();
        assert!((0.40..=0.60).contains(&acc), "accuracy {acc}");
    }

    #[test]
    fn insufficient_data_errors() {
        let a = batch(1.0, 50, 51);
        let b = batch(1.0, 150, 52);
        assert!(matches!(
            discriminate(&a, &b, &DiscriminatorConfig::default(), 5),
            Err(SynthError::InsufficientData { .. })
        ));
    }
}
