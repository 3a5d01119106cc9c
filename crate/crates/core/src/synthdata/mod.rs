//! Synthetic, contamination-free financial series: seeded GBM price paths,
//! autoregressive earnings, summary features, a two-sample KS screen with
//! reference-matched path selection, a distribution discriminator, and
//! collision-free asset identifiers.
//!
//! All generation is deterministic per `(config, seed)`. Batch helpers
//! derive per-index seeds through [`crate::rng::derive_seed`], so results
//! do not depend on thread scheduling.

mod asset_id;
mod discriminator;
mod earnings;
mod features;
mod gbm;
mod ks;
mod persist;

pub use asset_id::AssetIdGenerator;
pub use discriminator::{discriminate, DiscriminatorConfig};
pub use earnings::{generate_earnings_path, EarningsConfig, EarningsPath};
pub use features::{series_features, SeriesFeatures, FEATURE_COUNT};
pub use gbm::{
    default_reference_sample, generate_price_batch, generate_price_path, path_with_params,
    GbmParams, PricePath, PricePathConfig,
};
pub use ks::{ks_statistic, select_path, KsOutcome, SelectedPath};
pub use persist::{load_series_csv, write_batch, write_series_csv, BatchManifest};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SynthError {
    #[error("invalid config: {0}")]
    InvalidConfig(String),
    #[error("empty sample passed to {0}")]
    EmptySample(&'static str),
    #[error("insufficient data: need {need} paths per batch, got {got}")]
    InsufficientData { need: usize, got: usize },
    #[error("asset id space exhausted ({0} ids)")]
    IdSpaceExhausted(usize),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
