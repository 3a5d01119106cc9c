//! Behavioral-parameter calibration toolkit.
//!
//! The crate measures eight canonical behavioral biases (loss aversion,
//! disposition, overconfidence, herding, representativeness, probability
//! weighting, anchoring, extrapolation) by generating synthetic financial
//! scenarios, eliciting decisions from parameterized synthetic respondents
//! or external chat-completion endpoints, recovering the parameters from
//! the decision records, and validating the recovered ranges against human
//! benchmarks. Calibrated extrapolation coefficients feed an agent-based
//! asset-pricing simulator that reproduces momentum/reversal statistics.
//!
//! Module map:
//! - [`params`], [`benchmarks`], [`prospect`] — parameter vectors, the
//!   benchmark registry, and the pure decision-theory primitives.
//! - [`synthdata`] — seeded GBM price paths, AR earnings, KS screening,
//!   and a distribution discriminator.
//! - [`experiments`] — scenario construction, prompt rendering, response
//!   grammar, and the adversarial catalog.
//! - [`respondents`] — ground-truth synthetic respondents and the
//!   chat-completion client.
//! - [`estimators`] — recovery of the eight parameters from records.
//! - [`validator`] — C1–C4 checks, tier classification, Holm correction,
//!   clustered tests, and Monte Carlo power analysis.
//! - [`abm`] — the asset-pricing simulator and momentum statistics.

pub mod abm;
pub mod benchmarks;
pub mod estimators;
pub mod experiments;
pub mod params;
pub mod prospect;
pub mod respondents;
pub mod rng;
pub mod stats;
pub mod synthdata;
pub mod validator;

pub use benchmarks::{Benchmark, BenchmarkRegistry, BiasKind};
pub use params::{ParameterVector, Profile, ProfileKind};
