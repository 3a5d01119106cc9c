//! Scenario payloads and seeded set builders for the eight experiments.
//!
//! Payloads carry both the respondent-visible numbers and the answer-key
//! fields the estimators need (realized interval outcomes, winner/loser
//! labels, the designated high-skew lottery). Prompt rendering only prints
//! the visible parts.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use super::ExperimentError;
use crate::benchmarks::BiasKind;
use crate::rng;
use crate::synthdata::{path_with_params, GbmParams};

/// Binary signal / choice label in cascade experiments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Signal {
    A,
    B,
}

impl Signal {
    pub fn other(self) -> Self {
        match self {
            Signal::A => Signal::B,
            Signal::B => Signal::A,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Signal::A => 'A',
            Signal::B => 'B',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GambleScenario {
    /// Potential gain (the varying grid value).
    pub gain: f64,
    /// Potential loss; fixed at 100 in the standard design.
    pub loss: f64,
    /// Win probability; fixed at 0.5 in the standard design.
    pub prob: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PortfolioPosition {
    pub purchase_price: f64,
    pub current_price: f64,
}

impl PortfolioPosition {
    pub fn is_winner(&self) -> bool {
        self.current_price > self.purchase_price
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PortfolioScenario {
    /// Positions displayed 1-based in prompts; exactly one must be sold.
    pub positions: Vec<PortfolioPosition>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntervalScenario {
    /// Visible quarterly earnings history.
    pub history: Vec<f64>,
    /// Nominal coverage of the requested interval.
    pub target_coverage: f64,
    /// Generating mean (answer key; the calibrated agent's model-implied mean).
    pub true_mean: f64,
    /// Generating SD (answer key).
    pub true_sd: f64,
    /// Realized next-quarter value (answer key; used by the coverage
    /// estimator, never shown to respondents).
    pub realized: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CascadeScenario {
    pub private_signal: Signal,
    /// Probability the private signal is correct.
    pub signal_accuracy: f64,
    /// Non-empty earlier choices, displayed in order.
    pub crowd_history: Vec<Signal>,
}

impl CascadeScenario {
    /// Strict majority of the crowd history (the builders avoid ties).
    pub fn crowd_majority(&self) -> Signal {
        let a = self
            .crowd_history
            .iter()
            .filter(|s| **s == Signal::A)
            .count();
        if 2 * a > self.crowd_history.len() {
            Signal::A
        } else {
            Signal::B
        }
    }

    /// True when the private signal disagrees with the crowd majority.
    pub fn is_conflict(&self) -> bool {
        self.private_signal != self.crowd_majority()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NarrativeScenario {
    /// Story-quality score in [0, 4].
    pub narrative_score: f64,
    /// Fundamentals-quality score in [0, 4].
    pub fundamental_score: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Lottery {
    /// Outcome branches as (payoff, probability); probabilities need not
    /// sum to 1 — the remainder pays zero.
    pub outcomes: Vec<(f64, f64)>,
    /// Stated expected value, printed in prompts.
    pub expected_value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SkewChoiceScenario {
    /// Lotteries displayed as options A, B, ... in order.
    pub lotteries: Vec<Lottery>,
    /// Index of the designated high-skew option (answer key).
    pub high_skew_index: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnchorScenario {
    /// Arbitrary anchor price, drawn independently of the true value.
    pub anchor: f64,
    /// Fundamental value (answer key for the synthetic respondent).
    pub true_value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ForecastScenario {
    /// Monthly return history, oldest first.
    pub return_history: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ScenarioPayload {
    Gamble(GambleScenario),
    Portfolio(PortfolioScenario),
    Interval(IntervalScenario),
    Cascade(CascadeScenario),
    Narrative(NarrativeScenario),
    SkewChoice(SkewChoiceScenario),
    Anchor(AnchorScenario),
    Forecast(ForecastScenario),
}

/// One experiment item: an identifier, the bias it measures, and the payload.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scenario {
    pub id: String,
    pub bias: BiasKind,
    /// Schema version for persisted JSON-lines sets.
    #[serde(default = "schema_version")]
    pub v: u32,
    pub payload: ScenarioPayload,
}

fn schema_version() -> u32 {
    1
}

/// Distribution constants behind [`build_scenario_set`]. The defaults pin
/// every number the estimators and calibration targets rely on.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct ScenarioGenConfig {
    /// Gamble gain grid endpoints (identifies lambda in [grid_lo/loss,
    /// grid_hi/loss]).
    pub gamble_grid_lo: f64,
    pub gamble_grid_hi: f64,
    pub gamble_loss: f64,
    pub gamble_prob: f64,
    /// Positions per portfolio scenario.
    pub portfolio_positions: usize,
    pub portfolio_purchase: f64,
    /// Absolute return magnitude range for winners/losers.
    pub portfolio_move_lo: f64,
    pub portfolio_move_hi: f64,
    /// Interval task: earnings-level mean and SD priors, history length.
    pub interval_mean_lo: f64,
    pub interval_mean_hi: f64,
    pub interval_sd_lo: f64,
    pub interval_sd_hi: f64,
    pub interval_history_len: usize,
    pub interval_target_coverage: f64,
    /// Cascade crowd sizes (odd, to avoid ties) and accuracy choices.
    pub cascade_crowd_sizes: Vec<usize>,
    pub cascade_accuracies: Vec<f64>,
    /// Narrative/fundamental score range.
    pub score_max: f64,
    /// Skew task: expected-value range, win probabilities, and the
    /// expected-value discount of the high-skew option.
    pub skew_ev_lo: f64,
    pub skew_ev_hi: f64,
    pub skew_safe_prob: f64,
    pub skew_skew_prob: f64,
    pub skew_ev_discount: f64,
    /// Anchor and true-value ranges (independent draws).
    pub anchor_lo: f64,
    pub anchor_hi: f64,
    pub anchor_true_lo: f64,
    pub anchor_true_hi: f64,
    /// Forecast histories: months of GBM monthly log returns at these
    /// parameters.
    pub forecast_months: usize,
    pub forecast_mu: f64,
    pub forecast_sigma: f64,
}

impl Default for ScenarioGenConfig {
    fn default() -> Self {
        Self {
            gamble_grid_lo: 50.0,
            gamble_grid_hi: 400.0,
            gamble_loss: 100.0,
            gamble_prob: 0.5,
            portfolio_positions: 4,
            portfolio_purchase: 100.0,
            portfolio_move_lo: 0.05,
            portfolio_move_hi: 0.30,
            interval_mean_lo: 3.0,
            interval_mean_hi: 8.0,
            interval_sd_lo: 0.5,
            interval_sd_hi: 2.5,
            interval_history_len: 8,
            interval_target_coverage: 0.80,
            cascade_crowd_sizes: vec![3, 5, 7],
            cascade_accuracies: vec![0.60, 0.65, 0.70],
            score_max: 4.0,
            skew_ev_lo: 2000.0,
            skew_ev_hi: 8000.0,
            skew_safe_prob: 0.5,
            skew_skew_prob: 0.1,
            skew_ev_discount: 0.30,
            anchor_lo: 50.0,
            anchor_hi: 250.0,
            anchor_true_lo: 50.0,
            anchor_true_hi: 150.0,
            forecast_months: 24,
            forecast_mu: 0.05,
            forecast_sigma: 0.275,
        }
    }
}

/// Build a deterministic scenario set for one bias. Ids embed the seed so
/// sets built with different seeds never collide.
pub fn build_scenario_set(
    bias: BiasKind,
    n: usize,
    seed: u64,
    cfg: &ScenarioGenConfig,
) -> Result<Vec<Scenario>, ExperimentError> {
    if n == 0 {
        return Err(ExperimentError::EmptySet);
    }
    (0..n)
        .map(|i| {
            let mut stream = rng::stream(seed, "scenario", i as u64);
            let payload = build_payload(bias, i, n, cfg, &mut stream)?;
            Ok(Scenario {
                id: format!("{}-{:08x}-{:04}", bias.slug(), seed as u32, i),
                bias,
                v: 1,
                payload,
            })
        })
        .collect()
}

fn build_payload(
    bias: BiasKind,
    index: usize,
    n: usize,
    cfg: &ScenarioGenConfig,
    stream: &mut ChaCha8Rng,
) -> Result<ScenarioPayload, ExperimentError> {
    Ok(match bias {
        BiasKind::LossAversion => {
            // Even grid over [lo, hi]; single-point sets sit at the center.
            let gain = if n == 1 {
                0.5 * (cfg.gamble_grid_lo + cfg.gamble_grid_hi)
            } else {
                let spacing = (cfg.gamble_grid_hi - cfg.gamble_grid_lo) / (n as f64 - 1.0);
                cfg.gamble_grid_lo + spacing * index as f64
            };
            ScenarioPayload::Gamble(GambleScenario {
                gain,
                loss: cfg.gamble_loss,
                prob: cfg.gamble_prob,
            })
        }
        BiasKind::Disposition => {
            let k = cfg.portfolio_positions.max(2);
            // 1..k-1 winners, so both classes are always present.
            let winners = stream.random_range(1..k);
            let mut positions: Vec<PortfolioPosition> = (0..k)
                .map(|j| {
                    let magnitude =
                        stream.random_range(cfg.portfolio_move_lo..cfg.portfolio_move_hi);
                    let signed = if j < winners { magnitude } else { -magnitude };
                    PortfolioPosition {
                        purchase_price: cfg.portfolio_purchase,
                        current_price: round2(cfg.portfolio_purchase * (1.0 + signed)),
                    }
                })
                .collect();
            // Deterministic Fisher-Yates so winner slots vary by position.
            for j in (1..positions.len()).rev() {
                positions.swap(j, stream.random_range(0..=j));
            }
            ScenarioPayload::Portfolio(PortfolioScenario { positions })
        }
        BiasKind::Overconfidence => {
            let mean = stream.random_range(cfg.interval_mean_lo..cfg.interval_mean_hi);
            let sd = stream.random_range(cfg.interval_sd_lo..cfg.interval_sd_hi);
            let normal = Normal::new(mean, sd).expect("positive sd");
            let history: Vec<f64> = (0..cfg.interval_history_len)
                .map(|_| round2(normal.sample(stream)))
                .collect();
            let realized = normal.sample(stream);
            ScenarioPayload::Interval(IntervalScenario {
                history,
                target_coverage: cfg.interval_target_coverage,
                true_mean: mean,
                true_sd: sd,
                realized,
            })
        }
        BiasKind::Herding => {
            let size = cfg.cascade_crowd_sizes[stream.random_range(0..cfg.cascade_crowd_sizes.len())];
            let accuracy =
                cfg.cascade_accuracies[stream.random_range(0..cfg.cascade_accuracies.len())];
            let majority = if stream.random::<bool>() {
                Signal::A
            } else {
                Signal::B
            };
            let minority_count = stream.random_range(0..=(size - 1) / 2);
            let mut crowd = vec![majority; size];
            // Scatter the minority choices through the history.
            for slot in 0..minority_count {
                crowd[1 + 2 * slot] = majority.other();
            }
            // Alternate conflict/agreement trials so conflicts are
            // guaranteed to be at least half of every set.
            let private_signal = if index % 2 == 0 {
                majority.other()
            } else {
                majority
            };
            ScenarioPayload::Cascade(CascadeScenario {
                private_signal,
                signal_accuracy: accuracy,
                crowd_history: crowd,
            })
        }
        BiasKind::Representativeness => ScenarioPayload::Narrative(NarrativeScenario {
            narrative_score: round2(stream.random_range(0.0..cfg.score_max)),
            fundamental_score: round2(stream.random_range(0.0..cfg.score_max)),
        }),
        BiasKind::ProbabilityWeighting => {
            let ev = round2(stream.random_range(cfg.skew_ev_lo..cfg.skew_ev_hi));
            let safe = Lottery {
                outcomes: vec![(round2(ev / cfg.skew_safe_prob), cfg.skew_safe_prob)],
                expected_value: ev,
            };
            let skew_ev = round2(ev * (1.0 - cfg.skew_ev_discount));
            let skew = Lottery {
                outcomes: vec![(round2(skew_ev / cfg.skew_skew_prob), cfg.skew_skew_prob)],
                expected_value: skew_ev,
            };
            let high_skew_index = usize::from(stream.random::<bool>());
            let lotteries = if high_skew_index == 0 {
                vec![skew, safe]
            } else {
                vec![safe, skew]
            };
            ScenarioPayload::SkewChoice(SkewChoiceScenario {
                lotteries,
                high_skew_index,
            })
        }
        BiasKind::Anchoring => ScenarioPayload::Anchor(AnchorScenario {
            anchor: round2(stream.random_range(cfg.anchor_lo..cfg.anchor_hi)),
            true_value: round2(stream.random_range(cfg.anchor_true_lo..cfg.anchor_true_hi)),
        }),
        BiasKind::Extrapolation => {
            let params = GbmParams {
                mu: cfg.forecast_mu,
                sigma: cfg.forecast_sigma,
                s0: 100.0,
            };
            let path = path_with_params(&params, cfg.forecast_months, stream);
            ScenarioPayload::Forecast(ForecastScenario {
                return_history: path.log_returns(),
            })
        }
    })
}

fn round2(x: f64) -> f64 {
    (x * 100.0).round() / 100.0
}

/// Expected answer shape for a payload.
pub fn answer_shape(payload: &ScenarioPayload) -> super::AnswerShape {
    use super::AnswerShape as S;
    match payload {
        ScenarioPayload::Gamble(_) => S::AcceptReject,
        ScenarioPayload::Portfolio(_) => S::Sell,
        ScenarioPayload::Interval(_) => S::Interval,
        ScenarioPayload::Cascade(_) => S::OptionChoice,
        ScenarioPayload::Narrative(_) => S::Rating,
        ScenarioPayload::SkewChoice(_) => S::OptionChoice,
        ScenarioPayload::Anchor(_) => S::Valuation,
        ScenarioPayload::Forecast(_) => S::Forecast,
    }
}

impl Scenario {
    pub fn answer_shape(&self) -> super::AnswerShape {
        answer_shape(&self.payload)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamble_grid_matches_documented_spacing() {
        let cfg = ScenarioGenConfig::default();
        let set = build_scenario_set(BiasKind::LossAversion, 21, 1, &cfg).unwrap();
        let gains: Vec<f64> = set
            .iter()
            .map(|s| match &s.payload {
                ScenarioPayload::Gamble(g) => g.gain,
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(gains[0], 50.0);
        assert_eq!(gains[1], 67.5);
        assert_eq!(gains[20], 400.0);
        for w in gains.windows(2) {
            assert!((w[1] - w[0] - 17.5).abs() < 1e-9);
        }
    }

    #[test]
    fn cascade_sets_have_enough_conflicts_and_no_ties() {
        let cfg = ScenarioGenConfig::default();
        let set = build_scenario_set(BiasKind::Herding, 40, 9, &cfg).unwrap();
        let mut conflicts = 0;
        for s in &set {
            let ScenarioPayload::Cascade(c) = &s.payload else {
                unreachable!()
            };
            assert!(!c.crowd_history.is_empty());
            assert!(c.crowd_history.len() % 2 == 1, "odd crowd avoids ties");
            if c.is_conflict() {
                conflicts += 1;
            }
        }
        assert!(
            conflicts as f64 >= 0.4 * set.len() as f64,
            "{conflicts}/40 conflicts"
        );
    }

    #[test]
    fn sets_are_reproducible_byte_exact() {
        let cfg = ScenarioGenConfig::default();
        for bias in BiasKind::ALL {
            let a = build_scenario_set(bias, 12, 77, &cfg).unwrap();
            let b = build_scenario_set(bias, 12, 77, &cfg).unwrap();
            let ja = serde_json::to_string(&a).unwrap();
            let jb = serde_json::to_string(&b).unwrap();
            assert_eq!(ja, jb, "{bias}");
        }
    }

    #[test]
    fn portfolio_always_has_both_classes() {
        let cfg = ScenarioGenConfig::default();
        for s in build_scenario_set(BiasKind::Disposition, 60, 3, &cfg).unwrap() {
            let ScenarioPayload::Portfolio(p) = &s.payload else {
                unreachable!()
            };
            assert!(p.positions.iter().any(PortfolioPosition::is_winner));
            assert!(p.positions.iter().any(|q| !q.is_winner()));
        }
    }

    #[test]
    fn skew_lotteries_state_discounted_ev() {
        let cfg = ScenarioGenConfig::default();
        for s in build_scenario_set(BiasKind::ProbabilityWeighting, 30, 5, &cfg).unwrap() {
            let ScenarioPayload::SkewChoice(sc) = &s.payload else {
                unreachable!()
            };
            assert_eq!(sc.lotteries.len(), 2);
            let skew = &sc.lotteries[sc.high_skew_index];
            let safe = &sc.lotteries[1 - sc.high_skew_index];
            assert!(skew.expected_value < safe.expected_value);
            assert!(skew.outcomes[0].1 < safe.outcomes[0].1);
        }
    }

    #[test]
    fn empty_set_rejected() {
        let cfg = ScenarioGenConfig::default();
        assert!(build_scenario_set(BiasKind::Anchoring, 0, 1, &cfg).is_err());
    }
}
