//! Adversarial scenario catalog.
//!
//! Each entry pairs scenario text (what a respondent sees) with a
//! structured payload (what a synthetic respondent consumes) and a pure
//! predicate over the parsed response. Stereotyped bias behavior fails the
//! predicate; reasoning about the scenario specifics passes it. Reasoning
//! citations are deliberately not checked — predicates use only the
//! structured decision, so no text judge is involved.
//!
//! Twelve entries follow the published catalog; two more marked
//! [`CatalogSource::Extension`] probe the two lowest-pass-rate biases from
//! the other side (a low anchor, a dull story over strong fundamentals).
//! User-supplied entries can be appended from a JSON file of the same
//! shape.

use serde::{Deserialize, Serialize};

use super::response::{Answer, ParsedResponse};
use super::scenario::{
    AnchorScenario, CascadeScenario, ForecastScenario, GambleScenario, IntervalScenario, Lottery,
    NarrativeScenario, PortfolioPosition, PortfolioScenario, Scenario, ScenarioPayload, Signal,
    SkewChoiceScenario,
};
use crate::benchmarks::BiasKind;
use crate::stats;

/// Where a catalog entry came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CatalogSource {
    /// One of the published adversarial specifications.
    Printed,
    /// Shipped extension probing an additional failure direction.
    Extension,
}

/// One respondent-visible frame: a structured payload plus custom text that
/// overrides the standard renderer.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrameSpec {
    pub scenario: Scenario,
    pub text: String,
}

/// Machine-evaluable pass criterion over parsed responses.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum PassPredicate {
    /// Sold position (1-based) equals the expected one.
    SellEquals { position: usize },
    /// Sold position is any of the listed ones.
    SellAnyOf { positions: Vec<usize> },
    IntervalWidthAtLeast { width: f64 },
    ChoiceEquals { label: char },
    ChoiceNotEquals { label: char },
    RatingAtMost { rating: f64 },
    RatingAtLeast { rating: f64 },
    ValuationAtMost { price: f64 },
    ValuationAtLeast { price: f64 },
    ForecastBelow { value: f64 },
    /// Both frames must yield the same accept/reject decision.
    ConsistentAcceptReject,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AdversarialScenario {
    pub id: String,
    pub bias: BiasKind,
    pub title: String,
    pub source: CatalogSource,
    /// One frame normally; two for the framing-consistency entry.
    pub frames: Vec<FrameSpec>,
    pub predicate: PassPredicate,
}

/// Verdict for one adversarial evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PassOutcome {
    Pass,
    Fail,
    /// At least one response had no parseable answer; counts as a fail but
    /// is tallied separately.
    Unparsed,
}

/// Evaluate the predicate on the responses (one per frame, in frame order).
/// Pure: identical inputs always produce the same verdict.
pub fn evaluate_pass(adv: &AdversarialScenario, responses: &[ParsedResponse]) -> PassOutcome {
    if responses.len() != adv.frames.len() {
        return PassOutcome::Unparsed;
    }
    let answers: Vec<&Answer> = match responses
        .iter()
        .map(|r| r.answer.as_ref())
        .collect::<Option<Vec<_>>>()
    {
        Some(a) => a,
        None => return PassOutcome::Unparsed,
    };
    let pass = match &adv.predicate {
        PassPredicate::SellEquals { position } => {
            matches!(answers[0], Answer::Sell { position: p } if p == position)
        }
        PassPredicate::SellAnyOf { positions } => {
            matches!(answers[0], Answer::Sell { position: p } if positions.contains(p))
        }
        PassPredicate::IntervalWidthAtLeast { width } => {
            matches!(answers[0], Answer::Interval { lo, hi } if hi - lo >= *width)
        }
        PassPredicate::ChoiceEquals { label } => {
            matches!(answers[0], Answer::OptionChoice { label: l } if l == label)
        }
        PassPredicate::ChoiceNotEquals { label } => {
            matches!(answers[0], Answer::OptionChoice { label: l } if l != label)
        }
        PassPredicate::RatingAtMost { rating } => {
            matches!(answers[0], Answer::Rating { rating: r } if *r <= *rating)
        }
        PassPredicate::RatingAtLeast { rating } => {
            matches!(answers[0], Answer::Rating { rating: r } if *r >= *rating)
        }
        PassPredicate::ValuationAtMost { price } => {
            matches!(answers[0], Answer::Valuation { price: p } if *p <= *price)
        }
        PassPredicate::ValuationAtLeast { price } => {
            matches!(answers[0], Answer::Valuation { price: p } if *p >= *price)
        }
        PassPredicate::ForecastBelow { value } => {
            matches!(answers[0], Answer::Forecast { value: v } if *v < *value)
        }
        PassPredicate::ConsistentAcceptReject => match (answers.first(), answers.get(1)) {
            (
                Some(Answer::AcceptReject { accept: a }),
                Some(Answer::AcceptReject { accept: b }),
            ) => a == b,
            _ => false,
        },
    };
    if pass {
        PassOutcome::Pass
    } else {
        PassOutcome::Fail
    }
}

/// Per-bias pass-rate row; unparsed responses count against the rate but
/// are reported on their own.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct PassRateRow {
    pub passes: usize,
    pub fails: usize,
    pub unparsed: usize,
}

impl PassRateRow {
    pub fn record(&mut self, outcome: PassOutcome) {
        match outcome {
            PassOutcome::Pass => self.passes += 1,
            PassOutcome::Fail => self.fails += 1,
            PassOutcome::Unparsed => self.unparsed += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.passes + self.fails + self.unparsed
    }

    pub fn rate(&self) -> f64 {
        if self.total() == 0 {
            return 0.0;
        }
        self.passes as f64 / self.total() as f64
    }
}

/// Pass-rate table keyed by bias, with the moderate-validation threshold.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct PassRateTable {
    pub rows: Vec<(BiasKind, PassRateRow)>,
}

impl PassRateTable {
    pub const MODERATE_THRESHOLD: f64 = 0.70;

    pub fn row_mut(&mut self, bias: BiasKind) -> &mut PassRateRow {
        let pos = self.rows.iter().position(|(b, _)| *b == bias);
        match pos {
            Some(i) => &mut self.rows[i].1,
            None => {
                self.rows.push((bias, PassRateRow::default()));
                &mut self.rows.last_mut().expect("just pushed").1
            }
        }
    }

    /// Biases whose pass rate reaches the moderate-validation gate.
    pub fn meets_threshold(&self, bias: BiasKind) -> bool {
        self.rows
            .iter()
            .find(|(b, _)| *b == bias)
            .is_some_and(|(_, row)| row.rate() >= Self::MODERATE_THRESHOLD)
    }
}

fn scenario(id: &str, bias: BiasKind, payload: ScenarioPayload) -> Scenario {
    Scenario {
        id: id.to_string(),
        bias,
        v: 1,
        payload,
    }
}

fn sample_stats(xs: &[f64]) -> (f64, f64) {
    (stats::mean(xs), stats::sd(xs))
}

/// The shipped catalog: 14 entries, predicates as documented on each.
pub fn adversarial_catalog() -> Vec<AdversarialScenario> {
    let mut catalog = Vec::with_capacity(14);

    // Disposition: tax-loss harvesting makes selling the loser optimal.
    catalog.push(AdversarialScenario {
        id: "adv-disposition-tax".into(),
        bias: BiasKind::Disposition,
        title: "tax-loss harvesting".into(),
        source: CatalogSource::Printed,
        frames: vec![FrameSpec {
            scenario: scenario(
                "adv-disposition-tax",
                BiasKind::Disposition,
                ScenarioPayload::Portfolio(PortfolioScenario {
                    positions: vec![
                        PortfolioPosition {
                            purchase_price: 100.0,
                            current_price: 85.0,
                        },
                        PortfolioPosition {
                            purchase_price: 100.0,
                            current_price: 115.0,
                        },
                    ],
                }),
            ),
            text: "You hold Position 1 (purchased at $100, now $85, -15%) and Position 2 \
                   (purchased at $100, now $115, +15%). You must sell exactly one today. \
                   Tax rules let you deduct 10% of realized losses at a 30% marginal rate. \
                   Both positions have identical expected returns going forward. \
                   Which position do you sell?"
                .into(),
        }],
        predicate: PassPredicate::SellEquals { position: 1 },
    });

    // Disposition: deteriorated fundamentals dominate the paper gain.
    catalog.push(AdversarialScenario {
        id: "adv-disposition-fundamentals".into(),
        bias: BiasKind::Disposition,
        title: "fundamental deterioration".into(),
        source: CatalogSource::Printed,
        frames: vec![FrameSpec {
            scenario: scenario(
                "adv-disposition-fundamentals",
                BiasKind::Disposition,
                ScenarioPayload::Portfolio(PortfolioScenario {
                    positions: vec![
                        PortfolioPosition {
                            purchase_price: 100.0,
                            current_price: 120.0,
                        },
                        PortfolioPosition {
                            purchase_price: 100.0,
                            current_price: 90.0,
                        },
                    ],
                }),
            ),
            text: "Position 1 is up 20%, but the company just missed earnings by 40%, lost a \
                   major contract, and its margins are deteriorating. Position 2 is down 10% \
                   and performing exactly as expected. You must sell one position. Which do \
                   you sell?"
                .into(),
        }],
        predicate: PassPredicate::SellEquals { position: 1 },
    });

    // Disposition: rebalancing to target forces selling winners.
    catalog.push(AdversarialScenario {
        id: "adv-disposition-rebalance".into(),
        bias: BiasKind::Disposition,
        title: "portfolio rebalancing".into(),
        source: CatalogSource::Printed,
        frames: vec![FrameSpec {
            scenario: scenario(
                "adv-disposition-rebalance",
                BiasKind::Disposition,
                ScenarioPayload::Portfolio(PortfolioScenario {
                    positions: vec![
                        PortfolioPosition {
                            purchase_price: 100.0,
                            current_price: 130.0,
                        },
                        PortfolioPosition {
                            purchase_price: 100.0,
                            current_price: 130.0,
                        },
                        PortfolioPosition {
                            purchase_price: 100.0,
                            current_price: 100.0,
                        },
                        PortfolioPosition {
                            purchase_price: 100.0,
                            current_price: 100.0,
                        },
                    ],
                }),
            ),
            text: "Your target allocation is 60% stocks / 40% bonds. Positions 1 and 2 are \
                   stocks, both up 30%; positions 3 and 4 are bonds, flat. The portfolio has \
                   drifted to 72/28 and you must rebalance back to 60/40 by selling one \
                   position. Which do you sell?"
                .into(),
        }],
        predicate: PassPredicate::SellAnyOf {
            positions: vec![1, 2],
        },
    });

    // Overconfidence: high realized volatility demands a wide interval.
    let vol_history = vec![2.1, 5.7, 1.3, 8.2, 2.8, 6.1, 3.4, 7.5];
    let (vol_mean, vol_sd) = sample_stats(&vol_history);
    catalog.push(AdversarialScenario {
        id: "adv-overconfidence-volatility".into(),
        bias: BiasKind::Overconfidence,
        title: "extreme volatility".into(),
        source: CatalogSource::Printed,
        frames: vec![FrameSpec {
            scenario: scenario(
                "adv-overconfidence-volatility",
                BiasKind::Overconfidence,
                ScenarioPayload::Interval(IntervalScenario {
                    history: vol_history.clone(),
                    target_coverage: 0.80,
                    true_mean: vol_mean,
                    true_sd: vol_sd,
                    realized: vol_mean,
                }),
            ),
            text: "A company's quarterly earnings, in millions and oldest first, were: $2.1, \
                   $5.7, $1.3, $8.2, $2.8, $6.1, $3.4, $7.5. Provide an interval you believe \
                   has probability 0.8 of containing next quarter's earnings."
                .into(),
        }],
        predicate: PassPredicate::IntervalWidthAtLeast { width: 5.0 },
    });

    // Overconfidence: a structural break adds regime uncertainty.
    let break_history = vec![5.0, 5.0, 5.0, 5.0, 5.0, 5.0, 3.0, 2.8];
    let (break_mean, break_sd) = sample_stats(&break_history);
    catalog.push(AdversarialScenario {
        id: "adv-overconfidence-break".into(),
        bias: BiasKind::Overconfidence,
        title: "structural break".into(),
        source: CatalogSource::Printed,
        frames: vec![FrameSpec {
            scenario: scenario(
                "adv-overconfidence-break",
                BiasKind::Overconfidence,
                ScenarioPayload::Interval(IntervalScenario {
                    history: break_history.clone(),
                    target_coverage: 0.80,
                    true_mean: break_mean,
                    true_sd: break_sd,
                    realized: break_mean,
                }),
            ),
            text: "A company's quarterly earnings held steady at $5M for six quarters, then \
                   changed suddenly: $3M and most recently $2.8M. Provide an interval you \
                   believe has probability 0.8 of containing next quarter's earnings."
                .into(),
        }],
        predicate: PassPredicate::IntervalWidthAtLeast { width: 3.0 },
    });

    // Herding: a perfect private signal dominates any crowd.
    catalog.push(AdversarialScenario {
        id: "adv-herding-perfect-signal".into(),
        bias: BiasKind::Herding,
        title: "perfect signal".into(),
        source: CatalogSource::Printed,
        frames: vec![FrameSpec {
            scenario: scenario(
                "adv-herding-perfect-signal",
                BiasKind::Herding,
                ScenarioPayload::Cascade(CascadeScenario {
                    private_signal: Signal::A,
                    signal_accuracy: 1.0,
                    crowd_history: {
                        let mut crowd = vec![Signal::B; 15];
                        crowd.push(Signal::A);
                        crowd
                    },
                }),
            ),
            text: "You must choose option A or option B. Your private signal is perfect: it is \
                   correct with probability 1, and it indicates A. Of the 16 participants \
                   before you, 15 chose B. What do you choose?"
                .into(),
        }],
        predicate: PassPredicate::ChoiceEquals { label: 'A' },
    });

    // Herding: domain expertise outweighs an uninformed crowd.
    catalog.push(AdversarialScenario {
        id: "adv-herding-expertise".into(),
        bias: BiasKind::Herding,
        title: "expertise mismatch".into(),
        source: CatalogSource::Printed,
        frames: vec![FrameSpec {
            scenario: scenario(
                "adv-herding-expertise",
                BiasKind::Herding,
                ScenarioPayload::Cascade(CascadeScenario {
                    private_signal: Signal::A,
                    signal_accuracy: 0.95,
                    crowd_history: vec![Signal::B; 9],
                }),
            ),
            text: "You are a medical-device specialist judging whether a device is safe. \
                   Option A: safe. Option B: unsafe. Your own detailed analysis clearly \
                   indicates A. The nine previous respondents, all restaurant managers with \
                   no relevant background, chose B. What do you choose?"
                .into(),
        }],
        predicate: PassPredicate::ChoiceEquals { label: 'A' },
    });

    // Representativeness: an exciting story over bankrupt financials.
    catalog.push(AdversarialScenario {
        id: "adv-representativeness-bankruptcy".into(),
        bias: BiasKind::Representativeness,
        title: "narrative vs bankruptcy risk".into(),
        source: CatalogSource::Printed,
        frames: vec![FrameSpec {
            scenario: scenario(
                "adv-representativeness-bankruptcy",
                BiasKind::Representativeness,
                ScenarioPayload::Narrative(NarrativeScenario {
                    narrative_score: 3.8,
                    fundamental_score: 0.2,
                }),
            ),
            text: "A company pitches itself as revolutionary AI healthcare with visionary \
                   leadership and massive potential. Its financials: revenue $2M, expenses \
                   $15M, debt $50M, margins -750%, debt-to-equity 25:1. Rate the overall \
                   quality of the company on a scale from 1 to 10."
                .into(),
        }],
        predicate: PassPredicate::RatingAtMost { rating: 4.0 },
    });

    // Probability weighting: never choose the dominated lottery.
    catalog.push(AdversarialScenario {
        id: "adv-probweight-dominated".into(),
        bias: BiasKind::ProbabilityWeighting,
        title: "dominated lottery".into(),
        source: CatalogSource::Printed,
        frames: vec![FrameSpec {
            scenario: scenario(
                "adv-probweight-dominated",
                BiasKind::ProbabilityWeighting,
                ScenarioPayload::SkewChoice(SkewChoiceScenario {
                    lotteries: vec![
                        Lottery {
                            outcomes: vec![(10_000.0, 0.5)],
                            expected_value: 5000.0,
                        },
                        Lottery {
                            outcomes: vec![(50_000.0, 0.1)],
                            expected_value: 5000.0,
                        },
                        Lottery {
                            outcomes: vec![(40_000.0, 0.1)],
                            expected_value: 4000.0,
                        },
                    ],
                    high_skew_index: 1,
                }),
            ),
            text: "Choose one asset. Asset A: pays $10000 with probability 0.5, otherwise \
                   nothing (expected value $5000). Asset B: pays $50000 with probability 0.1, \
                   otherwise nothing (expected value $5000). Asset C: pays $40000 with \
                   probability 0.1, otherwise nothing (expected value $4000). Which asset do \
                   you choose?"
                .into(),
        }],
        predicate: PassPredicate::ChoiceNotEquals { label: 'C' },
    });

    // Anchoring: a bankruptcy filing voids the listed-price anchor.
    catalog.push(AdversarialScenario {
        id: "adv-anchoring-extreme".into(),
        bias: BiasKind::Anchoring,
        title: "extreme anchor".into(),
        source: CatalogSource::Printed,
        frames: vec![FrameSpec {
            scenario: scenario(
                "adv-anchoring-extreme",
                BiasKind::Anchoring,
                ScenarioPayload::Anchor(AnchorScenario {
                    anchor: 200.0,
                    true_value: 5.0,
                }),
            ),
            text: "An asset currently trades at $200. The company just announced bankruptcy; \
                   liquidation value is $5 per share. State your valuation of the asset."
                .into(),
        }],
        predicate: PassPredicate::ValuationAtMost { price: 10.0 },
    });

    // Extrapolation: an alternating series predicts reversal, not
    // continuation.
    catalog.push(AdversarialScenario {
        id: "adv-extrapolation-reversion".into(),
        bias: BiasKind::Extrapolation,
        title: "mean-reversion pattern".into(),
        source: CatalogSource::Printed,
        frames: vec![FrameSpec {
            scenario: scenario(
                "adv-extrapolation-reversion",
                BiasKind::Extrapolation,
                ScenarioPayload::Forecast(ForecastScenario {
                    return_history: vec![0.08, -0.07, 0.09, -0.08, 0.10, -0.09, 0.12],
                }),
            ),
            text: "Monthly returns over the last seven months: +8%, -7%, +9%, -8%, +10%, -9%, \
                   and this month +12%. Every up month has been followed by a down month. \
                   Forecast next month's return."
                .into(),
        }],
        predicate: PassPredicate::ForecastBelow { value: 0.0 },
    });

    // Loss aversion: the same gamble in two frames must get one decision.
    let framing_gamble = ScenarioPayload::Gamble(GambleScenario {
        gain: 150.0,
        loss: 100.0,
        prob: 0.5,
    });
    catalog.push(AdversarialScenario {
        id: "adv-lossaversion-framing".into(),
        bias: BiasKind::LossAversion,
        title: "framing manipulation".into(),
        source: CatalogSource::Printed,
        frames: vec![
            FrameSpec {
                scenario: scenario(
                    "adv-lossaversion-framing-gain",
                    BiasKind::LossAversion,
                    framing_gamble.clone(),
                ),
                text: "You are offered a gamble: with probability 0.5 you gain $150, with \
                       probability 0.5 you lose $100. Do you accept?"
                    .into(),
            },
            FrameSpec {
                scenario: scenario(
                    "adv-lossaversion-framing-loss",
                    BiasKind::LossAversion,
                    framing_gamble,
                ),
                text: "You hold $100. You may keep it for certain, or put it at risk: with \
                       probability 0.5 you end with $250, with probability 0.5 you end with \
                       $0. Accepting the risk is the same as accepting a 50-50 gamble to gain \
                       $150 or lose your $100. Do you accept the risk?"
                    .into(),
            },
        ],
        predicate: PassPredicate::ConsistentAcceptReject,
    });

    // Extension — anchoring from below: a stale $5 listing against credible
    // $150 fundamentals.
    catalog.push(AdversarialScenario {
        id: "adv-anchoring-low".into(),
        bias: BiasKind::Anchoring,
        title: "stale low anchor".into(),
        source: CatalogSource::Extension,
        frames: vec![FrameSpec {
            scenario: scenario(
                "adv-anchoring-low",
                BiasKind::Anchoring,
                ScenarioPayload::Anchor(AnchorScenario {
                    anchor: 5.0,
                    true_value: 150.0,
                }),
            ),
            text: "A stock last traded at $5 before a long halt. Since then the company won a \
                   landmark settlement: audited net cash is now $150 per share with no \
                   liabilities. Trading resumes tomorrow. State your valuation of the stock."
                .into(),
        }],
        predicate: PassPredicate::ValuationAtLeast { price: 100.0 },
    });

    // Extension — representativeness with a dull story and stellar
    // financials.
    catalog.push(AdversarialScenario {
        id: "adv-representativeness-dull".into(),
        bias: BiasKind::Representativeness,
        title: "dull story, strong fundamentals".into(),
        source: CatalogSource::Extension,
        frames: vec![FrameSpec {
            scenario: scenario(
                "adv-representativeness-dull",
                BiasKind::Representativeness,
                ScenarioPayload::Narrative(NarrativeScenario {
                    narrative_score: 0.5,
                    fundamental_score: 3.9,
                }),
            ),
            text: "A company distributes industrial fasteners; the business story is \
                   unremarkable. Its financials: revenue $80M growing 12% a year, 30% \
                   operating margins, no debt, and consistent free cash flow. Rate the \
                   overall quality of the company on a scale from 1 to 10."
                .into(),
        }],
        predicate: PassPredicate::RatingAtLeast { rating: 7.0 },
    });

    debug_assert_eq!(catalog.len(), 14);
    catalog
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::parse;

    fn find(catalog: &[AdversarialScenario], id: &str) -> AdversarialScenario {
        catalog.iter().find(|a| a.id == id).unwrap().clone()
    }

    #[test]
    fn catalog_has_fourteen_entries_with_unique_ids() {
        let catalog = adversarial_catalog();
        assert_eq!(catalog.len(), 14);
        let mut ids: Vec<&str> = catalog.iter().map(|a| a.id.as_str()).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), 14);
        assert_eq!(
            catalog
                .iter()
                .filter(|a| a.source == CatalogSource::Printed)
                .count(),
            12
        );
    }

    #[test]
    fn interval_width_predicates() {
        let catalog = adversarial_catalog();
        let vol = find(&catalog, "adv-overconfidence-volatility");
        let wide = parse("ANSWER: [1.0, 6.5]", super::super::AnswerShape::Interval);
        assert_eq!(evaluate_pass(&vol, &[wide]), PassOutcome::Pass);
        let narrow = parse("ANSWER: [4, 6]", super::super::AnswerShape::Interval);
        assert_eq!(evaluate_pass(&vol, &[narrow]), PassOutcome::Fail);
    }

    #[test]
    fn valuation_and_rating_predicates() {
        let catalog = adversarial_catalog();
        let anchor = find(&catalog, "adv-anchoring-extreme");
        let ok = parse("ANSWER: 5", super::super::AnswerShape::Valuation);
        assert_eq!(evaluate_pass(&anchor, &[ok]), PassOutcome::Pass);
        let anchored = parse("ANSWER: 150", super::super::AnswerShape::Valuation);
        assert_eq!(evaluate_pass(&anchor, &[anchored]), PassOutcome::Fail);

        let bankrupt = find(&catalog, "adv-representativeness-bankruptcy");
        let low = parse("ANSWER: 3", super::super::AnswerShape::Rating);
        assert_eq!(evaluate_pass(&bankrupt, &[low]), PassOutcome::Pass);
    }

    #[test]
    fn framing_needs_consistent_pair() {
        let catalog = adversarial_catalog();
        let framing = find(&catalog, "adv-lossaversion-framing");
        let accept = parse("ANSWER: ACCEPT", super::super::AnswerShape::AcceptReject);
        let reject = parse("ANSWER: REJECT", super::super::AnswerShape::AcceptReject);
        assert_eq!(
            evaluate_pass(&framing, &[accept.clone(), accept.clone()]),
            PassOutcome::Pass
        );
        assert_eq!(
            evaluate_pass(&framing, &[reject.clone(), reject.clone()]),
            PassOutcome::Pass
        );
        assert_eq!(
            evaluate_pass(&framing, &[accept.clone(), reject]),
            PassOutcome::Fail
        );
        assert_eq!(evaluate_pass(&framing, &[accept]), PassOutcome::Unparsed);
    }

    #[test]
    fn unparsed_counts_separately() {
        let catalog = adversarial_catalog();
        let anchor = find(&catalog, "adv-anchoring-extreme");
        let garbage = parse("no idea", super::super::AnswerShape::Valuation);
        assert_eq!(evaluate_pass(&anchor, &[garbage]), PassOutcome::Unparsed);

        let mut table = PassRateTable::default();
        table.row_mut(BiasKind::Anchoring).record(PassOutcome::Pass);
        table.row_mut(BiasKind::Anchoring).record(PassOutcome::Unparsed);
        let row = &table.rows[0].1;
        assert_eq!(row.passes, 1);
        assert_eq!(row.unparsed, 1);
        assert_eq!(row.rate(), 0.5);
    }

    #[test]
    fn evaluation_is_pure() {
        let catalog = adversarial_catalog();
        let dominated = find(&catalog, "adv-probweight-dominated");
        let resp = parse("ANSWER: C", super::super::AnswerShape::OptionChoice);
        let first = evaluate_pass(&dominated, std::slice::from_ref(&resp));
        let second = evaluate_pass(&dominated, &[resp]);
        assert_eq!(first, second);
        assert_eq!(first, PassOutcome::Fail);
    }

    #[test]
    fn threshold_logic() {
        let mut table = PassRateTable::default();
        for _ in 0..7 {
            table.row_mut(BiasKind::Herding).record(PassOutcome::Pass);
        }
        for _ in 0..3 {
            table.row_mut(BiasKind::Herding).record(PassOutcome::Fail);
        }
        assert!(table.meets_threshold(BiasKind::Herding));
        table.row_mut(BiasKind::Herding).record(PassOutcome::Fail);
        assert!(!table.meets_threshold(BiasKind::Herding));
    }
}
