//! Scenario construction for the eight bias experiments, prompt rendering,
//! the structured response grammar, and the adversarial catalog with its
//! machine-evaluable pass predicates.

mod adversarial;
mod prompt;
mod response;
mod scenario;

pub use adversarial::{
    adversarial_catalog, evaluate_pass, AdversarialScenario, CatalogSource, FrameSpec,
    PassOutcome, PassPredicate, PassRateRow, PassRateTable,
};
pub use prompt::{render_prompt, render_scenario_text, response_instructions, TemplateSet};
pub use response::{parse, Answer, AnswerShape, ParsedResponse};
pub use scenario::{
    build_scenario_set, CascadeScenario, GambleScenario, IntervalScenario, Lottery,
    NarrativeScenario, PortfolioPosition, PortfolioScenario, Scenario, ScenarioGenConfig,
    ScenarioPayload, SkewChoiceScenario, Signal, AnchorScenario, ForecastScenario,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error("scenario count must be >= 1")]
    EmptySet,
    #[error("no template for profile `{0}`")]
    MissingTemplate(String),
    #[error("template dir: {0}")]
    Io(#[from] std::io::Error),
    #[error("invalid scenario config: {0}")]
    InvalidConfig(String),
}
