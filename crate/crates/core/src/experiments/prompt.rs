//! Prompt rendering: a profile frame, the scenario block, and a strict
//! response-format instruction matching the answer grammar.
//!
//! Templates are plain text with `{scenario}` and `{response_format}`
//! placeholders. A default set is embedded; a directory of `.txt` files
//! with the same names can override it. Biased profiles come in three
//! intensity grades (mild / standard / strong); strength 0 always renders
//! the rational template.

use std::collections::BTreeMap;
use std::path::Path;

use super::response::AnswerShape;
use super::scenario::{Scenario, ScenarioPayload, Signal};
use super::ExperimentError;
use crate::params::{Profile, ProfileKind};

/// A named set of prompt templates.
#[derive(Debug, Clone)]
pub struct TemplateSet {
    templates: BTreeMap<String, String>,
}

macro_rules! embedded {
    ($($name:literal),+ $(,)?) => {
        [$(($name, include_str!(concat!("../../templates/", $name, ".txt")))),+]
    };
}

const EMBEDDED: [(&str, &str); 16] = embedded![
    "rational",
    "loss-averse-mild",
    "loss-averse-standard",
    "loss-averse-strong",
    "overconfident-mild",
    "overconfident-standard",
    "overconfident-strong",
    "herding-prone-mild",
    "herding-prone-standard",
    "herding-prone-strong",
    "representativeness-biased-mild",
    "representativeness-biased-standard",
    "representativeness-biased-strong",
    "extrapolative-mild",
    "extrapolative-standard",
    "extrapolative-strong",
];

impl TemplateSet {
    /// The embedded default templates.
    pub fn embedded() -> Self {
        Self {
            templates: EMBEDDED
                .iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect(),
        }
    }

    /// Load `<name>.txt` files from a directory, falling back to the
    /// embedded set for names not present.
    pub fn from_dir(dir: &Path) -> Result<Self, ExperimentError> {
        let mut set = Self::embedded();
        for entry in std::fs::read_dir(dir)? {
            let path = entry?.path();
            if path.extension().and_then(|e| e.to_str()) == Some("txt") {
                if let Some(stem) = path.file_stem().and_then(|s| s.to_str()) {
                    set.templates
                        .insert(stem.to_string(), std::fs::read_to_string(&path)?);
                }
            }
        }
        Ok(set)
    }

    fn template_name(profile: &Profile) -> String {
        if profile.kind == ProfileKind::Rational || profile.strength <= 0.0 {
            return "rational".to_string();
        }
        let grade = if profile.strength <= 0.45 {
            "mild"
        } else if profile.strength <= 0.8 {
            "standard"
        } else {
            "strong"
        };
        format!("{}-{}", profile.template_id, grade)
    }

    fn get(&self, profile: &Profile) -> Result<&str, ExperimentError> {
        let name = Self::template_name(profile);
        self.templates
            .get(&name)
            .map(String::as_str)
            .ok_or(ExperimentError::MissingTemplate(name))
    }
}

/// Render the full prompt for one (profile, scenario) pair.
pub fn render_prompt(
    templates: &TemplateSet,
    profile: &Profile,
    scenario: &Scenario,
) -> Result<String, ExperimentError> {
    let template = templates.get(profile)?;
    let text = render_scenario_text(&scenario.payload);
    let format = response_instructions(scenario.answer_shape());
    Ok(template
        .replace("{scenario}", &text)
        .replace("{response_format}", format))
}

/// The strict final-line instruction for each answer shape.
pub fn response_instructions(shape: AnswerShape) -> &'static str {
    match shape {
        AnswerShape::AcceptReject => {
            "End your reply with exactly one final line of the form `ANSWER: ACCEPT` or `ANSWER: REJECT`."
        }
        AnswerShape::OptionChoice => {
            "End your reply with exactly one final line of the form `ANSWER: <option letter>`."
        }
        AnswerShape::Sell => {
            "End your reply with exactly one final line of the form `ANSWER: SELL <position number>`."
        }
        AnswerShape::Interval => {
            "End your reply with exactly one final line of the form `ANSWER: [<low>, <high>]`."
        }
        AnswerShape::Valuation => {
            "End your reply with exactly one final line of the form `ANSWER: <price>`."
        }
        AnswerShape::Rating => {
            "End your reply with exactly one final line of the form `ANSWER: <rating between 1 and 10>`."
        }
        AnswerShape::Forecast => {
            "End your reply with exactly one final line of the form `ANSWER: <return as a decimal, e.g. 0.025>`."
        }
    }
}

/// Render the respondent-visible scenario block. Numbers are printed with
/// `Display`, whose shortest-round-trip form parses back to the exact f64.
pub fn render_scenario_text(payload: &ScenarioPayload) -> String {
    match payload {
        ScenarioPayload::Gamble(g) => format!(
            "You are offered a one-shot gamble: with probability {} you gain ${}, \
             and with probability {} you lose ${}. Do you accept the gamble?",
            g.prob,
            g.gain,
            1.0 - g.prob,
            g.loss
        ),
        ScenarioPayload::Portfolio(p) => {
            let mut text = String::from(
                "You hold the following positions and must sell exactly one of them today:\n",
            );
            for (i, pos) in p.positions.iter().enumerate() {
                text.push_str(&format!(
                    "Position {}: purchased at ${}, current price ${}\n",
                    i + 1,
                    pos.purchase_price,
                    pos.current_price
                ));
            }
            text.push_str(
                "All positions have identical expected returns going forward. Which position do you sell?",
            );
            text
        }
        ScenarioPayload::Interval(iv) => {
            let history = join_numbers(&iv.history, "$");
            format!(
                "A company's quarterly earnings history, in millions and oldest first, is: {}. \
                 Provide an interval you believe has probability {} of containing next quarter's earnings.",
                history, iv.target_coverage
            )
        }
        ScenarioPayload::Cascade(c) => {
            let crowd: Vec<String> = c.crowd_history.iter().map(signal_name).collect();
            format!(
                "You must choose option A or option B; exactly one is correct. Your private signal, \
                 which is correct with probability {}, points to option {}. The {} participants before \
                 you chose, in order: {}. Each of them had a private signal of the same accuracy as yours. \
                 What do you choose?",
                c.signal_accuracy,
                signal_name(&c.private_signal),
                c.crowd_history.len(),
                crowd.join(", ")
            )
        }
        ScenarioPayload::Narrative(nr) => format!(
            "An analyst scored a company on two dimensions, each from 0 (worst) to 4 (best). \
             Story appeal of the business narrative: {}. Strength of the financial fundamentals: {}. \
             Rate the overall quality of the company on a scale from 1 to 10.",
            nr.narrative_score, nr.fundamental_score
        ),
        ScenarioPayload::SkewChoice(sc) => {
            let mut text =
                String::from("Choose exactly one of the following assets to hold for one period:\n");
            for (i, lot) in sc.lotteries.iter().enumerate() {
                let label = (b'A' + i as u8) as char;
                let branches: Vec<String> = lot
                    .outcomes
                    .iter()
                    .map(|(payoff, prob)| format!("pays ${payoff} with probability {prob}"))
                    .collect();
                text.push_str(&format!(
                    "Asset {}: {}, otherwise pays nothing (stated expected value ${})\n",
                    label,
                    branches.join("; "),
                    lot.expected_value
                ));
            }
            text.push_str("Which asset do you choose?");
            text
        }
        ScenarioPayload::Anchor(a) => format!(
            "A stock you are researching most recently traded at ${}. An independent fundamental \
             analysis that you consider credible estimates its intrinsic value at ${}. \
             State your own valuation of the stock.",
            a.anchor, a.true_value
        ),
        ScenarioPayload::Forecast(f) => {
            let history = join_numbers(&f.return_history, "");
            format!(
                "An asset's monthly returns over the past {} months, as decimals and oldest first, \
                 were: {}. Forecast next month's return.",
                f.return_history.len(),
                history
            )
        }
    }
}

fn signal_name(s: &Signal) -> String {
    s.letter().to_string()
}

fn join_numbers(xs: &[f64], prefix: &str) -> String {
    xs.iter()
        .map(|x| format!("{prefix}{x}"))
        .collect::<Vec<_>>()
        .join(", ")
}
