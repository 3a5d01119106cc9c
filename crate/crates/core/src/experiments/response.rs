//! Structured response grammar.
//!
//! Respondents are instructed to end with a single line of the form
//! `ANSWER: <value>`. The parser takes the last conforming line, tolerates
//! surrounding prose, whitespace and case, and never fails hard: garbage
//! yields a `ParsedResponse` with a failure note.

use serde::{Deserialize, Serialize};

/// What kind of answer a scenario expects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AnswerShape {
    AcceptReject,
    OptionChoice,
    Sell,
    Interval,
    Valuation,
    Rating,
    Forecast,
}

/// A parsed structured answer.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Answer {
    AcceptReject { accept: bool },
    /// Single-letter option label (cascade signals, lottery choices).
    OptionChoice { label: char },
    /// 1-based position index as displayed in the prompt.
    Sell { position: usize },
    Interval { lo: f64, hi: f64 },
    Valuation { price: f64 },
    /// Real-valued rating in [1, 10].
    Rating { rating: f64 },
    /// Return per period (decimal, not percent).
    Forecast { value: f64 },
}

/// Parse outcome: the raw text, the answer when one was extracted, and a
/// failure note otherwise.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParsedResponse {
    pub raw: String,
    pub answer: Option<Answer>,
    pub error: Option<String>,
}

impl ParsedResponse {
    pub fn is_ok(&self) -> bool {
        self.answer.is_some()
    }

    fn failed(raw: &str, error: impl Into<String>) -> Self {
        Self {
            raw: raw.to_string(),
            answer: None,
            error: Some(error.into()),
        }
    }

    fn ok(raw: &str, answer: Answer) -> Self {
        Self {
            raw: raw.to_string(),
            answer: Some(answer),
            error: None,
        }
    }
}

/// Extract the payload of the last `ANSWER:` line, if any.
fn last_answer_line(raw: &str) -> Option<&str> {
    raw.lines().rev().find_map(|line| {
        let trimmed = line.trim();
        let lower = trimmed.to_ascii_lowercase();
        lower.strip_prefix("answer").and_then(|rest| {
            let rest = rest.trim_start();
            rest.strip_prefix(':')
                .map(|_| trimmed[trimmed.len() - rest.len() + 1..].trim())
        })
    })
}

fn parse_number(token: &str) -> Option<f64> {
    let cleaned: String = token
        .chars()
        .filter(|c| !matches!(c, '$' | ',' | ' '))
        .collect();
    let (body, percent) = match cleaned.strip_suffix('%') {
        Some(b) => (b, true),
        None => (cleaned.as_str(), false),
    };
    body.parse::<f64>()
        .ok()
        .map(|v| if percent { v / 100.0 } else { v })
        .filter(|v| v.is_finite())
}

/// Parse `raw` against the expected shape.
pub fn parse(raw: &str, shape: AnswerShape) -> ParsedResponse {
    let Some(body) = last_answer_line(raw) else {
        return ParsedResponse::failed(raw, "no ANSWER line");
    };
    if body.is_empty() {
        return ParsedResponse::failed(raw, "empty ANSWER line");
    }
    let upper = body.to_ascii_uppercase();
    match shape {
        AnswerShape::AcceptReject => {
            let word = upper.split_whitespace().next().unwrap_or("");
            match word {
                "ACCEPT" => ParsedResponse::ok(raw, Answer::AcceptReject { accept: true }),
                "REJECT" => ParsedResponse::ok(raw, Answer::AcceptReject { accept: false }),
                other => ParsedResponse::failed(raw, format!("expected ACCEPT/REJECT, got {other}")),
            }
        }
        AnswerShape::OptionChoice => {
            // Accept a bare letter, or a letter after a prefix word like
            // "OPTION B" / "ASSET B".
            let token = upper
                .split_whitespace()
                .last()
                .unwrap_or("")
                .trim_matches(|c: char| !c.is_ascii_alphanumeric());
            if token.len() == 1 && token.chars().next().unwrap().is_ascii_uppercase() {
                ParsedResponse::ok(
                    raw,
                    Answer::OptionChoice {
                        label: token.chars().next().unwrap(),
                    },
                )
            } else {
                ParsedResponse::failed(raw, format!("expected a single option letter, got {body}"))
            }
        }
        AnswerShape::Sell => {
            let token = upper
                .split_whitespace()
                .last()
                .unwrap_or("")
                .trim_matches(|c: char| !c.is_ascii_alphanumeric());
            match token.parse::<usize>() {
                Ok(position) if position >= 1 => {
                    ParsedResponse::ok(raw, Answer::Sell { position })
                }
                _ => ParsedResponse::failed(raw, format!("expected SELL <index>, got {body}")),
            }
        }
        AnswerShape::Interval => {
            let inner = body
                .trim_start_matches(['[', '('])
                .trim_end_matches([']', ')']);
            let parts: Vec<&str> = inner.split([',', ';']).map(str::trim).collect();
            if parts.len() != 2 {
                return ParsedResponse::failed(raw, format!("expected [lo, hi], got {body}"));
            }
            match (parse_number(parts[0]), parse_number(parts[1])) {
                (Some(a), Some(b)) => {
                    // Tolerate reversed bounds.
                    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
                    ParsedResponse::ok(raw, Answer::Interval { lo, hi })
                }
                _ => ParsedResponse::failed(raw, format!("unparseable interval {body}")),
            }
        }
        AnswerShape::Valuation => match parse_number(body) {
            Some(price) => ParsedResponse::ok(raw, Answer::Valuation { price }),
            None => ParsedResponse::failed(raw, format!("unparseable valuation {body}")),
        },
        AnswerShape::Rating => match parse_number(body) {
            Some(r) if (1.0..=10.0).contains(&r) => {
                ParsedResponse::ok(raw, Answer::Rating { rating: r })
            }
            Some(r) => ParsedResponse::failed(raw, format!("rating {r} outside [1, 10]")),
            None => ParsedResponse::failed(raw, format!("unparseable rating {body}")),
        },
        AnswerShape::Forecast => match parse_number(body) {
            Some(value) => ParsedResponse::ok(raw, Answer::Forecast { value }),
            None => ParsedResponse::failed(raw, format!("unparseable forecast {body}")),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_final_answer_line_with_prose() {
        let raw = "Thinking it through...\nANSWER: REJECT\nWait.\nanswer:  accept";
        let parsed = parse(raw, AnswerShape::AcceptReject);
        assert_eq!(parsed.answer, Some(Answer::AcceptReject { accept: true }));
    }

    #[test]
    fn interval_forms() {
        let parsed = parse("ANSWER: [1, 9]", AnswerShape::Interval);
        assert_eq!(parsed.answer, Some(Answer::Interval { lo: 1.0, hi: 9.0 }));
        let swapped = parse("ANSWER: [$9.5, $1.5]", AnswerShape::Interval);
        assert_eq!(
            swapped.answer,
            Some(Answer::Interval { lo: 1.5, hi: 9.5 })
        );
        assert!(parse("ANSWER: [1]", AnswerShape::Interval).error.is_some());
    }

    #[test]
    fn garbage_yields_failed_status() {
        let parsed = parse("no answer line here", AnswerShape::Valuation);
        assert!(!parsed.is_ok());
        assert!(parsed.error.is_some());
        assert_eq!(parsed.raw, "no answer line here");
    }

    #[test]
    fn sell_and_options() {
        assert_eq!(
            parse("ANSWER: SELL 2", AnswerShape::Sell).answer,
            Some(Answer::Sell { position: 2 })
        );
        assert_eq!(
            parse("answer: b", AnswerShape::OptionChoice).answer,
            Some(Answer::OptionChoice { label: 'B' })
        );
        assert_eq!(
            parse("ANSWER: OPTION C", AnswerShape::OptionChoice).answer,
            Some(Answer::OptionChoice { label: 'C' })
        );
        assert!(parse("ANSWER: SELL 0", AnswerShape::Sell).error.is_some());
    }

    #[test]
    fn numbers_with_symbols_and_percent() {
        assert_eq!(
            parse("ANSWER: $1,250.50", AnswerShape::Valuation).answer,
            Some(Answer::Valuation { price: 1250.50 })
        );
        assert_eq!(
            parse("ANSWER: -3%", AnswerShape::Forecast).answer,
            Some(Answer::Forecast { value: -0.03 })
        );
        assert_eq!(
            parse("ANSWER: 7.5", AnswerShape::Rating).answer,
            Some(Answer::Rating { rating: 7.5 })
        );
        assert!(parse("ANSWER: 11", AnswerShape::Rating).error.is_some());
    }
}
