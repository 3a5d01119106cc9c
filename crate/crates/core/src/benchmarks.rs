//! Human benchmark registry for the eight measured biases.
//!
//! The registry ships with canonical point estimates and ranges from the
//! experimental literature and can be swapped out from a TOML file (one
//! table per bias) for benchmark-sensitivity analysis.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// The eight measured biases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BiasKind {
    LossAversion,
    Disposition,
    Overconfidence,
    Herding,
    Representativeness,
    ProbabilityWeighting,
    Anchoring,
    Extrapolation,
}

impl BiasKind {
    pub const ALL: [BiasKind; 8] = [
        BiasKind::LossAversion,
        BiasKind::Disposition,
        BiasKind::Overconfidence,
        BiasKind::Herding,
        BiasKind::Representativeness,
        BiasKind::ProbabilityWeighting,
        BiasKind::Anchoring,
        BiasKind::Extrapolation,
    ];

    pub fn slug(self) -> &'static str {
        match self {
            BiasKind::LossAversion => "loss-aversion",
            BiasKind::Disposition => "disposition",
            BiasKind::Overconfidence => "overconfidence",
            BiasKind::Herding => "herding",
            BiasKind::Representativeness => "representativeness",
            BiasKind::ProbabilityWeighting => "probability-weighting",
            BiasKind::Anchoring => "anchoring",
            BiasKind::Extrapolation => "extrapolation",
        }
    }

    pub fn from_slug(s: &str) -> Option<Self> {
        BiasKind::ALL.into_iter().find(|b| b.slug() == s)
    }
}

impl std::fmt::Display for BiasKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.slug())
    }
}

/// A human benchmark: point estimate plus the heterogeneity range.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Benchmark {
    pub bias: BiasKind,
    pub point: f64,
    pub lo: f64,
    pub hi: f64,
    pub source_note: String,
}

#[derive(Debug, Error)]
pub enum BenchmarkError {
    #[error("benchmark for {bias} violates lo <= point <= hi ({lo}, {point}, {hi})")]
    Disordered {
        bias: BiasKind,
        lo: f64,
        point: f64,
        hi: f64,
    },
    #[error("registry missing bias {0}")]
    Missing(BiasKind),
    #[error("registry has {0} entries, expected exactly 8")]
    WrongCount(usize),
    #[error("unknown bias key `{0}` in benchmark file")]
    UnknownKey(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("toml: {0}")]
    Toml(#[from] toml::de::Error),
}

impl Benchmark {
    pub fn new(
        bias: BiasKind,
        point: f64,
        lo: f64,
        hi: f64,
        source_note: &str,
    ) -> Result<Self, BenchmarkError> {
        if !(lo <= point && point <= hi) {
            return Err(BenchmarkError::Disordered {
                bias,
                lo,
                point,
                hi,
            });
        }
        Ok(Self {
            bias,
            point,
            lo,
            hi,
            source_note: source_note.to_string(),
        })
    }
}

/// Registry holding exactly one benchmark per bias.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkRegistry {
    entries: BTreeMap<BiasKind, Benchmark>,
}

impl BenchmarkRegistry {
    /// The shipped registry.
    ///
    /// Units: loss aversion is the λ multiplier; disposition the sell-rate
    /// ratio; overconfidence the coverage miscalibration in percentage
    /// points against a nominal 80% interval; herding the conflict-trial
    /// crowd-follow rate; representativeness the narrative/fundamental
    /// weight ratio; probability weighting the high-skew choice rate;
    /// anchoring the anchor-valuation correlation; extrapolation the
    /// forecast coefficient on the most recent return.
    pub fn shipped() -> Self {
        let mk = |bias, point, lo, hi, note: &str| {
            Benchmark::new(bias, point, lo, hi, note).expect("shipped registry ordered")
        };
        let entries = [
            mk(
                BiasKind::LossAversion,
                2.25,
                2.00,
                2.50,
                "choice experiments, N=300; endowment and meta-analytic support",
            ),
            mk(
                BiasKind::Disposition,
                1.60,
                1.30,
                2.00,
                "brokerage field data (10k accounts) and lab replications",
            ),
            mk(
                BiasKind::Overconfidence,
                15.0,
                12.0,
                18.0,
                "meta-analysis of interval-calibration studies; pp miscalibration of 80% intervals",
            ),
            mk(
                BiasKind::Herding,
                0.70,
                0.65,
                0.75,
                "information-cascade lab experiments, conflict-trial follow rate",
            ),
            mk(
                BiasKind::Representativeness,
                1.65,
                1.50,
                1.80,
                "narrative vs fundamental weighting elicitations; field glamour/value evidence",
            ),
            mk(
                BiasKind::ProbabilityWeighting,
                0.35,
                0.30,
                0.40,
                "high-skew choice rate at equal stated expected value, N=412",
            ),
            mk(
                BiasKind::Anchoring,
                0.43,
                0.38,
                0.52,
                "valuation-anchor correlations, expert and novice samples",
            ),
            mk(
                BiasKind::Extrapolation,
                0.60,
                0.55,
                0.65,
                "forecast-on-past-return coefficients, lab and survey",
            ),
        ];
        Self {
            entries: entries.into_iter().map(|b| (b.bias, b)).collect(),
        }
    }

    pub fn get(&self, bias: BiasKind) -> &Benchmark {
        &self.entries[&bias]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Benchmark> {
        self.entries.values()
    }

    /// Serialize as a TOML document, one `[bias-slug]` table per entry.
    pub fn to_toml(&self) -> String {
        let mut out = String::from("# benchmark registry: one table per bias\n");
        for b in self.entries.values() {
            out.push_str(&format!(
                "\n[{}]\npoint = {}\nlo = {}\nhi = {}\nsource_note = {}\n",
                b.bias.slug(),
                b.point,
                b.lo,
                b.hi,
                toml::Value::String(b.source_note.clone()),
            ));
        }
        out
    }

    pub fn save(&self, path: &Path) -> Result<(), BenchmarkError> {
        std::fs::write(path, self.to_toml())?;
        Ok(())
    }

    /// Parse a registry from TOML. Requires exactly the eight biases, each
    /// satisfying `lo <= point <= hi`.
    pub fn from_toml(text: &str) -> Result<Self, BenchmarkError> {
        #[derive(Deserialize)]
        struct Raw {
            point: f64,
            lo: f64,
            hi: f64,
            #[serde(default)]
            source_note: String,
        }
        let table: BTreeMap<String, Raw> = toml::from_str(text)?;
        let mut entries = BTreeMap::new();
        for (key, raw) in table {
            let bias = BiasKind::from_slug(&key).ok_or(BenchmarkError::UnknownKey(key))?;
            let b = Benchmark::new(bias, raw.point, raw.lo, raw.hi, &raw.source_note)?;
            entries.insert(bias, b);
        }
        if entries.len() != 8 {
            return Err(BenchmarkError::WrongCount(entries.len()));
        }
        Ok(Self { entries })
    }

    pub fn load(path: &Path) -> Result<Self, BenchmarkError> {
        Self::from_toml(&std::fs::read_to_string(path)?)
    }
}

impl Default for BenchmarkRegistry {
    fn default() -> Self {
        Self::shipped()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_registry_has_expected_values() {
        let reg = BenchmarkRegistry::shipped();
        assert_eq!(reg.iter().count(), 8);
        let expect = [
            (BiasKind::LossAversion, 2.25, 2.00, 2.50),
            (BiasKind::Disposition, 1.60, 1.30, 2.00),
            (BiasKind::Overconfidence, 15.0, 12.0, 18.0),
            (BiasKind::Herding, 0.70, 0.65, 0.75),
            (BiasKind::Representativeness, 1.65, 1.50, 1.80),
            (BiasKind::ProbabilityWeighting, 0.35, 0.30, 0.40),
            (BiasKind::Anchoring, 0.43, 0.38, 0.52),
            (BiasKind::Extrapolation, 0.60, 0.55, 0.65),
        ];
        for (bias, point, lo, hi) in expect {
            let b = reg.get(bias);
            assert_eq!((b.point, b.lo, b.hi), (point, lo, hi), "{bias}");
            assert!(b.lo <= b.point && b.point <= b.hi);
        }
    }

    #[test]
    fn toml_round_trip() {
        let reg = BenchmarkRegistry::shipped();
        let text = reg.to_toml();
        let back = BenchmarkRegistry::from_toml(&text).unwrap();
        assert_eq!(reg, back);
    }

    #[test]
    fn rejects_disordered_and_incomplete() {
        assert!(Benchmark::new(BiasKind::Herding, 0.9, 0.65, 0.75, "x").is_err());
        let text = "[herding]\npoint = 0.7\nlo = 0.65\nhi = 0.75\n";
        assert!(matches!(
            BenchmarkRegistry::from_toml(text),
            Err(BenchmarkError::WrongCount(1))
        ));
    }
}
