//! Behavioral parameter vectors and calibration profiles.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Violation of a parameter bound.
#[derive(Debug, Error, PartialEq)]
#[error("parameter {name} = {value} outside {bound}")]
pub struct ParamError {
    pub name: &'static str,
    pub value: f64,
    pub bound: &'static str,
}

/// The full set of behavioral parameters carried by a synthetic respondent
/// and recovered by the estimators.
///
/// Bounds are enforced by [`ParameterVector::validate`], which every
/// constructor in this crate calls. `gamma_weight` is restricted to
/// `[0.3, 1]`: the weighting function is non-monotone for very small
/// exponents and nothing in the measured range goes below ~0.65.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParameterVector {
    /// Loss-aversion multiplier λ ≥ 0.
    pub lambda: f64,
    /// Gain-side curvature exponent α ∈ (0, 1].
    pub alpha_gain: f64,
    /// Loss-side curvature exponent β ∈ (0, 1].
    pub beta_loss: f64,
    /// Probability-weighting curvature γ ∈ [0.3, 1].
    pub gamma_weight: f64,
    /// Precision-inflation factor κ > 0; κ > 1 means overconfident.
    pub kappa: f64,
    /// Extrapolation coefficient θ (unbounded, finite).
    pub theta: f64,
    /// Crowd-following weight w ∈ [0, 1].
    pub w_herd: f64,
    /// Anchor adjustment fraction a ∈ [0, 1]; 1 = full adjustment to truth.
    pub a_adjust: f64,
    /// Narrative-to-fundamental weight ratio τ_N/τ_F ≥ 0.
    pub tau_ratio: f64,
    /// Risk-aversion coefficient for asset demand, > 0 (used by the ABM only).
    pub gamma_risk: f64,
}

impl ParameterVector {
    /// The rational preset: no bias on any dimension. Herding weight 0 means
    /// the crowd is followed only when the private signal already agrees.
    pub fn rational() -> Self {
        Self {
            lambda: 1.0,
            alpha_gain: 1.0,
            beta_loss: 1.0,
            gamma_weight: 1.0,
            kappa: 1.0,
            theta: 0.0,
            w_herd: 0.0,
            a_adjust: 1.0,
            tau_ratio: 1.0,
            gamma_risk: 2.0,
        }
    }

    /// Check every bound; all fields must also be finite.
    pub fn validate(&self) -> Result<(), ParamError> {
        fn check(
            name: &'static str,
            value: f64,
            ok: bool,
            bound: &'static str,
        ) -> Result<(), ParamError> {
            if value.is_finite() && ok {
                Ok(())
            } else {
                Err(ParamError { name, value, bound })
            }
        }
        check("lambda", self.lambda, self.lambda >= 0.0, ">= 0")?;
        check(
            "alpha_gain",
            self.alpha_gain,
            self.alpha_gain > 0.0 && self.alpha_gain <= 1.0,
            "(0, 1]",
        )?;
        check(
            "beta_loss",
            self.beta_loss,
            self.beta_loss > 0.0 && self.beta_loss <= 1.0,
            "(0, 1]",
        )?;
        check(
            "gamma_weight",
            self.gamma_weight,
            (0.3..=1.0).contains(&self.gamma_weight),
            "[0.3, 1]",
        )?;
        check("kappa", self.kappa, self.kappa > 0.0, "> 0")?;
        check("theta", self.theta, true, "finite")?;
        check(
            "w_herd",
            self.w_herd,
            (0.0..=1.0).contains(&self.w_herd),
            "[0, 1]",
        )?;
        check(
            "a_adjust",
            self.a_adjust,
            (0.0..=1.0).contains(&self.a_adjust),
            "[0, 1]",
        )?;
        check("tau_ratio", self.tau_ratio, self.tau_ratio >= 0.0, ">= 0")?;
        check("gamma_risk", self.gamma_risk, self.gamma_risk > 0.0, "> 0")?;
        Ok(())
    }

    /// Validating builder-style update, used by the profile interpolator.
    pub fn validated(self) -> Result<Self, ParamError> {
        self.validate().map(|()| self)
    }
}

impl Default for ParameterVector {
    fn default() -> Self {
        Self::rational()
    }
}

/// The six prompt-profile kinds used as calibration instruments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProfileKind {
    Rational,
    LossAverse,
    Overconfident,
    HerdingProne,
    RepresentativenessBiased,
    Extrapolative,
}

impl ProfileKind {
    pub const ALL: [ProfileKind; 6] = [
        ProfileKind::Rational,
        ProfileKind::LossAverse,
        ProfileKind::Overconfident,
        ProfileKind::HerdingProne,
        ProfileKind::RepresentativenessBiased,
        ProfileKind::Extrapolative,
    ];

    /// Stable identifier used in file names and template lookups.
    pub fn slug(self) -> &'static str {
        match self {
            ProfileKind::Rational => "rational",
            ProfileKind::LossAverse => "loss-averse",
            ProfileKind::Overconfident => "overconfident",
            ProfileKind::HerdingProne => "herding-prone",
            ProfileKind::RepresentativenessBiased => "representativeness-biased",
            ProfileKind::Extrapolative => "extrapolative",
        }
    }
}

impl std::fmt::Display for ProfileKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.slug())
    }
}

/// A profile at a given intensity. Strength 0 must reduce every kind to the
/// rational preset in synthetic respondents and to the rational template in
/// prompts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Profile {
    pub kind: ProfileKind,
    /// Intensity s ∈ [0, 1].
    pub strength: f64,
    /// Template identifier; defaults to the kind's slug.
    pub template_id: String,
}

impl Profile {
    pub fn new(kind: ProfileKind, strength: f64) -> Result<Self, ParamError> {
        if !(0.0..=1.0).contains(&strength) || !strength.is_finite() {
            return Err(ParamError {
                name: "strength",
                value: strength,
                bound: "[0, 1]",
            });
        }
        Ok(Self {
            kind,
            strength,
            template_id: kind.slug().to_string(),
        })
    }

    pub fn rational() -> Self {
        Self::new(ProfileKind::Rational, 0.0).expect("valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_preset_is_valid_and_unbiased() {
        let p = ParameterVector::rational();
        p.validate().unwrap();
        assert_eq!(p.lambda, 1.0);
        assert_eq!(p.alpha_gain, 1.0);
        assert_eq!(p.beta_loss, 1.0);
        assert_eq!(p.gamma_weight, 1.0);
        assert_eq!(p.kappa, 1.0);
        assert_eq!(p.theta, 0.0);
        assert_eq!(p.w_herd, 0.0);
        assert_eq!(p.a_adjust, 1.0);
        assert_eq!(p.tau_ratio, 1.0);
    }

    #[test]
    fn bounds_are_enforced() {
        let mut p = ParameterVector::rational();
        p.gamma_weight = 0.2;
        assert!(p.validate().is_err());
        p.gamma_weight = 0.3;
        assert!(p.validate().is_ok());
        p.kappa = 0.0;
        assert!(p.validate().is_err());
        p.kappa = f64::NAN;
        assert!(p.validate().is_err());
    }

    #[test]
    fn profile_strength_bounds() {
        assert!(Profile::new(ProfileKind::LossAverse, 1.0).is_ok());
        assert!(Profile::new(ProfileKind::LossAverse, 1.01).is_err());
        assert!(Profile::new(ProfileKind::LossAverse, -0.1).is_err());
    }
}
