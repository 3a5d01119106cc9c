//! Pure decision-theory primitives: the value function, probability
//! weighting, perceived precision, extrapolative forecasts, and anchored
//! valuation. All functions are total over their documented domains and
//! stateless.

use crate::params::ParameterVector;

/// Prospect-theory value of a signed monetary outcome:
/// `x^alpha` for gains, `-lambda * (-x)^beta` for losses, 0 at 0.
pub fn value(x: f64, p: &ParameterVector) -> f64 {
    if x > 0.0 {
        x.powf(p.alpha_gain)
    } else if x < 0.0 {
        -p.lambda * (-x).powf(p.beta_loss)
    } else {
        0.0
    }
}

/// Probability weighting `w(q) = q^g / (q^g + (1-q)^g)^(1/g)` with
/// `g = gamma_weight`. Fixes 0 and 1; identity at g = 1; strictly
/// increasing on [0, 1] for g in the enforced [0.3, 1] domain.
pub fn weight_probability(prob: f64, p: &ParameterVector) -> f64 {
    debug_assert!((0.0..=1.0).contains(&prob), "prob outside [0,1]: {prob}");
    let g = p.gamma_weight;
    if prob <= 0.0 {
        return 0.0;
    }
    if prob >= 1.0 {
        return 1.0;
    }
    let num = prob.powf(g);
    let den = (num + (1.0 - prob).powf(g)).powf(1.0 / g);
    (num / den).clamp(0.0, 1.0)
}

/// Standard deviation as perceived by an agent with precision inflation
/// kappa: `true_sd / sqrt(kappa)`.
pub fn perceived_sd(true_sd: f64, p: &ParameterVector) -> f64 {
    debug_assert!(true_sd >= 0.0);
    true_sd / p.kappa.sqrt()
}

/// Extrapolative one-step forecast `mean + theta * (last - mean)`.
pub fn forecast_return(mean_return: f64, last_return: f64, p: &ParameterVector) -> f64 {
    mean_return + p.theta * (last_return - mean_return)
}

/// Anchored valuation `anchor + a * (true_value - anchor)`; a convex
/// combination of the anchor and the true value.
pub fn anchored_valuation(anchor: f64, true_value: f64, p: &ParameterVector) -> f64 {
    anchor + p.a_adjust * (true_value - anchor)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn with(f: impl FnOnce(&mut ParameterVector)) -> ParameterVector {
        let mut p = ParameterVector::rational();
        f(&mut p);
        p.validate().unwrap();
        p
    }

    #[test]
    fn value_zero_and_signs() {
        let p = with(|p| {
            p.lambda = 2.25;
        });
        assert_eq!(value(0.0, &p), 0.0);
        assert!(value(50.0, &p) > 0.0);
        assert!(value(-50.0, &p) < 0.0);
    }

    #[test]
    fn value_hand_evaluations() {
        // lambda = 2.25, linear curvature: v(-100) = -225, v(+100) = +100.
        let p = with(|p| p.lambda = 2.25);
        assert_eq!(value(-100.0, &p), -225.0);
        assert_eq!(value(100.0, &p), 100.0);
        // Asymmetry ratio at |x| = 100 equals lambda.
        assert!((value(-100.0, &p).abs() / value(100.0, &p) - 2.25).abs() < 1e-12);
    }

    #[test]
    fn value_curvature() {
        let p = with(|p| {
            p.alpha_gain = 0.5;
            p.beta_loss = 0.5;
            p.lambda = 2.0;
        });
        assert!((value(100.0, &p) - 10.0).abs() < 1e-12);
        assert!((value(-100.0, &p) + 20.0).abs() < 1e-12);
    }

    #[test]
    fn weight_identity_and_endpoints() {
        let p = ParameterVector::rational();
        assert_eq!(weight_probability(0.5, &p), 0.5);
        let p65 = with(|p| p.gamma_weight = 0.65);
        assert_eq!(weight_probability(0.0, &p65), 0.0);
        assert_eq!(weight_probability(1.0, &p65), 1.0);
    }

    #[test]
    fn weight_overweights_rare_events() {
        let p65 = with(|p| p.gamma_weight = 0.65);
        let w01 = weight_probability(0.1, &p65);
        // Independent high-precision evaluation of the closed form.
        assert!((w01 - 0.178719267).abs() < 1e-6, "w(0.1) = {w01}");
        assert!(w01 > 0.1);
    }

    #[test]
    fn perceived_sd_cases() {
        let p1 = ParameterVector::rational();
        assert_eq!(perceived_sd(2.5, &p1), 2.5);
        let p4 = with(|p| p.kappa = 4.0);
        assert_eq!(perceived_sd(2.5, &p4), 1.25);
        assert_eq!(perceived_sd(0.0, &p4), 0.0);
    }

    #[test]
    fn forecast_cases() {
        let p0 = ParameterVector::rational();
        assert_eq!(forecast_return(0.0, 0.10, &p0), 0.0);
        let p6 = with(|p| p.theta = 0.60);
        assert!((forecast_return(0.0, 0.10, &p6) - 0.06).abs() < 1e-15);
        // last = mean is a fixed point for any theta.
        let p9 = with(|p| p.theta = 0.9);
        assert_eq!(forecast_return(0.02, 0.02, &p9), 0.02);
    }

    #[test]
    fn anchoring_cases() {
        let full = ParameterVector::rational();
        assert_eq!(anchored_valuation(200.0, 5.0, &full), 5.0);
        let none = with(|p| p.a_adjust = 0.0);
        assert_eq!(anchored_valuation(200.0, 5.0, &none), 200.0);
        let half = with(|p| p.a_adjust = 0.5);
        assert_eq!(anchored_valuation(100.0, 140.0, &half), 120.0);
    }

    #[test]
    fn forecast_is_affine_with_slope_theta() {
        let p = with(|p| p.theta = 0.37);
        let mean = 0.01;
        let f = |last: f64| forecast_return(mean, last, &p);
        let slope = (f(0.3) - f(0.1)) / 0.2;
        assert!((slope - 0.37).abs() < 1e-12);
    }
}
