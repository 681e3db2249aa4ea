//! Expectation and probability bounds for random blowups.
//!
//! A random blowup of a K_s-free (n, d, λ) source stays K_s-free while its
//! independent sets stay rare: the expected number of independent t-sets is
//! exactly `C(N,t) * (independent tuples) / n^t`, and under the tuple upper
//! bound this is capped by `(2e²λN / (n ln²n))^t`. The union bound chains
//! those caps over all constrained colors of an overlay; when the resulting
//! failure probability drops below 1, a witness coloring exists at those
//! parameters.

use num_bigint::BigUint;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::color::RamseyInstance;
use crate::count;
use crate::error::{Error, Result};
use crate::families;
use crate::graph::Graph;
use crate::rng;
use crate::spectral::SpectralCertificate;
use crate::util::{ln_biguint, round_sig12};

use rand_core::RngCore;

/// Exact expected number of independent t-sets in a random blowup of `g`
/// onto `target_n` vertices: `C(N,t) * Pr[t fresh uniform images are
/// pairwise nonadjacent]`, as an exact rational.
pub fn expected_independent_sets(
    g: &Graph,
    target_n: usize,
    t: usize,
    budget: u64,
) -> Result<Ratio<BigUint>> {
    if t > target_n {
        return Err(Error::Precondition(format!(
            "set size {t} exceeds the blowup target {target_n}"
        )));
    }
    let report = count::count_independent_tuples(g, t, budget)?;
    let numer = count::binomial(target_n, t) * report.independent_tuples;
    Ok(Ratio::new(numer, report.total_tuples))
}

// ==================================================================
// the blowup independence bound
// ==================================================================

/// The `(2e²λN / (n ln²n))^t` cap on independent t-sets of a random blowup,
/// in log space.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlowupBoundReport {
    /// Source vertex count n.
    pub vertex_count: usize,
    pub degree: usize,
    pub lambda: f64,
    /// Blowup target N.
    pub target_n: usize,
    /// Independent-set size t.
    pub set_size: usize,
    /// Smallest t the bound is proved for: `2n (ln n)^2 / d`; absent when
    /// d = 0.
    pub length_threshold: Option<f64>,
    pub precondition_met: bool,
    /// `ln(2e²λN / (n ln²n))`; absent when the factor degenerates (λ = 0,
    /// d = 0, or n < 2).
    pub log_factor: Option<f64>,
    /// `t * log_factor`.
    pub log_bound: Option<f64>,
    pub degenerate: bool,
}

/// Evaluates the blowup independence bound for one certificate. Reported,
/// never rejected: unmet thresholds and degenerate certificates come back
/// in the flags.
pub fn blowup_independence_bound(
    cert: &SpectralCertificate,
    target_n: usize,
    t: usize,
) -> Result<BlowupBoundReport> {
    if t == 0 {
        return Err(Error::Precondition("set size must be at least 1".into()));
    }
    if target_n == 0 {
        return Err(Error::Precondition("blowup target must be at least 1".into()));
    }
    let n = cert.vertex_count as f64;
    let d = cert.degree as f64;
    let degenerate = cert.degree == 0 || cert.lambda <= 0.0 || cert.vertex_count < 2;
    let length_threshold =
        (cert.degree > 0).then(|| round_sig12(2.0 * n * n.ln().powi(2) / d));
    let precondition_met = length_threshold.map(|th| t as f64 >= th).unwrap_or(false);
    let (log_factor, log_bound) = if degenerate {
        (None, None)
    } else {
        let e2 = std::f64::consts::E * std::f64::consts::E;
        let factor = (2.0 * e2 * cert.lambda * target_n as f64 / (n * n.ln().powi(2))).ln();
        (
            Some(round_sig12(factor)),
            Some(round_sig12(t as f64 * factor)),
        )
    };
    Ok(BlowupBoundReport {
        vertex_count: cert.vertex_count,
        degree: cert.degree,
        lambda: cert.lambda,
        target_n,
        set_size: t,
        length_threshold,
        precondition_met,
        log_factor,
        log_bound,
        degenerate,
    })
}

// ==================================================================
// union bound over all constrained colors
// ==================================================================

/// The assembled failure-probability bound for one overlay instance:
/// `ln [ C(N,t) * Π_i (2e²λ_i N / (n_i ln²n_i))^t / C(N,t)^k ]`.
/// Negative log predicts a witness exists at these parameters.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnionBoundReport {
    pub instance: RamseyInstance,
    /// ln C(N, t).
    pub log_choose: f64,
    /// One blowup bound per constrained color, in color order.
    pub per_color: Vec<BlowupBoundReport>,
    pub all_preconditions_met: bool,
    /// True when any color's factor degenerated to zero, sending the whole
    /// product (and its log) to -inf.
    pub degenerate: bool,
    /// The assembled log bound; absent exactly when `degenerate`.
    pub log_failure_bound: Option<f64>,
    /// Failure bound below 1 (log < 0), so a witness exists.
    pub predicts_witness: bool,
}

/// Chains per-color blowup bounds into the overlay failure bound. `certs`
/// must supply one certificate per constrained color, in color order.
pub fn union_bound_report(
    certs: &[SpectralCertificate],
    inst: &RamseyInstance,
) -> Result<UnionBoundReport> {
    if certs.len() != inst.constrained_colors() {
        return Err(Error::SizeMismatch {
            expected: inst.constrained_colors(),
            got: certs.len(),
        });
    }
    if inst.final_clique > inst.host_size {
        return Err(Error::Precondition(format!(
            "final clique size {} exceeds the host size {}",
            inst.final_clique, inst.host_size
        )));
    }
    let log_choose = round_sig12(ln_biguint(&count::binomial(
        inst.host_size,
        inst.final_clique,
    )));
    let per_color: Vec<BlowupBoundReport> = certs
        .iter()
        .map(|c| blowup_independence_bound(c, inst.host_size, inst.final_clique))
        .collect::<Result<_>>()?;
    let all_preconditions_met = per_color.iter().all(|b| b.precondition_met);
    let degenerate = per_color.iter().any(|b| b.degenerate);
    let k = inst.constrained_colors() as f64;
    let log_failure_bound = if degenerate {
        None
    } else {
        let sum: f64 = per_color.iter().map(|b| b.log_bound.unwrap_or(0.0)).sum();
        Some(round_sig12((1.0 - k) * log_choose + sum))
    };
    let predicts_witness = degenerate || log_failure_bound.map(|l| l < 0.0).unwrap_or(false);
    Ok(UnionBoundReport {
        instance: inst.clone(),
        log_choose,
        per_color,
        all_preconditions_met,
        degenerate,
        log_failure_bound,
        predicts_witness,
    })
}

// ==================================================================
// parameter suggestion
// ==================================================================

/// Heuristic parameter choices realizing the asymptotic recipe with every
/// hidden constant set to 1: `n_i = (t / ln²t)^{1/α_i}` and
/// `N = t^{S+1} / ln^{2S} t` where `S = Σ (s_i - 2)`. Starting points for a
/// search, not guarantees.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParameterSuggestion {
    pub final_clique: usize,
    /// S = Σ (s_i - 2).
    pub excess_sum: usize,
    /// Real-valued suggested source sizes n_i, one per constrained color.
    pub source_sizes: Vec<f64>,
    /// Real-valued suggested host size N.
    pub host_size: f64,
    /// Always true: the asymptotic constants are existential, so these
    /// numbers are starting points only.
    pub heuristic: bool,
}

/// Suggests source and host sizes for given `(s_i, α_i)` pairs and final
/// clique target `t >= 3`.
pub fn suggest_parameters(
    forbidden_with_alpha: &[(usize, f64)],
    t: usize,
) -> Result<ParameterSuggestion> {
    if t < 3 {
        return Err(Error::Precondition(format!(
            "the suggestion formulas need t >= 3, got {t}"
        )));
    }
    let mut excess_sum = 0;
    let mut source_sizes = Vec::with_capacity(forbidden_with_alpha.len());
    let tf = t as f64;
    let log_sq = tf.ln().powi(2);
    for &(s, alpha) in forbidden_with_alpha {
        if s < 3 {
            return Err(Error::Precondition(format!(
                "forbidden clique sizes must be at least 3, got {s}"
            )));
        }
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::Precondition(format!(
                "weak-optimality parameters must lie in (0, 1], got {alpha}"
            )));
        }
        excess_sum += s - 2;
        source_sizes.push(round_sig12((tf / log_sq).powf(1.0 / alpha)));
    }
    let host_size = round_sig12(tf.powi(excess_sum as i32 + 1) / tf.ln().powi(2 * excess_sum as i32));
    Ok(ParameterSuggestion {
        final_clique: t,
        excess_sum,
        source_sizes,
        host_size,
        heuristic: true,
    })
}

// ==================================================================
// Monte Carlo check of the exact expectation
// ==================================================================

/// Empirical check of [`expected_independent_sets`]: many seeded random
/// blowups, the independent t-sets of each counted exactly.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExpectationSampleReport {
    pub source_n: usize,
    pub target_n: usize,
    pub set_size: usize,
    pub trials: u64,
    pub seed: u64,
    /// The exact expectation as a reduced fraction "p/q".
    pub expected: String,
    pub expected_value: f64,
    pub empirical_mean: f64,
    /// Standard error of the empirical mean.
    pub std_error: f64,
    /// (mean - expectation) / std_error; absent when the variance vanished.
    pub z_score: Option<f64>,
    pub within_three_std_errors: bool,
    /// Clique size whose absence was checked on every sampled blowup, when
    /// requested.
    pub forbidden_clique: Option<usize>,
    /// Sampled blowups containing the forbidden clique (must stay 0: blowups
    /// can only lose cliques).
    pub clique_violations: u64,
}

/// Runs `trials` random blowups of `g` onto `target_n` vertices (trial `j`
/// draws its blowup seed from stream `j` of `seed`), counts independent
/// `t`-sets exactly in each, and compares the mean against the exact
/// expectation. When `forbidden_clique` is given, additionally verifies
/// every sampled blowup is free of that clique.
pub fn sample_expectation(
    g: &Graph,
    target_n: usize,
    t: usize,
    trials: u64,
    seed: u64,
    forbidden_clique: Option<usize>,
    budget: u64,
) -> Result<ExpectationSampleReport> {
    if trials == 0 {
        return Err(Error::Precondition("trial count must be at least 1".into()));
    }
    let expected = expected_independent_sets(g, target_n, t, budget)?;
    let expected_value = (ln_biguint(expected.numer()) - ln_biguint(expected.denom())).exp();

    let mut sum = 0.0f64;
    let mut sum_sq = 0.0f64;
    let mut clique_violations = 0;
    for trial in 1..=trials {
        let blowup_seed = rng::trial_rng(seed, trial).next_u64();
        let (blown, _) = families::random_blowup(g, target_n, blowup_seed)?;
        let count = if t == 2 {
            // independent pairs are just non-edges
            (target_n * (target_n - 1) / 2 - blown.edge_count()) as f64
        } else {
            let profile = count::independence_profile(&blown, t, budget)?;
            profile
                .get(t)
                .map(|c| (ln_biguint(c)).exp())
                .unwrap_or(0.0)
        };
        sum += count;
        sum_sq += count * count;
        if let Some(s) = forbidden_clique {
            if !crate::clique::is_clique_free(&blown, s) {
                clique_violations += 1;
            }
        }
    }
    let mean = sum / trials as f64;
    let variance = if trials > 1 {
        ((sum_sq - sum * sum / trials as f64) / (trials as f64 - 1.0)).max(0.0)
    } else {
        0.0
    };
    let std_error = (variance / trials as f64).sqrt();
    let z_score = (std_error > 0.0).then(|| round_sig12((mean - expected_value) / std_error));
    let within_three_std_errors = match z_score {
        Some(z) => z.abs() <= 3.0,
        None => (mean - expected_value).abs() < 1e-9,
    };
    Ok(ExpectationSampleReport {
        source_n: g.n(),
        target_n,
        set_size: t,
        trials,
        seed,
        expected: format!("{}/{}", expected.numer(), expected.denom()),
        expected_value: round_sig12(expected_value),
        empirical_mean: round_sig12(mean),
        std_error: round_sig12(std_error),
        z_score,
        within_three_std_errors,
        forbidden_clique,
        clique_violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{certify_spectrum, DEFAULT_SPECTRUM_CAP, DEFAULT_TOLERANCE};

    fn cert(g: &Graph) -> SpectralCertificate {
        certify_spectrum(g, DEFAULT_SPECTRUM_CAP, DEFAULT_TOLERANCE).unwrap()
    }

    #[test]
    fn pentagon_expectation_is_84_fifths() {
        let c5 = families::cycle(5).unwrap();
        let e = expected_independent_sets(&c5, 8, 2, 1 << 20).unwrap();
        assert_eq!(
            e,
            Ratio::new(BigUint::from(84u64), BigUint::from(5u64))
        );
    }

    #[test]
    fn degenerate_expectations() {
        // empty source: probability 1, expectation C(N, t)
        let e4 = families::edgeless(4).unwrap();
        let e = expected_independent_sets(&e4, 10, 3, 1 << 20).unwrap();
        assert_eq!(e, Ratio::from_integer(count::binomial(10, 3)));
        // complete source: only collisions survive, C(N,2)/n
        let k6 = families::complete(6).unwrap();
        let e = expected_independent_sets(&k6, 9, 2, 1 << 20).unwrap();
        assert_eq!(
            e,
            Ratio::new(count::binomial(9, 2), BigUint::from(6u64))
        );
        assert!(expected_independent_sets(&k6, 4, 5, 1 << 20).is_err());
    }

    #[test]
    fn blowup_bound_matches_closed_form() {
        let cert = cert(&families::turan(64, 2).unwrap());
        let report = blowup_independence_bound(&cert, 128, 70).unwrap();
        let e2 = std::f64::consts::E * std::f64::consts::E;
        let factor = (2.0 * e2 * 32.0 * 128.0 / (64.0 * 64f64.ln().powi(2))).ln();
        assert!((report.log_factor.unwrap() - factor).abs() < 1e-9);
        assert!((report.log_bound.unwrap() - 70.0 * factor).abs() < 1e-9);
        assert!(report.precondition_met);
        assert!(!report.degenerate);
    }

    #[test]
    fn blowup_bound_small_scales_and_degenerate_inputs() {
        let c5 = cert(&families::cycle(5).unwrap());
        let report = blowup_independence_bound(&c5, 8, 2).unwrap();
        // threshold 2*5*(ln 5)^2/2 ≈ 12.95 > 2
        assert!(!report.precondition_met);
        assert!(report.log_factor.is_some());
        let empty = cert(&families::edgeless(4).unwrap());
        let report = blowup_independence_bound(&empty, 8, 2).unwrap();
        assert!(report.degenerate);
        assert_eq!(report.log_bound, None);
    }

    #[test]
    fn union_bound_with_no_constrained_colors_is_log_choose() {
        let inst = RamseyInstance::new(vec![], 3, 10).unwrap();
        let report = union_bound_report(&[], &inst).unwrap();
        assert_eq!(
            report.log_failure_bound.unwrap(),
            report.log_choose
        );
        assert!((report.log_choose - 120f64.ln()).abs() < 1e-9);
        assert!(!report.predicts_witness);
    }

    #[test]
    fn union_bound_single_color_cancels_the_choose_term() {
        let c5 = cert(&families::cycle(5).unwrap());
        let inst = RamseyInstance::new(vec![3], 3, 5).unwrap();
        let report = union_bound_report(&[c5], &inst).unwrap();
        // k = 1: (1-k) log C + t·factor = t·factor
        assert_eq!(
            report.log_failure_bound,
            report.per_color[0].log_bound
        );
        assert!(!report.all_preconditions_met); // scale far below threshold
    }

    #[test]
    fn union_bound_checks_shapes() {
        let c5 = cert(&families::cycle(5).unwrap());
        let inst = RamseyInstance::new(vec![3, 3], 3, 5).unwrap();
        assert!(matches!(
            union_bound_report(&[c5], &inst),
            Err(Error::SizeMismatch { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn suggestions_follow_the_closed_forms() {
        let s = suggest_parameters(&[(3, 0.5)], 64).unwrap();
        assert_eq!(s.excess_sum, 1);
        let base = 64.0 / 64f64.ln().powi(2);
        assert!((s.source_sizes[0] - base.powi(2)).abs() < 1e-6);
        assert!((s.host_size - 64f64.powi(2) / 64f64.ln().powi(2)).abs() < 1e-6);
        assert!(s.heuristic);
        assert!(suggest_parameters(&[(3, 0.5)], 2).is_err());
        assert!(suggest_parameters(&[(2, 0.5)], 10).is_err());
        assert!(suggest_parameters(&[(3, 1.5)], 10).is_err());
    }

    #[test]
    fn small_monte_carlo_run_matches_expectation() {
        let c5 = families::cycle(5).unwrap();
        let report = sample_expectation(&c5, 8, 2, 2000, 424242, Some(3), 1 << 20).unwrap();
        assert!((report.expected_value - 16.8).abs() < 1e-9);
        assert_eq!(report.expected, "84/5");
        assert!(report.within_three_std_errors, "z = {:?}", report.z_score);
        assert_eq!(report.clique_violations, 0);
    }

    #[test]
    fn monte_carlo_handles_larger_set_sizes() {
        // t = 3 exercises the profile path instead of the pair shortcut
        let c5 = families::cycle(5).unwrap();
        let report = sample_expectation(&c5, 6, 3, 500, 7, None, 1 << 20).unwrap();
        assert!(report.within_three_std_errors, "z = {:?}", report.z_score);
    }
}
