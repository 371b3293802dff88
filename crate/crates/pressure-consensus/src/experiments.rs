//! Scripted desk-scale scenario runners.
//!
//! Two canned scenarios share the two-agent demo system (`K₂`, unit
//! stubbornness and weights, preferred states `(0.1, 0.5)`) and differ only
//! in the pressure schedule:
//!
//! - [`run_convergent`]: `ρ_k = k`. The contraction product telescopes to
//!   zero and the iterates reach the consensus point `(0.3, 0.3)`.
//! - [`run_counterexample`]: `ρ_k = 2^√k`. The product stalls at a positive
//!   value and the iterates oscillate around the consensus point forever at
//!   a positive distance.
//!
//! Everything here is deterministic: re-running a scenario reproduces the
//! result bit for bit.

use crate::contraction::{ContractionReport, SystemAlphas, DEFAULT_CLASSIFICATION_FLOOR};
use crate::dynamics::{OpinionSystem, StateVector, Trajectory};
use crate::error::Error;
use crate::linalg::dist_inf;
use crate::scalar::ScalarFamily;
use crate::schedule::{PressureSchedule, DEFAULT_MAX_RHO};

/// Convergence tolerance on the final max-norm distance to the consensus
/// point. Matches the visible convergence scale of a 10⁴-step run.
pub const DEFAULT_TOLERANCE: f64 = 1e-3;

/// The two-agent demo system: complete graph on two nodes, unit weights and
/// stubbornness, preferred states `(0.1, 0.5)`.
pub fn k2_demo_system() -> OpinionSystem {
    OpinionSystem::new(
        vec![vec![0.0, 1.0], vec![1.0, 0.0]],
        vec![1.0, 1.0],
        vec![0.1, 0.5],
    )
    .expect("the demo system is valid by construction")
}

/// `ρ_k = 2^√k`, the schedule that grows too fast for consensus.
pub fn counterexample_schedule() -> PressureSchedule {
    PressureSchedule::ExpSqrt { base: 2.0 }
}

/// `ρ_k = k`, the schedule under which the iterates reach consensus.
pub fn convergent_schedule() -> PressureSchedule {
    PressureSchedule::Linear { slope: 1.0 }
}

/// A full scenario run: trajectory, contraction report, the observed floor
/// of the tail distances, and the convergence verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioResult {
    pub trajectory: Trajectory,
    pub report: ContractionReport,
    /// Infimum of `‖x_k − x*‖∞` over the tail window `k ∈ [steps/10, steps]`.
    /// The window skips the transient so the floor witnesses asymptotic
    /// behavior, not the initial approach.
    pub residual_floor: f64,
    /// Whether the final max-norm distance to the consensus point is below
    /// the tolerance.
    pub converged: bool,
    consensus_component: f64,
}

impl ScenarioResult {
    /// Final `‖x_K − x*‖∞`.
    pub fn final_dist_inf(&self) -> f64 {
        let limit = vec![self.consensus_component; self.trajectory.final_state().len()];
        dist_inf(self.trajectory.final_state().as_slice(), &limit)
    }

    /// The common component of the consensus point.
    pub fn consensus_component(&self) -> f64 {
        self.consensus_component
    }
}

/// Runs one scenario: simulate, analyze the same schedule, measure the tail
/// floor, and apply the convergence tolerance.
pub fn run_scenario(
    system: &OpinionSystem,
    schedule: &PressureSchedule,
    steps: u64,
    x0: Option<&StateVector>,
    tolerance: f64,
    max_rho: f64,
) -> Result<ScenarioResult, Error> {
    assert!(steps >= 1, "scenarios need at least one step");
    assert!(
        tolerance.is_finite() && tolerance > 0.0,
        "tolerance must be positive"
    );
    let trajectory = system.simulate_opts(schedule, steps, x0, max_rho)?;
    let report = ContractionReport::from_source(
        &SystemAlphas { system, schedule },
        steps,
        DEFAULT_CLASSIFICATION_FLOOR,
    )?;
    let limit = system.consensus_limit();

    let window_start = (steps / 10).max(1);
    let mut residual_floor = f64::INFINITY;
    for k in window_start..=steps {
        let d = dist_inf(trajectory.states[k as usize].as_slice(), limit.as_slice());
        residual_floor = residual_floor.min(d);
    }
    let final_dist = dist_inf(trajectory.final_state().as_slice(), limit.as_slice());
    let converged = final_dist < tolerance;

    Ok(ScenarioResult {
        trajectory,
        report,
        residual_floor,
        converged,
        consensus_component: limit[0],
    })
}

/// The oscillating scenario at the default tolerance and pressure cap.
pub fn run_counterexample(steps: u64) -> Result<ScenarioResult, Error> {
    assert!(steps >= 100, "the tail window needs at least 100 steps");
    run_scenario(
        &k2_demo_system(),
        &counterexample_schedule(),
        steps,
        None,
        DEFAULT_TOLERANCE,
        DEFAULT_MAX_RHO,
    )
}

/// The convergent scenario at the default tolerance and pressure cap.
pub fn run_convergent(steps: u64) -> Result<ScenarioResult, Error> {
    assert!(steps >= 100, "the tail window needs at least 100 steps");
    run_scenario(
        &k2_demo_system(),
        &convergent_schedule(),
        steps,
        None,
        DEFAULT_TOLERANCE,
        DEFAULT_MAX_RHO,
    )
}

/// Scalar-family analogue of [`ScenarioResult`].
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarScenarioResult {
    /// `G_k(x0)` for `k = 1..=k_max`, composed from the family's default
    /// start index (indices below it act as the identity).
    pub iterates: Vec<f64>,
    /// The last composed value.
    pub limit_estimate: f64,
    /// Whether the estimate reached the families' common fixed point 0
    /// within [`DEFAULT_TOLERANCE`].
    pub converged_to_fixed_point: bool,
}

/// Composes a scalar family step by step and reports where it lands.
pub fn run_scalar_family(family: &ScalarFamily, x0: f64, k_max: u64) -> ScalarScenarioResult {
    assert!(k_max >= 1, "composition needs at least one map");
    let start = family.default_start();
    let mut iterates = Vec::with_capacity(k_max as usize);
    let mut value = x0;
    for k in 1..=k_max {
        if k >= start {
            value *= family.factor(k);
        }
        iterates.push(value);
    }
    ScalarScenarioResult {
        limit_estimate: value,
        converged_to_fixed_point: value.abs() < DEFAULT_TOLERANCE,
        iterates,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contraction::ProductClass;

    #[test]
    fn convergent_scenario_reaches_consensus() {
        let result = run_convergent(10_000).unwrap();
        assert!(result.converged);
        assert!(result.final_dist_inf() < 1e-3);
        assert_eq!(result.report.len(), 10_000);
    }

    #[test]
    fn convergent_product_telescopes() {
        let result = run_convergent(10_000).unwrap();
        let p = result.report.final_partial_product();
        let expected = 1.0 / 10_001.0;
        assert!(
            (p - expected).abs() <= 1e-12 * expected,
            "got {p:.17e}, want {expected:.17e}"
        );
    }

    #[test]
    fn too_few_steps_do_not_converge() {
        // Shortest run the tail window accepts; far from the tolerance.
        let result = run_convergent(100).unwrap();
        assert!(!result.converged);
    }

    #[test]
    fn convergent_tail_envelope_is_nonincreasing() {
        // The raw distance sequence zigzags (the iterate hits the consensus
        // point exactly every other step for this start), so monotone decay
        // shows up in the pairwise-max envelope.
        let result = run_convergent(2_000).unwrap();
        let d = &result.trajectory.dist_to_limit;
        let window = &d[199..];
        let envelope: Vec<f64> = window.windows(2).map(|w| w[0].max(w[1])).collect();
        for pair in envelope.windows(2) {
            assert!(pair[1] <= pair[0] * (1.0 + 1e-12));
        }
    }

    #[test]
    fn counterexample_oscillates_above_a_floor() {
        let result = run_counterexample(10_000).unwrap();
        assert!(!result.converged);
        assert!(result.residual_floor > 0.0);
        assert_eq!(
            result.report.classification,
            ProductClass::PositiveLimitSuspected
        );
        let p = result.report.final_partial_product();
        assert!((p - 0.0310128).abs() <= 1e-4, "got {p}");
    }

    #[test]
    fn counterexample_floor_matches_independent_resimulation() {
        // Separately coded two-agent iteration, same arithmetic choices.
        let steps = 10_000usize;
        let (a, b) = (0.1f64, 0.5f64);
        let limit = (a + b) / 2.0;
        let mut x = (a, b);
        let mut dists = Vec::with_capacity(steps);
        for k in 1..=steps {
            let rho = 2f64.powf((k as f64).sqrt());
            x = if rho > 1e15 {
                let sr = 1.0 / rho;
                ((sr * a + x.1) / (sr + 1.0), (sr * b + x.0) / (sr + 1.0))
            } else {
                ((a + rho * x.1) / (1.0 + rho), (b + rho * x.0) / (1.0 + rho))
            };
            dists.push((x.0 - limit).abs().max((x.1 - limit).abs()));
        }
        let oracle_floor = dists[steps / 10 - 1..]
            .iter()
            .cloned()
            .fold(f64::INFINITY, f64::min);

        let result = run_counterexample(10_000).unwrap();
        assert!(
            (result.residual_floor - oracle_floor).abs() <= 1e-10,
            "library {:.17e} vs oracle {:.17e}",
            result.residual_floor,
            oracle_floor
        );
    }

    #[test]
    fn counterexample_sign_alternates() {
        let result = run_counterexample(2_000).unwrap();
        let limit = 0.3;
        // Alternation must have set in by k = 100 at the latest.
        for k in 100..2_000 {
            let e_now = result.trajectory.states[k][0] - limit;
            let e_next = result.trajectory.states[k + 1][0] - limit;
            assert!(
                e_now * e_next < 0.0,
                "no alternation at k={k}: {e_now} then {e_next}"
            );
        }
    }

    #[test]
    fn scenario_prefix_is_bitwise_deterministic() {
        let short = run_counterexample(100).unwrap();
        let long = run_counterexample(400).unwrap();
        assert_eq!(&long.trajectory.states[..101], &short.trajectory.states[..]);
        assert_eq!(run_convergent(150).unwrap(), run_convergent(150).unwrap());
    }

    #[test]
    fn report_alphas_match_direct_recomputation() {
        let result = run_convergent(200).unwrap();
        let sys = k2_demo_system();
        for k in [1usize, 7, 63, 200] {
            let rho = result.trajectory.rho[k - 1];
            let direct = sys.contraction_constant(rho).unwrap();
            assert!(
                (result.report.alphas[k - 1] - direct).abs() <= 1e-12,
                "k={k}"
            );
        }
    }

    #[test]
    fn scalar_scenarios_match_expectations() {
        let geometric = ScalarFamily::geometric_gap(0.1).unwrap();
        let r = run_scalar_family(&geometric, 1.0, 200);
        assert!((r.limit_estimate - 0.89001).abs() <= 1e-5);
        assert!(!r.converged_to_fixed_point);

        let r = run_scalar_family(&ScalarFamily::Telescoping, 1.0, 10_000);
        assert!((r.limit_estimate - 1e-4).abs() <= 1e-12);
        assert!(r.converged_to_fixed_point);

        let r = run_scalar_family(&geometric, 0.0, 50);
        assert_eq!(r.limit_estimate, 0.0);
        assert!(r.converged_to_fixed_point);
    }

    #[test]
    fn scalar_iterates_track_composition() {
        let r = run_scalar_family(&ScalarFamily::Telescoping, 1.0, 5);
        // Identity at k=1, then 1/2, 1/3, 1/4, 1/5.
        let expected = [1.0, 0.5, 1.0 / 3.0, 0.25, 0.2];
        for (got, want) in r.iterates.iter().zip(expected) {
            assert!((got - want).abs() < 1e-15);
        }
    }
}
