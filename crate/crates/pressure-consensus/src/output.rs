//! CSV and JSON emitters.
//!
//! Floats are written with 17 significant digits, enough to round-trip any
//! f64 exactly; lines end with `\n`.

use std::io::{self, Write};

use serde::Serialize;

use crate::contraction::{ContractionReport, ProductClass};
use crate::dynamics::{StateVector, Trajectory};
use crate::experiments::ScenarioResult;
use crate::linalg::{dist2, dist_inf};

/// 17-significant-digit scientific notation; parsing the result back yields
/// the identical bit pattern.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

/// Writes the trajectory table:
/// `k,rho,x_0..x_{N-1},alpha,partial_product,dist_to_fixed_point,dist_to_limit`.
///
/// Row `k = 0` holds the initial state; its per-step columns (`rho`,
/// `alpha`, `partial_product`, `dist_to_fixed_point`) are empty. Distances
/// are Euclidean.
pub fn write_trajectory_csv<W: Write>(
    mut w: W,
    trajectory: &Trajectory,
    report: &ContractionReport,
    limit: &StateVector,
) -> io::Result<()> {
    let n = limit.len();
    let mut header = String::from("k,rho");
    for i in 0..n {
        header.push_str(&format!(",x_{i}"));
    }
    header.push_str(",alpha,partial_product,dist_to_fixed_point,dist_to_limit");
    writeln!(w, "{header}")?;

    let x0 = &trajectory.states[0];
    let mut row = String::from("0,");
    for i in 0..n {
        row.push_str(&format!(",{}", fmt_f64(x0[i])));
    }
    row.push_str(",,,");
    row.push_str(&format!(",{}", fmt_f64(dist2(x0.as_slice(), limit.as_slice()))));
    writeln!(w, "{row}")?;

    for k in 1..=trajectory.steps() as usize {
        let state = &trajectory.states[k];
        let mut row = format!("{k},{}", fmt_f64(trajectory.rho[k - 1]));
        for i in 0..n {
            row.push_str(&format!(",{}", fmt_f64(state[i])));
        }
        let dist_fp = dist2(state.as_slice(), trajectory.fixed_points[k - 1].as_slice());
        row.push_str(&format!(
            ",{},{},{},{}",
            fmt_f64(report.alphas[k - 1]),
            fmt_f64(report.partial_products[k - 1]),
            fmt_f64(dist_fp),
            fmt_f64(trajectory.dist_to_limit[k - 1]),
        ));
        writeln!(w, "{row}")?;
    }
    Ok(())
}

#[derive(Debug, Serialize)]
pub struct AlphasSummary {
    pub count: usize,
    pub first: f64,
    pub last: f64,
    pub min: f64,
    pub max: f64,
}

impl AlphasSummary {
    fn from_alphas(alphas: &[f64]) -> Self {
        AlphasSummary {
            count: alphas.len(),
            first: *alphas.first().expect("reports are never empty"),
            last: *alphas.last().expect("reports are never empty"),
            min: alphas.iter().cloned().fold(f64::INFINITY, f64::min),
            max: alphas.iter().cloned().fold(f64::NEG_INFINITY, f64::max),
        }
    }
}

/// JSON face of a [`ContractionReport`]. Non-finite values (a `log_sum` of
/// −∞ after an exactly zero factor) serialize as `null`.
#[derive(Debug, Serialize)]
pub struct AnalysisJson {
    pub alphas_summary: AlphasSummary,
    pub partial_product_final: f64,
    pub log_sum: f64,
    pub classification: ProductClass,
    pub tail_estimate: f64,
}

impl AnalysisJson {
    pub fn from_report(report: &ContractionReport) -> Self {
        AnalysisJson {
            alphas_summary: AlphasSummary::from_alphas(&report.alphas),
            partial_product_final: report.final_partial_product(),
            log_sum: report.log_sum,
            classification: report.classification,
            tail_estimate: report.tail_estimate,
        }
    }
}

pub fn write_analysis_json<W: Write>(mut w: W, report: &ContractionReport) -> io::Result<()> {
    let json = serde_json::to_string_pretty(&AnalysisJson::from_report(report))?;
    writeln!(w, "{json}")
}

/// Per-scenario slice of the one-shot summary.
#[derive(Debug, Serialize)]
pub struct ScenarioSummary {
    pub steps: u64,
    pub classification: ProductClass,
    pub partial_product_final: f64,
    pub log_sum: f64,
    pub tail_estimate: f64,
    pub residual_floor: f64,
    pub final_dist_inf: f64,
    pub converged: bool,
}

impl ScenarioSummary {
    pub fn from_result(result: &ScenarioResult) -> Self {
        ScenarioSummary {
            steps: result.trajectory.steps(),
            classification: result.report.classification,
            partial_product_final: result.report.final_partial_product(),
            log_sum: result.report.log_sum,
            tail_estimate: result.report.tail_estimate,
            residual_floor: result.residual_floor,
            final_dist_inf: result.final_dist_inf(),
            converged: result.converged,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct RunSummary {
    pub euler_phi_one_tenth: f64,
    pub counterexample: ScenarioSummary,
    pub convergent: ScenarioSummary,
}

pub fn write_summary_json<W: Write>(mut w: W, summary: &RunSummary) -> io::Result<()> {
    let json = serde_json::to_string_pretty(summary)?;
    writeln!(w, "{json}")
}

/// Max-norm distance of a trajectory state to the consensus point; row-level
/// helper for consumers that post-process CSVs in memory.
pub fn state_dist_inf(state: &StateVector, limit: &StateVector) -> f64 {
    dist_inf(state.as_slice(), limit.as_slice())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::{convergent_schedule, k2_demo_system, run_scenario};
    use crate::schedule::DEFAULT_MAX_RHO;

    #[test]
    fn fmt_round_trips_exactly() {
        for v in [0.1, 0.3, 2f64.powf(100.5), 1.0 / 10_001.0, -4.75e-3] {
            let parsed: f64 = fmt_f64(v).parse().unwrap();
            assert_eq!(parsed.to_bits(), v.to_bits(), "{v}");
        }
    }

    #[test]
    fn csv_shape_for_single_step() {
        let sys = k2_demo_system();
        let schedule = convergent_schedule();
        let result = run_scenario(&sys, &schedule, 1, None, 1e-3, DEFAULT_MAX_RHO).unwrap();
        let mut buf = Vec::new();
        write_trajectory_csv(
            &mut buf,
            &result.trajectory,
            &result.report,
            &sys.consensus_limit(),
        )
        .unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3, "header plus k=0 plus k=1");
        assert_eq!(
            lines[0],
            "k,rho,x_0,x_1,alpha,partial_product,dist_to_fixed_point,dist_to_limit"
        );
        assert!(lines[1].starts_with("0,,"));
        assert!(lines[2].starts_with("1,"));
        assert!(text.ends_with('\n'));
        assert!(!text.contains('\r'));
    }

    #[test]
    fn analysis_json_has_the_fixed_schema() {
        let sys = k2_demo_system();
        let schedule = convergent_schedule();
        let result = run_scenario(&sys, &schedule, 100, None, 1e-3, DEFAULT_MAX_RHO).unwrap();
        let mut buf = Vec::new();
        write_analysis_json(&mut buf, &result.report).unwrap();
        let value: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        for key in [
            "alphas_summary",
            "partial_product_final",
            "log_sum",
            "classification",
            "tail_estimate",
        ] {
            assert!(value.get(key).is_some(), "missing {key}");
        }
        assert_eq!(value["alphas_summary"]["count"], 100);
    }
}
