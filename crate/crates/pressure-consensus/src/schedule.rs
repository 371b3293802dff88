//! Pressure schedules: the map `k ↦ ρ_k` for step indices `k ≥ 1`.
//!
//! Every kind is a pure stateless function of `k`, so trajectories can be
//! resumed or re-run deterministically. Values must stay strictly positive;
//! overflow handling (the `max_rho` cap) lives with the consumers because a
//! schedule itself has no notion of how far it will be evaluated.

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Default cap on schedule values. Crossing it aborts a run with
/// `ScheduleOverflow` before the arithmetic itself degrades; fast-growing
/// schedules reach astronomically large pressures within a few thousand
/// steps. The CLI can override the cap via `PRESSURE_CONSENSUS_MAX_RHO`.
pub const DEFAULT_MAX_RHO: f64 = 1e300;

/// Time-varying peer-pressure schedule.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "params", deny_unknown_fields)]
pub enum PressureSchedule {
    /// `ρ_k = slope · k`
    Linear { slope: f64 },
    /// `ρ_k = k^exponent`
    Power { exponent: f64 },
    /// `ρ_k = base^√k`
    ExpSqrt { base: f64 },
    /// `ρ_k = value`
    Constant { value: f64 },
    /// Explicit values for `k = 1..=len`, extended by the final value.
    Table { values: Vec<f64> },
}

impl PressureSchedule {
    /// Checks the kind-specific parameter constraints that keep `ρ_k > 0`.
    pub fn validate(&self) -> Result<(), Error> {
        let fail = |what| Err(Error::InvalidParameter { what });
        match self {
            PressureSchedule::Linear { slope } => {
                if !(slope.is_finite() && *slope > 0.0) {
                    return fail("schedule slope must be finite and > 0");
                }
            }
            PressureSchedule::Power { exponent } => {
                if !exponent.is_finite() {
                    return fail("schedule exponent must be finite");
                }
            }
            PressureSchedule::ExpSqrt { base } => {
                if !(base.is_finite() && *base > 0.0) {
                    return fail("schedule base must be finite and > 0");
                }
            }
            PressureSchedule::Constant { value } => {
                if !(value.is_finite() && *value > 0.0) {
                    return fail("schedule value must be finite and > 0");
                }
            }
            PressureSchedule::Table { values } => {
                if values.is_empty() {
                    return fail("schedule table must not be empty");
                }
                if values.iter().any(|v| !(v.is_finite() && *v > 0.0)) {
                    return fail("schedule table entries must be finite and > 0");
                }
            }
        }
        Ok(())
    }

    /// Evaluates `ρ_k` for `k ≥ 1`. Pure; does not apply the overflow cap.
    pub fn rho(&self, k: u64) -> f64 {
        assert!(k >= 1, "schedules are defined for k >= 1");
        let kf = k as f64;
        match self {
            PressureSchedule::Linear { slope } => slope * kf,
            PressureSchedule::Power { exponent } => kf.powf(*exponent),
            PressureSchedule::ExpSqrt { base } => base.powf(kf.sqrt()),
            PressureSchedule::Constant { value } => *value,
            PressureSchedule::Table { values } => {
                let idx = ((k - 1) as usize).min(values.len() - 1);
                values[idx]
            }
        }
    }

    /// Evaluates `ρ_k` and enforces finiteness and the overflow cap.
    pub fn rho_checked(&self, k: u64, max_rho: f64) -> Result<f64, Error> {
        let rho = self.rho(k);
        if !rho.is_finite() || rho > max_rho {
            return Err(Error::ScheduleOverflow {
                step: k,
                rho,
                cap: max_rho,
            });
        }
        Ok(rho)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kinds_evaluate() {
        assert_eq!(PressureSchedule::Linear { slope: 2.0 }.rho(3), 6.0);
        assert_eq!(PressureSchedule::Power { exponent: 2.0 }.rho(3), 9.0);
        assert_eq!(PressureSchedule::ExpSqrt { base: 2.0 }.rho(4), 4.0);
        assert_eq!(PressureSchedule::Constant { value: 0.5 }.rho(7), 0.5);
    }

    #[test]
    fn table_extends_with_final_value() {
        let s = PressureSchedule::Table {
            values: vec![1.0, 2.0, 3.0],
        };
        assert_eq!(s.rho(2), 2.0);
        assert_eq!(s.rho(3), 3.0);
        assert_eq!(s.rho(100), 3.0);
    }

    #[test]
    fn validation_rejects_bad_params() {
        assert!(PressureSchedule::Linear { slope: 0.0 }.validate().is_err());
        assert!(PressureSchedule::Linear { slope: -1.0 }.validate().is_err());
        assert!(PressureSchedule::ExpSqrt { base: 0.0 }.validate().is_err());
        assert!(PressureSchedule::Constant { value: f64::NAN }.validate().is_err());
        assert!(PressureSchedule::Table { values: vec![] }.validate().is_err());
        assert!(PressureSchedule::Table {
            values: vec![1.0, -2.0]
        }
        .validate()
        .is_err());
        assert!(PressureSchedule::Power { exponent: -0.5 }.validate().is_ok());
    }

    #[test]
    fn rho_checked_caps_overflow() {
        let s = PressureSchedule::ExpSqrt { base: 2.0 };
        assert!(s.rho_checked(100, DEFAULT_MAX_RHO).is_ok());
        let err = s.rho_checked(100, 10.0).unwrap_err();
        assert_eq!(
            err,
            Error::ScheduleOverflow {
                step: 100,
                rho: 1024.0,
                cap: 10.0
            }
        );
    }

    #[test]
    fn serde_shape_is_kind_params() {
        let s = PressureSchedule::ExpSqrt { base: 2.0 };
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"kind":"ExpSqrt","params":{"base":2.0}}"#);
        let back: PressureSchedule = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn serde_rejects_unknown_params() {
        let json = r#"{"kind":"Linear","params":{"slope":1.0,"extra":2.0}}"#;
        assert!(serde_json::from_str::<PressureSchedule>(json).is_err());
    }
}
