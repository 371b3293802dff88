//! JSON scenario configuration for the CLI.
//!
//! Unknown fields are rejected so typos fail loudly instead of silently
//! running a different scenario.

use serde::{Deserialize, Serialize};

use crate::dynamics::{OpinionSystem, StateVector};
use crate::error::Error;
use crate::experiments::DEFAULT_TOLERANCE;
use crate::schedule::PressureSchedule;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemConfig {
    /// Row-major adjacency weights.
    pub adjacency: Vec<Vec<f64>>,
    pub stubbornness: Vec<f64>,
    pub preferred: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub system: SystemConfig,
    pub schedule: PressureSchedule,
    pub steps: u64,
    /// Initial state; defaults to the preferred states.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x0: Option<Vec<f64>>,
    /// Convergence tolerance; defaults to 1e-3.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
}

impl ScenarioConfig {
    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serialization is infallible")
    }

    /// Builds the validated system; all structural errors surface here.
    pub fn build_system(&self) -> Result<OpinionSystem, Error> {
        OpinionSystem::new(
            self.system.adjacency.clone(),
            self.system.stubbornness.clone(),
            self.system.preferred.clone(),
        )
    }

    /// The explicit initial state, if one was configured.
    pub fn x0_state(&self, system: &OpinionSystem) -> Result<Option<StateVector>, Error> {
        match &self.x0 {
            None => Ok(None),
            Some(values) => {
                if values.len() != system.len() {
                    return Err(Error::DimensionMismatch {
                        what: "x0",
                        expected: system.len(),
                        got: values.len(),
                    });
                }
                Ok(Some(StateVector::new(values.clone())?))
            }
        }
    }

    pub fn tolerance(&self) -> Result<f64, Error> {
        match self.tolerance {
            None => Ok(DEFAULT_TOLERANCE),
            Some(t) if t.is_finite() && t > 0.0 => Ok(t),
            Some(_) => Err(Error::InvalidParameter {
                what: "tolerance must be finite and > 0",
            }),
        }
    }

    /// Full validation pass; returns the system on success.
    pub fn validate(&self) -> Result<OpinionSystem, Error> {
        if self.steps < 1 {
            return Err(Error::InvalidParameter {
                what: "steps must be at least 1",
            });
        }
        self.schedule.validate()?;
        let system = self.build_system()?;
        self.x0_state(&system)?;
        self.tolerance()?;
        Ok(system)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn demo_json() -> String {
        r#"{
            "system": {
                "adjacency": [[0.0, 1.0], [1.0, 0.0]],
                "stubbornness": [1.0, 1.0],
                "preferred": [0.1, 0.5]
            },
            "schedule": { "kind": "ExpSqrt", "params": { "base": 2.0 } },
            "steps": 100
        }"#
        .to_string()
    }

    #[test]
    fn round_trip_is_semantically_identical() {
        let config = ScenarioConfig::from_json(&demo_json()).unwrap();
        let back = ScenarioConfig::from_json(&config.to_json()).unwrap();
        assert_eq!(config, back);
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let json = demo_json().replace("\"steps\": 100", "\"steps\": 100, \"surprise\": 1");
        assert!(ScenarioConfig::from_json(&json).is_err());
    }

    #[test]
    fn validation_surfaces_system_errors() {
        let json = demo_json().replace("[1.0, 1.0]", "[1.0, -3.0]");
        let config = ScenarioConfig::from_json(&json).unwrap();
        assert_eq!(
            config.validate(),
            Err(Error::NonpositiveStubbornness {
                index: 1,
                value: -3.0
            })
        );
    }

    #[test]
    fn validation_checks_steps_and_x0() {
        let mut config = ScenarioConfig::from_json(&demo_json()).unwrap();
        config.steps = 0;
        assert!(matches!(
            config.validate(),
            Err(Error::InvalidParameter { .. })
        ));
        config.steps = 10;
        config.x0 = Some(vec![0.1]);
        assert!(matches!(
            config.validate(),
            Err(Error::DimensionMismatch { .. })
        ));
        config.x0 = Some(vec![0.1, 0.2]);
        assert!(config.validate().is_ok());
    }
}
