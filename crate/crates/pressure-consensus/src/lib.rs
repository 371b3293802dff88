//! Peer-pressure opinion dynamics under time-varying pressure schedules.
//!
//! Agents on a weighted graph repeatedly average their preferred state with
//! their neighbors' current states, with a schedule `ρ_k` dialing up the
//! peer-pressure weight over time. Every single step is a contraction
//! toward a pressure-dependent fixed point, and those fixed points march
//! toward the stubbornness-weighted mean of the preferences — yet the
//! iterates themselves reach that consensus point only when the product of
//! the per-step contraction constants vanishes. This crate simulates the
//! dynamics, computes the constants and their products, classifies the
//! product tail, and ships a CLI that emits plot-ready CSV and JSON.
//!
//! ```
//! use pressure_consensus::experiments::{run_convergent, run_counterexample};
//!
//! // ρ_k = k: the contraction product telescopes to zero and the pair of
//! // agents settles on the consensus point (0.3, 0.3).
//! let nice = run_convergent(10_000)?;
//! assert!(nice.converged);
//!
//! // ρ_k = 2^√k: the product stalls at ≈ 0.031 and the same system
//! // oscillates around (0.3, 0.3) forever.
//! let stuck = run_counterexample(10_000)?;
//! assert!(!stuck.converged);
//! assert!(stuck.residual_floor > 0.0);
//! # Ok::<(), pressure_consensus::Error>(())
//! ```
//!
//! All types are immutable after construction and all operations are pure
//! functions, so simulations and analyses can run concurrently without
//! shared state. The longer-form guide lives in `book/`; its code snippets
//! compile and run as doc-tests of this crate.

// Index loops mirror the matrix arithmetic; clearer here than iterator chains.
#![allow(clippy::needless_range_loop)]

pub mod config;
pub mod contraction;
pub mod dynamics;
mod error;
pub mod experiments;
pub mod linalg;
pub mod output;
pub mod scalar;
pub mod schedule;

pub use contraction::{
    classify_product, partial_product, telescoped_bounds, telescoped_slacks, AlphaSource,
    AlphaTerm, ContractionReport, PressureRatioAlphas, ProductClass, SliceAlphas, SystemAlphas,
};
pub use dynamics::{OpinionSystem, StateVector, Trajectory, LARGE_RHO_THRESHOLD};
pub use error::Error;
pub use scalar::{euler_phi, scalar_compose, scalar_compose_from, ScalarFamily};
pub use schedule::{PressureSchedule, DEFAULT_MAX_RHO};

#[cfg(doctest)]
mod book;
