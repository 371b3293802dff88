//! Networked opinion dynamics under peer pressure.
//!
//! `N` agents sit on a weighted graph with adjacency `A` (zero diagonal),
//! per-agent stubbornness `s_i > 0`, and preferred states `x⁺`. With `D`
//! the diagonal of row sums and pressure `ρ > 0`, one synchronous update is
//!
//! ```text
//! x ← (S + ρD)⁻¹ (S x⁺ + ρ A x)
//! ```
//!
//! Since `S + ρD` is diagonal, a step is a componentwise convex combination
//! of an agent's preference and its neighbors' states. Each step map has a
//! unique fixed point `x*(ρ) = (S + ρL)⁻¹ S x⁺` with `L = D − A` the graph
//! Laplacian, and as `ρ → ∞` those fixed points approach the
//! stubbornness-weighted mean of the preferred states — the consensus
//! point. Whether the iterate sequence itself reaches that point depends on
//! how fast the schedule grows; see the `contraction` module.
//!
//! Numerical conventions:
//! - all sums over agent indices run strictly left to right (see `linalg`),
//!   making runs bit-reproducible on one platform;
//! - for `ρ > 1e15` coefficients are formed from `s_i/ρ` instead of `ρ·s_i`
//!   so schedules reaching astronomically large pressures neither overflow
//!   nor lose the convex-combination structure.

use crate::error::Error;
use crate::linalg::{dist2, dot, Matrix};
use crate::schedule::{PressureSchedule, DEFAULT_MAX_RHO};

/// Pressure threshold above which step/solve coefficients switch to the
/// overflow-safe factored form.
pub const LARGE_RHO_THRESHOLD: f64 = 1e15;

/// Agent states at one time index. Entries are finite; the length matches
/// the owning system's agent count wherever the two meet.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector(Vec<f64>);

impl StateVector {
    pub fn new(values: Vec<f64>) -> Result<Self, Error> {
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonfiniteInput {
                what: "state vector",
            });
        }
        Ok(StateVector(values))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

impl std::ops::Index<usize> for StateVector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl AsRef<[f64]> for StateVector {
    fn as_ref(&self) -> &[f64] {
        &self.0
    }
}

/// Validated, immutable opinion system. Safe to share across threads; all
/// operations on it are pure.
#[derive(Debug, Clone, PartialEq)]
pub struct OpinionSystem {
    adjacency: Matrix,
    stubbornness: Vec<f64>,
    preferred: Vec<f64>,
    row_sums: Vec<f64>,
    symmetric: bool,
}

impl OpinionSystem {
    /// Validates and builds a system.
    ///
    /// Rejects non-square or negative adjacency, nonzero self-weights,
    /// nonpositive stubbornness, mismatched lengths, and graphs whose
    /// nonzero-weight support is disconnected (the consensus point is a
    /// single global weighted mean, which a disconnected graph does not
    /// have). Asymmetric adjacency is accepted but flagged via
    /// [`is_symmetric`](Self::is_symmetric) so front ends can warn.
    pub fn new(
        adjacency: Vec<Vec<f64>>,
        stubbornness: Vec<f64>,
        preferred: Vec<f64>,
    ) -> Result<Self, Error> {
        let n = adjacency.len();
        if n == 0 {
            return Err(Error::InvalidParameter {
                what: "system must have at least one agent",
            });
        }
        for row in &adjacency {
            if row.len() != n {
                return Err(Error::NonSquareMatrix {
                    rows: n,
                    cols: row.len(),
                });
            }
        }
        for (i, row) in adjacency.iter().enumerate() {
            for (j, &w) in row.iter().enumerate() {
                if i == j {
                    if w != 0.0 {
                        return Err(Error::NonzeroDiagonal { index: i, value: w });
                    }
                } else if !(w.is_finite() && w >= 0.0) {
                    return Err(Error::NegativeWeight {
                        row: i,
                        col: j,
                        value: w,
                    });
                }
            }
        }
        if stubbornness.len() != n {
            return Err(Error::DimensionMismatch {
                what: "stubbornness",
                expected: n,
                got: stubbornness.len(),
            });
        }
        for (i, &s) in stubbornness.iter().enumerate() {
            if !(s.is_finite() && s > 0.0) {
                return Err(Error::NonpositiveStubbornness { index: i, value: s });
            }
        }
        if preferred.len() != n {
            return Err(Error::DimensionMismatch {
                what: "preferred",
                expected: n,
                got: preferred.len(),
            });
        }
        if preferred.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonfiniteInput { what: "preferred" });
        }

        // Connectivity over the undirected support of nonzero weights.
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if !seen[j] && (adjacency[i][j] != 0.0 || adjacency[j][i] != 0.0) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        if let Some(node) = seen.iter().position(|s| !s) {
            return Err(Error::DisconnectedGraph { node });
        }

        let mut symmetric = true;
        'sym: for i in 0..n {
            for j in i + 1..n {
                if adjacency[i][j] != adjacency[j][i] {
                    symmetric = false;
                    break 'sym;
                }
            }
        }

        // Row sums in strict left-to-right order; `step` reproduces exactly
        // this accumulation when all neighbor states are 1.
        let row_sums: Vec<f64> = adjacency
            .iter()
            .map(|row| {
                let mut acc = 0.0;
                for &w in row {
                    acc += w;
                }
                acc
            })
            .collect();

        let flat: Vec<f64> = adjacency.into_iter().flatten().collect();
        Ok(OpinionSystem {
            adjacency: Matrix::from_vec(n, n, flat),
            stubbornness,
            preferred,
            row_sums,
            symmetric,
        })
    }

    pub fn len(&self) -> usize {
        self.stubbornness.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn adjacency(&self) -> &Matrix {
        &self.adjacency
    }

    pub fn stubbornness(&self) -> &[f64] {
        &self.stubbornness
    }

    pub fn preferred(&self) -> &[f64] {
        &self.preferred
    }

    pub fn row_sums(&self) -> &[f64] {
        &self.row_sums
    }

    /// Whether the adjacency matrix is exactly symmetric. The update is
    /// well-defined either way, but the consensus point is only argued for
    /// symmetric graphs, so asymmetric input deserves a diagnostic.
    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    fn check_rho(rho: f64) -> Result<(), Error> {
        if !(rho.is_finite() && rho > 0.0) {
            return Err(Error::NonpositiveRho { rho });
        }
        Ok(())
    }

    fn check_state(&self, x: &StateVector, what: &'static str) -> Result<(), Error> {
        if x.len() != self.len() {
            return Err(Error::DimensionMismatch {
                what: "state vector",
                expected: self.len(),
                got: x.len(),
            });
        }
        if x.as_slice().iter().any(|v| !v.is_finite()) {
            return Err(Error::NonfiniteInput { what });
        }
        Ok(())
    }

    /// One synchronous update at pressure `rho`.
    ///
    /// Componentwise: `(s_i x⁺_i + ρ Σ_j A_ij x_j) / (s_i + ρ d_i)`. Above
    /// [`LARGE_RHO_THRESHOLD`] numerator and denominator are divided through
    /// by `ρ`, which keeps both representable for pressures up to the
    /// schedule cap.
    pub fn step(&self, x: &StateVector, rho: f64) -> Result<StateVector, Error> {
        Self::check_rho(rho)?;
        self.check_state(x, "step input")?;
        let n = self.len();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let neighbor_sum = dot(self.adjacency.row(i), x.as_slice());
            let (num, den) = if rho > LARGE_RHO_THRESHOLD {
                let sr = self.stubbornness[i] / rho;
                (sr * self.preferred[i] + neighbor_sum, sr + self.row_sums[i])
            } else {
                (
                    self.stubbornness[i] * self.preferred[i] + rho * neighbor_sum,
                    self.stubbornness[i] + rho * self.row_sums[i],
                )
            };
            out.push(num / den);
        }
        Ok(StateVector(out))
    }

    /// Stubbornness-weighted mean of the preferred states, as a scalar.
    fn consensus_value(&self) -> f64 {
        let mut num = 0.0;
        let mut den = 0.0;
        for i in 0..self.len() {
            num += self.stubbornness[i] * self.preferred[i];
        }
        for &s in &self.stubbornness {
            den += s;
        }
        num / den
    }

    /// The consensus point: the stubbornness-weighted mean of the preferred
    /// states on every component. This is the common limit of the per-step
    /// fixed points as pressure grows without bound.
    pub fn consensus_limit(&self) -> StateVector {
        StateVector(vec![self.consensus_value(); self.len()])
    }

    /// The fixed point `x*(ρ)` of the step map: the solution of
    /// `(S + ρL) x = S x⁺`.
    ///
    /// Solved in centered form: with `x̄` the consensus value and
    /// `x = x̄·1 + z`, the shift drops out (`L·1 = 0`) and
    /// `(S + ρL) z = S (x⁺ − x̄·1)`. The centered right-hand side keeps the
    /// solve accurate at large `ρ`, where `x*` is within `O(1/ρ)` of the
    /// consensus point and the uncentered residual would be dominated by
    /// cancellation.
    ///
    /// Above [`LARGE_RHO_THRESHOLD`] the deviation `z = O(1/ρ)` falls below
    /// one ulp of the state scale while the scaled matrix `S/ρ + L` rounds
    /// to the exactly singular Laplacian, so the consensus point is returned
    /// directly — it is the fixed point to f64 precision there.
    pub fn fixed_point(&self, rho: f64) -> Result<StateVector, Error> {
        Self::check_rho(rho)?;
        if rho > LARGE_RHO_THRESHOLD {
            return Ok(self.consensus_limit());
        }
        let n = self.len();
        let center = self.consensus_value();
        let mut m = Matrix::zeros(n, n);
        let mut rhs = Vec::with_capacity(n);
        for i in 0..n {
            let s = self.stubbornness[i];
            for j in 0..n {
                if i == j {
                    m.set(i, i, s + rho * self.row_sums[i]);
                } else {
                    m.set(i, j, -(rho * self.adjacency.get(i, j)));
                }
            }
            rhs.push(s * (self.preferred[i] - center));
        }
        let z = m.solve(&rhs)?;
        Ok(StateVector(
            z.into_iter().map(|zi| center + zi).collect(),
        ))
    }

    /// Max-norm residual of the stationarity equations at `x`, evaluated in
    /// the cancellation-free arrangement
    /// `s_i (x_i − x⁺_i) + ρ Σ_j A_ij (x_i − x_j)`.
    pub fn fixed_point_residual_inf(&self, x: &StateVector, rho: f64) -> f64 {
        let n = self.len();
        let mut worst = 0.0f64;
        for i in 0..n {
            let mut lap = 0.0;
            for j in 0..n {
                lap += self.adjacency.get(i, j) * (x[i] - x[j]);
            }
            let r = self.stubbornness[i] * (x[i] - self.preferred[i]) + rho * lap;
            worst = worst.max(r.abs());
        }
        worst
    }

    /// Iterates the step map with `ρ_k = schedule(k)` for `k = 1..=steps`,
    /// starting from the preferred states.
    pub fn simulate(
        &self,
        schedule: &PressureSchedule,
        steps: u64,
    ) -> Result<Trajectory, Error> {
        self.simulate_opts(schedule, steps, None, DEFAULT_MAX_RHO)
    }

    /// [`simulate`](Self::simulate) with an explicit initial state and
    /// pressure cap. `x0 = None` starts from the preferred states.
    pub fn simulate_opts(
        &self,
        schedule: &PressureSchedule,
        steps: u64,
        x0: Option<&StateVector>,
        max_rho: f64,
    ) -> Result<Trajectory, Error> {
        assert!(steps >= 1, "simulate requires at least one step");
        schedule.validate()?;
        let mut x = match x0 {
            Some(v) => {
                self.check_state(v, "initial state")?;
                v.clone()
            }
            None => StateVector(self.preferred.clone()),
        };
        let limit = self.consensus_limit();

        let mut states = Vec::with_capacity(steps as usize + 1);
        let mut rho_values = Vec::with_capacity(steps as usize);
        let mut fixed_points = Vec::with_capacity(steps as usize);
        let mut dist_to_limit = Vec::with_capacity(steps as usize);
        states.push(x.clone());
        for k in 1..=steps {
            let rho = schedule.rho_checked(k, max_rho)?;
            x = self.step(&x, rho)?;
            rho_values.push(rho);
            fixed_points.push(self.fixed_point(rho)?);
            dist_to_limit.push(dist2(x.as_slice(), limit.as_slice()));
            states.push(x.clone());
        }
        Ok(Trajectory {
            states,
            rho: rho_values,
            fixed_points,
            dist_to_limit,
        })
    }
}

/// Recorded iteration: states (index 0 is the initial condition) plus
/// per-step pressures, fixed points, and Euclidean distances to the
/// consensus point.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub states: Vec<StateVector>,
    pub rho: Vec<f64>,
    pub fixed_points: Vec<StateVector>,
    pub dist_to_limit: Vec<f64>,
}

impl Trajectory {
    pub fn steps(&self) -> u64 {
        self.rho.len() as u64
    }

    pub fn final_state(&self) -> &StateVector {
        self.states.last().expect("trajectory holds x0")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::dist_inf;

    pub(crate) fn k2(preferred: (f64, f64)) -> OpinionSystem {
        OpinionSystem::new(
            vec![vec![0.0, 1.0], vec![1.0, 0.0]],
            vec![1.0, 1.0],
            vec![preferred.0, preferred.1],
        )
        .unwrap()
    }

    #[test]
    fn build_k2() {
        let sys = k2((0.1, 0.5));
        assert_eq!(sys.len(), 2);
        assert_eq!(sys.row_sums(), &[1.0, 1.0]);
        assert!(sys.is_symmetric());
    }

    #[test]
    fn build_rejects_invalid_input() {
        let a = vec![vec![0.0, 1.0], vec![1.0, 0.0]];
        assert_eq!(
            OpinionSystem::new(a.clone(), vec![1.0, -1.0], vec![0.0, 0.0]),
            Err(Error::NonpositiveStubbornness {
                index: 1,
                value: -1.0
            })
        );
        assert_eq!(
            OpinionSystem::new(vec![vec![0.0], vec![1.0]], vec![1.0], vec![0.0]),
            Err(Error::NonSquareMatrix { rows: 2, cols: 1 })
        );
        assert_eq!(
            OpinionSystem::new(
                vec![vec![0.5, 1.0], vec![1.0, 0.0]],
                vec![1.0, 1.0],
                vec![0.0, 0.0]
            ),
            Err(Error::NonzeroDiagonal {
                index: 0,
                value: 0.5
            })
        );
        assert_eq!(
            OpinionSystem::new(
                vec![vec![0.0, -1.0], vec![1.0, 0.0]],
                vec![1.0, 1.0],
                vec![0.0, 0.0]
            ),
            Err(Error::NegativeWeight {
                row: 0,
                col: 1,
                value: -1.0
            })
        );
        assert_eq!(
            OpinionSystem::new(a.clone(), vec![1.0], vec![0.0, 0.0]),
            Err(Error::DimensionMismatch {
                what: "stubbornness",
                expected: 2,
                got: 1
            })
        );
        assert_eq!(
            OpinionSystem::new(a, vec![1.0, 1.0], vec![0.0, f64::NAN]),
            Err(Error::NonfiniteInput { what: "preferred" })
        );
    }

    #[test]
    fn build_rejects_isolated_node() {
        let a = vec![
            vec![0.0, 1.0, 0.0],
            vec![1.0, 0.0, 0.0],
            vec![0.0, 0.0, 0.0],
        ];
        assert_eq!(
            OpinionSystem::new(a, vec![1.0; 3], vec![0.0; 3]),
            Err(Error::DisconnectedGraph { node: 2 })
        );
    }

    #[test]
    fn asymmetric_adjacency_is_flagged_not_rejected() {
        let sys = OpinionSystem::new(
            vec![vec![0.0, 2.0], vec![1.0, 0.0]],
            vec![1.0, 1.0],
            vec![0.0, 1.0],
        )
        .unwrap();
        assert!(!sys.is_symmetric());
    }

    #[test]
    fn single_agent_system_is_valid() {
        let sys = OpinionSystem::new(vec![vec![0.0]], vec![2.0], vec![0.7]).unwrap();
        let x = StateVector::new(vec![0.2]).unwrap();
        let y = sys.step(&x, 5.0).unwrap();
        // No neighbors: the agent keeps its preference.
        assert_eq!(y.as_slice(), &[0.7]);
    }

    #[test]
    fn step_matches_hand_evaluation() {
        // Componentwise: ((0.1 + 1*0.5)/2, (0.5 + 1*0.1)/2) = (0.3, 0.3).
        let sys = k2((0.1, 0.5));
        let x = StateVector::new(vec![0.1, 0.5]).unwrap();
        let y = sys.step(&x, 1.0).unwrap();
        assert!((y[0] - 0.3).abs() < 1e-15);
        assert!((y[1] - 0.3).abs() < 1e-15);
    }

    #[test]
    fn step_agrees_with_dense_solve() {
        // Independent route: assemble S + ρD and the right-hand side, then
        // run the general LU solver instead of the componentwise division.
        let sys = OpinionSystem::new(
            vec![
                vec![0.0, 0.3, 1.2],
                vec![0.3, 0.0, 0.7],
                vec![1.2, 0.7, 0.0],
            ],
            vec![0.5, 2.0, 1.0],
            vec![0.1, 0.9, 0.4],
        )
        .unwrap();
        let x = StateVector::new(vec![0.2, 0.8, 0.5]).unwrap();
        for rho in [1e-3, 1.0, 42.0, 1e6] {
            let fast = sys.step(&x, rho).unwrap();
            let n = sys.len();
            let mut m = Matrix::zeros(n, n);
            let mut rhs = vec![0.0; n];
            for i in 0..n {
                m.set(i, i, sys.stubbornness()[i] + rho * sys.row_sums()[i]);
                rhs[i] = sys.stubbornness()[i] * sys.preferred()[i]
                    + rho * dot(sys.adjacency().row(i), x.as_slice());
            }
            let slow = m.solve(&rhs).unwrap();
            for i in 0..n {
                assert!(
                    (fast[i] - slow[i]).abs() <= 1e-12 * slow[i].abs().max(1.0),
                    "rho={rho} i={i}: {} vs {}",
                    fast[i],
                    slow[i]
                );
            }
        }
    }

    #[test]
    fn step_rejects_bad_input() {
        let sys = k2((0.1, 0.5));
        let x = StateVector::new(vec![0.1, 0.5]).unwrap();
        assert_eq!(
            sys.step(&x, 0.0),
            Err(Error::NonpositiveRho { rho: 0.0 })
        );
        assert!(sys.step(&x, f64::INFINITY).is_err());
        let short = StateVector::new(vec![0.1]).unwrap();
        assert!(matches!(
            sys.step(&short, 1.0),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn fixed_point_is_stationary_under_step() {
        let sys = k2((0.1, 0.5));
        for rho in [1e-3, 1.0, 1e3, 1e6] {
            let fp = sys.fixed_point(rho).unwrap();
            let next = sys.step(&fp, rho).unwrap();
            assert!(dist_inf(next.as_slice(), fp.as_slice()) <= 1e-12, "rho={rho}");
        }
    }

    #[test]
    fn shared_preference_is_stationary() {
        let sys = k2((0.4, 0.4));
        let x = StateVector::new(vec![0.4, 0.4]).unwrap();
        for rho in [1e-6, 1.0, 1e12, 1e100] {
            let y = sys.step(&x, rho).unwrap();
            for i in 0..2 {
                assert!((y[i] - 0.4).abs() <= 1e-15, "rho={rho}: {:?}", y.as_slice());
            }
        }
    }

    #[test]
    fn fixed_point_matches_closed_form() {
        // Two-agent closed form: ((a + ρ(a+b))/(2ρ+1), (b + ρ(a+b))/(2ρ+1)).
        let (a, b) = (0.1, 0.5);
        let sys = k2((a, b));
        for rho in [0.01, 1.0, 99.0, 1e6] {
            let expect0 = (a + rho * (a + b)) / (2.0 * rho + 1.0);
            let expect1 = (b + rho * (a + b)) / (2.0 * rho + 1.0);
            let fp = sys.fixed_point(rho).unwrap();
            assert!((fp[0] - expect0).abs() < 1e-14, "rho={rho}");
            assert!((fp[1] - expect1).abs() < 1e-14, "rho={rho}");
        }
        let fp = sys.fixed_point(1.0).unwrap();
        assert!((fp[0] - 0.7 / 3.0).abs() < 1e-15);
        assert!((fp[1] - 1.1 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn fixed_point_residual_is_tiny() {
        let sys = OpinionSystem::new(
            vec![
                vec![0.0, 0.3, 1.2],
                vec![0.3, 0.0, 0.7],
                vec![1.2, 0.7, 0.0],
            ],
            vec![0.5, 2.0, 1.0],
            vec![0.1, 0.9, 0.4],
        )
        .unwrap();
        // Residuals of representable vectors are quantized at ~rho·eps, so
        // the absolute criterion is meaningful up to rho ≈ 1e6.
        for rho in [1e-3, 1.0, 1e3, 1e6] {
            let fp = sys.fixed_point(rho).unwrap();
            let scale = sys
                .stubbornness()
                .iter()
                .zip(sys.preferred())
                .map(|(s, p)| (s * p).abs())
                .fold(1.0f64, f64::max);
            assert!(
                sys.fixed_point_residual_inf(&fp, rho) <= 1e-10 * scale,
                "rho={rho}"
            );
        }
    }

    #[test]
    fn fixed_point_beyond_threshold_is_the_consensus_point() {
        let sys = OpinionSystem::new(
            vec![
                vec![0.0, 0.3, 1.2],
                vec![0.3, 0.0, 0.7],
                vec![1.2, 0.7, 0.0],
            ],
            vec![0.5, 2.0, 1.0],
            vec![0.1, 0.9, 0.4],
        )
        .unwrap();
        for rho in [1e16, 1e20, 1e300] {
            let fp = sys.fixed_point(rho).unwrap();
            assert_eq!(fp, sys.consensus_limit(), "rho={rho}");
            let next = sys.step(&fp, rho).unwrap();
            assert!(dist_inf(next.as_slice(), fp.as_slice()) <= 1e-12, "rho={rho}");
        }
    }

    #[test]
    fn fixed_point_approaches_consensus() {
        let sys = k2((0.1, 0.5));
        let fp = sys.fixed_point(1e6).unwrap();
        assert!((fp[0] - 0.3).abs() < 1e-6);
        assert!((fp[1] - 0.3).abs() < 1e-6);
    }

    #[test]
    fn constant_preference_fixed_point_is_constant() {
        let sys = OpinionSystem::new(
            vec![vec![0.0, 2.0, 0.5], vec![2.0, 0.0, 1.0], vec![0.5, 1.0, 0.0]],
            vec![3.0, 1.0, 2.0],
            vec![0.7; 3],
        )
        .unwrap();
        for rho in [0.5, 10.0, 1e8] {
            let fp = sys.fixed_point(rho).unwrap();
            for i in 0..3 {
                assert!((fp[i] - 0.7).abs() < 1e-13, "rho={rho}");
            }
        }
    }

    #[test]
    fn consensus_limit_examples() {
        let sys = k2((0.1, 0.5));
        assert_eq!(sys.consensus_limit().as_slice(), &[0.3, 0.3]);

        let weighted = OpinionSystem::new(
            vec![vec![0.0, 1.0], vec![1.0, 0.0]],
            vec![3.0, 1.0],
            vec![0.0, 1.0],
        )
        .unwrap();
        assert_eq!(weighted.consensus_limit().as_slice(), &[0.25, 0.25]);

        let constant = k2((0.4, 0.4));
        assert_eq!(constant.consensus_limit().as_slice(), &[0.4, 0.4]);
    }

    #[test]
    fn factored_branch_respects_the_unit_hull() {
        // Above the threshold the coefficients are formed from s/rho; the
        // convex-combination bound must survive the reformulation.
        let sys = OpinionSystem::new(
            vec![vec![0.0, 0.3, 1.2], vec![0.3, 0.0, 0.7], vec![1.2, 0.7, 0.0]],
            vec![0.5, 2.0, 1.0],
            vec![0.0, 1.0, 0.25],
        )
        .unwrap();
        let mut x = StateVector::new(vec![1.0, 0.0, 0.5]).unwrap();
        for rho in [1e16, 1e100, 1e300] {
            x = sys.step(&x, rho).unwrap();
            for i in 0..3 {
                assert!((0.0..=1.0).contains(&x[i]), "rho={rho}: {}", x[i]);
            }
        }
    }

    #[test]
    fn single_step_simulation_equals_step() {
        let sys = k2((0.1, 0.5));
        let schedule = PressureSchedule::Linear { slope: 1.0 };
        let traj = sys.simulate(&schedule, 1).unwrap();
        let x0 = StateVector::new(vec![0.1, 0.5]).unwrap();
        let direct = sys.step(&x0, schedule.rho(1)).unwrap();
        assert_eq!(traj.states.len(), 2);
        assert_eq!(traj.states[1], direct);
        assert_eq!(traj.steps(), 1);
    }

    #[test]
    fn simulation_prefix_is_deterministic() {
        let sys = k2((0.1, 0.5));
        let schedule = PressureSchedule::ExpSqrt { base: 2.0 };
        let short = sys.simulate(&schedule, 50).unwrap();
        let long = sys.simulate(&schedule, 200).unwrap();
        assert_eq!(&long.states[..51], &short.states[..]);
    }

    #[test]
    fn simulation_stops_on_overflow() {
        let sys = k2((0.1, 0.5));
        let schedule = PressureSchedule::Constant { value: 100.0 };
        let err = sys
            .simulate_opts(&schedule, 10, None, 50.0)
            .unwrap_err();
        assert_eq!(
            err,
            Error::ScheduleOverflow {
                step: 1,
                rho: 100.0,
                cap: 50.0
            }
        );
    }

    #[test]
    fn trajectory_lists_are_aligned() {
        let sys = k2((0.1, 0.5));
        let traj = sys
            .simulate(&PressureSchedule::Linear { slope: 1.0 }, 25)
            .unwrap();
        assert_eq!(traj.states.len(), 26);
        assert_eq!(traj.rho.len(), 25);
        assert_eq!(traj.fixed_points.len(), 25);
        assert_eq!(traj.dist_to_limit.len(), 25);
    }
}
