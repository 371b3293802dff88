//! Contraction analysis for the pressure-driven update map.
//!
//! At pressure `ρ` the step map is affine with linear part
//! `M(ρ) = (S + ρD)⁻¹ ρA`, so for every state `x`
//!
//! ```text
//! step(x) − x*(ρ) = M(ρ) (x − x*(ρ))
//! ```
//!
//! and the tightest state-independent contraction factor in the Euclidean
//! norm is the spectral norm `α(ρ) = ‖M(ρ)‖₂`. Each `α < 1`, yet the
//! composed iteration only has to reach the consensus point when the
//! running product `Π α_k` tends to zero; schedules that grow too fast
//! leave a positive product and the iterates can stall at a positive
//! distance. This module computes per-step constants, accumulates the
//! product in the log domain, classifies its tail behavior, and evaluates
//! the chained per-step error bound used to audit trajectories.
//!
//! A finite computation cannot prove an infinite product converges to
//! zero, so classifications are deliberately labeled "numerically" /
//! "suspected" and the raw series stays available in the report.

use serde::{Deserialize, Serialize};

use crate::dynamics::{OpinionSystem, Trajectory, LARGE_RHO_THRESHOLD};
use crate::error::Error;
use crate::linalg::{dist2, jacobi_max_eig, power_iteration_max_eig, CompensatedSum, Matrix};
use crate::schedule::{PressureSchedule, DEFAULT_MAX_RHO};

/// Residual tolerance for the spectral-norm power iteration.
pub const POWER_ITERATION_TOL: f64 = 1e-12;

/// Iteration cap for the spectral-norm power iteration.
pub const POWER_ITERATION_CAP: usize = 100_000;

/// Dense Jacobi fallback is used below this size when the power iteration
/// stalls on a (near-)degenerate leading pair.
const JACOBI_FALLBACK_MAX: usize = 64;

/// Default floor for [`classify_product`] and the report builders.
pub const DEFAULT_CLASSIFICATION_FLOOR: f64 = 1e-12;

/// Stall threshold for the divergence-witness increments.
const STALL_INCREMENT: f64 = 1e-12;

impl OpinionSystem {
    /// The linear part `M(ρ) = (S + ρD)⁻¹ ρA` of the step map, with entries
    /// `M_ij = ρ A_ij / (s_i + ρ d_i)`. Above the large-pressure threshold
    /// the entries are formed as `A_ij / (s_i/ρ + d_i)`.
    pub fn iteration_matrix(&self, rho: f64) -> Result<Matrix, Error> {
        if !(rho.is_finite() && rho > 0.0) {
            return Err(Error::NonpositiveRho { rho });
        }
        let n = self.len();
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            if rho > LARGE_RHO_THRESHOLD {
                let den = self.stubbornness()[i] / rho + self.row_sums()[i];
                for j in 0..n {
                    m.set(i, j, self.adjacency().get(i, j) / den);
                }
            } else {
                let den = self.stubbornness()[i] + rho * self.row_sums()[i];
                for j in 0..n {
                    m.set(i, j, rho * self.adjacency().get(i, j) / den);
                }
            }
        }
        Ok(m)
    }

    /// The spectral norm `‖M(ρ)‖₂` (largest singular value) of the
    /// iteration matrix: the tightest state-independent factor in
    /// `‖step(x) − x*‖₂ ≤ α ‖x − x*‖₂`.
    ///
    /// Power iteration on `MᵀM`; a dense Jacobi eigensolve takes over for
    /// small systems if the iteration stalls. The value is a genuine
    /// contraction certificate only when it is below one: the spectral
    /// radius of `M(ρ)` is always below one, but for heterogeneous
    /// stubbornness/degree ratios the spectral *norm* can exceed it, and the
    /// honest norm is returned rather than clamped.
    pub fn contraction_constant(&self, rho: f64) -> Result<f64, Error> {
        let m = self.iteration_matrix(rho)?;
        let g = m.gram();
        let lambda = match power_iteration_max_eig(&g, POWER_ITERATION_TOL, POWER_ITERATION_CAP) {
            Some(l) => l,
            None if self.len() <= JACOBI_FALLBACK_MAX => jacobi_max_eig(&g),
            None => {
                return Err(Error::NormIterationDiverged {
                    iterations: POWER_ITERATION_CAP,
                })
            }
        };
        Ok(lambda.max(0.0).sqrt())
    }

    /// Max-row-sum (∞-norm) variant of the contraction constant:
    /// `max_i ρ d_i / (s_i + ρ d_i)`. A closed-form diagnostic; the
    /// spectral constant is the one used for products.
    pub fn contraction_constant_inf(&self, rho: f64) -> Result<f64, Error> {
        if !(rho.is_finite() && rho > 0.0) {
            return Err(Error::NonpositiveRho { rho });
        }
        let mut worst = 0.0f64;
        for i in 0..self.len() {
            let (s, d) = (self.stubbornness()[i], self.row_sums()[i]);
            let row = if rho > LARGE_RHO_THRESHOLD {
                d / (s / rho + d)
            } else {
                rho * d / (s + rho * d)
            };
            worst = worst.max(row);
        }
        Ok(worst)
    }

    /// Observed one-step contraction ratio at `x`:
    /// `‖step(x) − x*(ρ)‖₂ / ‖x − x*(ρ)‖₂`.
    ///
    /// Errors with [`Error::AtFixedPoint`] when the denominator vanishes.
    /// Bounded above by [`contraction_constant`](Self::contraction_constant);
    /// for the two-agent unit system the ratio equals `ρ/(1+ρ)` for every
    /// state.
    pub fn norm_ratio(&self, rho: f64, x: &crate::dynamics::StateVector) -> Result<f64, Error> {
        let fp = self.fixed_point(rho)?;
        let den = dist2(x.as_slice(), fp.as_slice());
        if den == 0.0 {
            return Err(Error::AtFixedPoint);
        }
        let fx = self.step(x, rho)?;
        Ok(dist2(fx.as_slice(), fp.as_slice()) / den)
    }
}

/// Tail classification of a contraction-factor product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ProductClass {
    /// The running product crossed the requested floor.
    VanishesNumerically,
    /// The divergence witness `Σ (1 − α_k)` stalled, the signature of a
    /// convergent sum and hence of a product with a positive limit.
    PositiveLimitSuspected,
    /// Neither signal fired within the examined horizon.
    Inconclusive,
}

/// One product factor, carried in three forms so that factors within an
/// ulp of 1 keep their full log-domain information: `alpha` (the factor,
/// possibly rounded to 1.0), `ln_alpha`, and `gap = 1 − alpha` computed
/// without cancellation where the source allows.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaTerm {
    pub alpha: f64,
    pub ln_alpha: f64,
    pub gap: f64,
}

impl AlphaTerm {
    /// Validates a plain factor. Accepts the closed interval `[0, 1]`:
    /// exactly 1.0 is the saturated rounding of a true factor below one and
    /// is treated as a neutral term rather than rejected.
    pub fn from_alpha(step: u64, alpha: f64) -> Result<Self, Error> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(Error::AlphaOutOfRange { step, alpha });
        }
        Ok(AlphaTerm {
            alpha,
            ln_alpha: alpha.ln(),
            gap: 1.0 - alpha,
        })
    }

    /// Factor `ρ/(1+ρ)` from a pressure value, with `ln α = −ln1p(1/ρ)` and
    /// `gap = 1/(1+ρ)`. Exact in the log domain even when the plain ratio
    /// rounds to 1.0.
    pub fn from_pressure(rho: f64) -> Self {
        AlphaTerm {
            alpha: rho / (1.0 + rho),
            ln_alpha: -(1.0 / rho).ln_1p(),
            gap: 1.0 / (1.0 + rho),
        }
    }
}

/// A source of per-step contraction factors, indexed from `k = 1`.
pub trait AlphaSource {
    fn term(&self, k: u64) -> Result<AlphaTerm, Error>;
}

/// Closed-form factors `ρ_k/(1+ρ_k)` of a pressure schedule — the per-step
/// constants of the two-agent unit system, kept exact in the log domain.
pub struct PressureRatioAlphas<'a>(pub &'a PressureSchedule);

impl AlphaSource for PressureRatioAlphas<'_> {
    fn term(&self, k: u64) -> Result<AlphaTerm, Error> {
        let rho = self.0.rho_checked(k, DEFAULT_MAX_RHO)?;
        if rho <= 0.0 {
            return Err(Error::NonpositiveRho { rho });
        }
        Ok(AlphaTerm::from_pressure(rho))
    }
}

/// Spectral-norm factors of a concrete system under a schedule.
///
/// Computed norms within the power-iteration tolerance above 1 are snapped
/// to the saturated value 1.0; anything larger is a genuine failure of the
/// spectral-norm certificate and surfaces as `AlphaOutOfRange`.
pub struct SystemAlphas<'a> {
    pub system: &'a OpinionSystem,
    pub schedule: &'a PressureSchedule,
}

impl AlphaSource for SystemAlphas<'_> {
    fn term(&self, k: u64) -> Result<AlphaTerm, Error> {
        let rho = self.schedule.rho_checked(k, DEFAULT_MAX_RHO)?;
        let mut alpha = self.system.contraction_constant(rho)?;
        if alpha > 1.0 && alpha <= 1.0 + 1e-10 {
            alpha = 1.0;
        }
        AlphaTerm::from_alpha(k, alpha)
    }
}

/// Explicit factors, `k = 1` mapping to the first slice element.
pub struct SliceAlphas<'a>(pub &'a [f64]);

impl AlphaSource for SliceAlphas<'_> {
    fn term(&self, k: u64) -> Result<AlphaTerm, Error> {
        let idx = (k - 1) as usize;
        assert!(idx < self.0.len(), "alpha slice exhausted at k={k}");
        AlphaTerm::from_alpha(k, self.0[idx])
    }
}

impl<F> AlphaSource for F
where
    F: Fn(u64) -> Result<AlphaTerm, Error>,
{
    fn term(&self, k: u64) -> Result<AlphaTerm, Error> {
        self(k)
    }
}

/// `Π_{k=1..n} α_k` via an ascending compensated log-domain accumulation.
///
/// Exact zero is returned only when some factor is exactly zero; otherwise
/// the value is `exp` of the log sum, which resists the progressive
/// underflow a direct product would suffer.
pub fn partial_product<S: AlphaSource>(source: &S, n: u64) -> Result<f64, Error> {
    assert!(n >= 1, "partial products need at least one factor");
    let mut log_sum = CompensatedSum::default();
    for k in 1..=n {
        let term = source.term(k)?;
        if term.alpha == 0.0 {
            return Ok(0.0);
        }
        log_sum.add(term.ln_alpha);
    }
    Ok(log_sum.value().exp())
}

/// Classifies the product tail after at most `n_max` factors; see
/// [`ContractionReport::from_source`] for the rules.
pub fn classify_product<S: AlphaSource>(
    source: &S,
    n_max: u64,
    floor: f64,
) -> Result<ProductClass, Error> {
    assert!(n_max >= 10, "classification needs at least ten factors");
    Ok(ContractionReport::from_source(source, n_max, floor)?.classification)
}

/// Per-step contraction factors with their running products, log sum,
/// divergence witness, and tail classification.
#[derive(Debug, Clone, PartialEq)]
pub struct ContractionReport {
    /// `α_k` for `k = 1..=n` (values within an ulp of 1 print as 1.0).
    pub alphas: Vec<f64>,
    /// Running direct products `P_k`, saturated at the smallest positive
    /// normal float so the sequence stays positive and nonincreasing; an
    /// exactly zero factor forces exact zeros from that step on. Cross-check
    /// against `exp(log_sum)`, which carries the full dynamic range.
    pub partial_products: Vec<f64>,
    /// Compensated `Σ ln α_k` (−∞ once a factor is exactly zero).
    pub log_sum: f64,
    pub classification: ProductClass,
    /// Divergence witness `Σ (1 − α_k)`; `Π α_k → 0` iff this sum diverges.
    pub tail_estimate: f64,
}

impl ContractionReport {
    /// Accumulates `n` factors and classifies the tail:
    ///
    /// - `VanishesNumerically` when the log sum crosses `ln floor` at any
    ///   step (or a factor is exactly zero);
    /// - otherwise `PositiveLimitSuspected` when the divergence witness
    ///   gained less than 1e−12 over the last `n/10` steps — a stalled
    ///   witness sum is the numerical signature of a positive limit;
    /// - otherwise `Inconclusive`.
    pub fn from_source<S: AlphaSource>(source: &S, n: u64, floor: f64) -> Result<Self, Error> {
        assert!(n >= 1, "reports need at least one factor");
        assert!(
            floor > 0.0 && floor < 1.0,
            "classification floor must lie in (0, 1)"
        );
        let ln_floor = floor.ln();
        let window = (n / 10).max(1);
        let checkpoint = n.saturating_sub(window);

        let mut alphas = Vec::with_capacity(n as usize);
        let mut products = Vec::with_capacity(n as usize);
        let mut log_sum = CompensatedSum::default();
        let mut witness = CompensatedSum::default();
        let mut witness_at_checkpoint = 0.0;
        let mut running = 1.0f64;
        let mut zero_seen = false;
        let mut vanished = false;

        for k in 1..=n {
            let term = source.term(k)?;
            alphas.push(term.alpha);
            if term.alpha == 0.0 {
                zero_seen = true;
            }
            if zero_seen {
                running = 0.0;
            } else {
                log_sum.add(term.ln_alpha);
                running = (running * term.alpha).max(f64::MIN_POSITIVE);
            }
            products.push(running);
            witness.add(term.gap);
            if k == checkpoint {
                witness_at_checkpoint = witness.value();
            }
            if !vanished && (zero_seen || log_sum.value() < ln_floor) {
                vanished = true;
            }
        }

        let tail_estimate = witness.value();
        let classification = if vanished {
            ProductClass::VanishesNumerically
        } else if tail_estimate - witness_at_checkpoint < STALL_INCREMENT {
            ProductClass::PositiveLimitSuspected
        } else {
            ProductClass::Inconclusive
        };

        Ok(ContractionReport {
            alphas,
            partial_products: products,
            log_sum: if zero_seen {
                f64::NEG_INFINITY
            } else {
                log_sum.value()
            },
            classification,
            tail_estimate,
        })
    }

    pub fn len(&self) -> usize {
        self.alphas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alphas.is_empty()
    }

    /// `exp(log_sum)`: the final product with the log-domain dynamic range.
    pub fn final_partial_product(&self) -> f64 {
        self.log_sum.exp()
    }
}

/// Chained per-step error bounds for a recorded trajectory.
///
/// With `E_k = ‖x_k − x*_k‖₂`, `D_k = ‖x*_{k+1} − x*_k‖₂`, and `α_k` the
/// per-step contraction constants, one triangle inequality per step gives
///
/// ```text
/// E_{k+1} ≤ α_{k+1} (E_k + D_k)
/// ```
///
/// whose unrolled form telescopes into
/// `(Π_{i=2..k+1} α_i) E_1 + Σ_j (Π_{i=j+1..k+1} α_i) D_j`. The recursion
/// `R_{k+1} = α_{k+1} (R_k + D_k)` with `R_1 = E_1` evaluates exactly that
/// bound. Returned values are `R_k` for `k = 1..=steps`; `E_k ≤ R_k` must
/// hold for `k ≥ 2` (the `k = 1` entry is the seed, equal by construction).
pub fn telescoped_bounds(trajectory: &Trajectory, alphas: &[f64]) -> Vec<f64> {
    let steps = trajectory.steps() as usize;
    assert_eq!(alphas.len(), steps, "one alpha per recorded step");
    if steps == 0 {
        return Vec::new();
    }
    let mut bounds = Vec::with_capacity(steps);
    let mut r = dist2(
        trajectory.states[1].as_slice(),
        trajectory.fixed_points[0].as_slice(),
    );
    bounds.push(r);
    for k in 2..=steps {
        let gap = dist2(
            trajectory.fixed_points[k - 1].as_slice(),
            trajectory.fixed_points[k - 2].as_slice(),
        );
        r = alphas[k - 1] * (r + gap);
        bounds.push(r);
    }
    bounds
}

/// Slack `R_k − E_k` of the chained bound for `k = 2..=steps`. All entries
/// are nonnegative up to rounding when the `alphas` genuinely dominate the
/// per-step contraction.
pub fn telescoped_slacks(trajectory: &Trajectory, alphas: &[f64]) -> Vec<f64> {
    let bounds = telescoped_bounds(trajectory, alphas);
    (2..=trajectory.steps() as usize)
        .map(|k| {
            let err = dist2(
                trajectory.states[k].as_slice(),
                trajectory.fixed_points[k - 1].as_slice(),
            );
            bounds[k - 1] - err
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::StateVector;

    fn k2() -> OpinionSystem {
        OpinionSystem::new(
            vec![vec![0.0, 1.0], vec![1.0, 0.0]],
            vec![1.0, 1.0],
            vec![0.1, 0.5],
        )
        .unwrap()
    }

    fn three_node() -> OpinionSystem {
        OpinionSystem::new(
            vec![
                vec![0.0, 0.4, 1.1],
                vec![0.4, 0.0, 0.6],
                vec![1.1, 0.6, 0.0],
            ],
            vec![0.8, 1.5, 0.3],
            vec![0.2, 0.9, 0.5],
        )
        .unwrap()
    }

    /// Test-local spectral norm: characteristic-polynomial-free cyclic
    /// Jacobi written independently of the library kernels.
    fn oracle_sigma_max(m: &Matrix) -> f64 {
        let n = m.rows();
        let mut g = vec![vec![0.0f64; n]; n];
        for a in 0..n {
            for b in 0..n {
                let mut acc = 0.0;
                for i in 0..n {
                    acc += m.get(i, a) * m.get(i, b);
                }
                g[a][b] = acc;
            }
        }
        for _ in 0..60 {
            for p in 0..n {
                for q in p + 1..n {
                    if g[p][q].abs() < 1e-300 {
                        continue;
                    }
                    let theta = 0.5 * (2.0 * g[p][q]).atan2(g[p][p] - g[q][q]);
                    let (s, c) = theta.sin_cos();
                    for k in 0..n {
                        let (gkp, gkq) = (g[k][p], g[k][q]);
                        g[k][p] = c * gkp + s * gkq;
                        g[k][q] = -s * gkp + c * gkq;
                    }
                    for k in 0..n {
                        let (gpk, gqk) = (g[p][k], g[q][k]);
                        g[p][k] = c * gpk + s * gqk;
                        g[q][k] = -s * gpk + c * gqk;
                    }
                }
            }
        }
        (0..n).map(|i| g[i][i]).fold(0.0f64, f64::max).sqrt()
    }

    #[test]
    fn iteration_matrix_closed_form_on_k2() {
        let sys = k2();
        for rho in [0.25, 1.0, 7.0, 1e6] {
            let m = sys.iteration_matrix(rho).unwrap();
            let c = rho / (1.0 + rho);
            assert_eq!(m.get(0, 0), 0.0);
            assert_eq!(m.get(1, 1), 0.0);
            assert!((m.get(0, 1) - c).abs() < 1e-15, "rho={rho}");
            assert!((m.get(1, 0) - c).abs() < 1e-15, "rho={rho}");
        }
    }

    #[test]
    fn iteration_matrix_vanishes_at_zero_pressure() {
        let sys = three_node();
        let m = sys.iteration_matrix(1e-12).unwrap();
        assert!(m.max_abs() < 1e-11);
        assert!(sys.iteration_matrix(0.0).is_err());
    }

    #[test]
    fn iteration_matrix_rows_are_substochastic() {
        let sys = three_node();
        for rho in [1e-3, 1.0, 1e4, 1e12] {
            let m = sys.iteration_matrix(rho).unwrap();
            for i in 0..3 {
                let row_sum: f64 = m.row(i).iter().sum();
                assert!(row_sum < 1.0, "rho={rho} i={i} sum={row_sum}");
            }
        }
        // Far beyond 1/eps the rows saturate at exactly stochastic.
        let m = sys.iteration_matrix(1e20).unwrap();
        for i in 0..3 {
            let row_sum: f64 = m.row(i).iter().sum();
            assert!(row_sum <= 1.0, "i={i} sum={row_sum}");
        }
    }

    #[test]
    fn contraction_constant_matches_k2_closed_form() {
        let sys = k2();
        for rho in [0.01, 1.0, 3.0, 10.0, 1e6] {
            let alpha = sys.contraction_constant(rho).unwrap();
            assert!(
                (alpha - rho / (1.0 + rho)).abs() <= 1e-10,
                "rho={rho} alpha={alpha}"
            );
        }
        assert!((sys.contraction_constant(1.0).unwrap() - 0.5).abs() <= 1e-10);
        assert!((sys.contraction_constant(3.0).unwrap() - 0.75).abs() <= 1e-10);
    }

    #[test]
    fn contraction_constant_matches_dense_oracle() {
        let sys = three_node();
        for rho in [0.1, 1.0, 25.0, 3e3] {
            let fast = sys.contraction_constant(rho).unwrap();
            let slow = oracle_sigma_max(&sys.iteration_matrix(rho).unwrap());
            assert!((fast - slow).abs() <= 1e-9, "rho={rho}: {fast} vs {slow}");
        }
    }

    #[test]
    fn spectral_norm_can_exceed_the_row_sum_bound() {
        // Heterogeneous stubbornness/degree ratios push the 2-norm above 1
        // even though the spectral radius stays below it; the honest norm is
        // reported and the product analysis rejects it as a certificate.
        let sys = three_node();
        let alpha = sys.contraction_constant(25.0).unwrap();
        assert!(alpha > 1.0, "expected a supercritical norm, got {alpha}");
        let schedule = PressureSchedule::Constant { value: 25.0 };
        let source = SystemAlphas {
            system: &sys,
            schedule: &schedule,
        };
        assert!(matches!(
            partial_product(&source, 5),
            Err(Error::AlphaOutOfRange { step: 1, .. })
        ));
    }

    #[test]
    fn inf_norm_constant_bounds_rows() {
        let sys = three_node();
        for rho in [0.5, 50.0] {
            let m = sys.iteration_matrix(rho).unwrap();
            let inf = sys.contraction_constant_inf(rho).unwrap();
            let max_row: f64 = (0..3)
                .map(|i| m.row(i).iter().sum::<f64>())
                .fold(0.0, f64::max);
            assert!((inf - max_row).abs() < 1e-14);
        }
    }

    #[test]
    fn norm_ratio_closed_form_on_k2() {
        let sys = k2();
        let x = StateVector::new(vec![0.0, 1.0]).unwrap();
        let r = sys.norm_ratio(1.0, &x).unwrap();
        assert!((r - 0.5).abs() <= 1e-12);

        for x in [
            StateVector::new(vec![0.9, -0.2]).unwrap(),
            StateVector::new(vec![0.31, 0.29]).unwrap(),
        ] {
            let r = sys.norm_ratio(99.0, &x).unwrap();
            assert!((r - 0.99).abs() <= 1e-12, "got {r}");
        }
    }

    #[test]
    fn norm_ratio_bounded_by_constant() {
        let sys = three_node();
        let alpha = sys.contraction_constant(4.2).unwrap();
        for x in [
            StateVector::new(vec![0.0, 0.0, 1.0]).unwrap(),
            StateVector::new(vec![-2.0, 0.4, 0.7]).unwrap(),
        ] {
            let r = sys.norm_ratio(4.2, &x).unwrap();
            assert!(r <= alpha + 1e-12, "{r} vs {alpha}");
        }
    }

    #[test]
    fn norm_ratio_rejects_fixed_point() {
        let sys = k2();
        let fp = sys.fixed_point(2.0).unwrap();
        assert_eq!(sys.norm_ratio(2.0, &fp), Err(Error::AtFixedPoint));
    }

    #[test]
    fn telescoping_partial_product() {
        let schedule = PressureSchedule::Linear { slope: 1.0 };
        let p = partial_product(&PressureRatioAlphas(&schedule), 9).unwrap();
        assert!((p - 0.1).abs() <= 1e-12 * 0.1, "got {p}");
    }

    #[test]
    fn geometric_partial_product() {
        let alphas = [0.5; 10];
        let p = partial_product(&SliceAlphas(&alphas), 10).unwrap();
        assert!((p - 2f64.powi(-10)).abs() <= 1e-12 * 2f64.powi(-10));
    }

    #[test]
    fn counterexample_partial_product_regression() {
        let schedule = PressureSchedule::ExpSqrt { base: 2.0 };
        let p = partial_product(&PressureRatioAlphas(&schedule), 10_000).unwrap();
        assert!((p - 0.0310128).abs() <= 1e-4);
        // Frozen from a 60-digit evaluation of the same product.
        assert!((p - 0.031012782699722206).abs() <= 1e-12, "got {p:.17e}");
    }

    #[test]
    fn zero_factor_short_circuits() {
        let alphas = [0.0, 0.9, 0.9];
        assert_eq!(partial_product(&SliceAlphas(&alphas), 3).unwrap(), 0.0);
        let report = ContractionReport::from_source(&SliceAlphas(&alphas), 3, 1e-12).unwrap();
        assert_eq!(report.classification, ProductClass::VanishesNumerically);
        assert_eq!(report.partial_products, vec![0.0, 0.0, 0.0]);
        assert_eq!(report.log_sum, f64::NEG_INFINITY);
    }

    #[test]
    fn alpha_range_is_enforced() {
        assert!(matches!(
            partial_product(&SliceAlphas(&[0.5, 1.5]), 2),
            Err(Error::AlphaOutOfRange { step: 2, .. })
        ));
        assert!(matches!(
            partial_product(&SliceAlphas(&[-0.1]), 1),
            Err(Error::AlphaOutOfRange { step: 1, .. })
        ));
        // Saturated factors pass through as neutral terms.
        assert_eq!(partial_product(&SliceAlphas(&[1.0, 0.25]), 2).unwrap(), 0.25);
    }

    #[test]
    fn classification_examples() {
        let linear = PressureSchedule::Linear { slope: 1.0 };
        assert_eq!(
            classify_product(&PressureRatioAlphas(&linear), 1_000_000, 1e-12).unwrap(),
            ProductClass::Inconclusive
        );
        assert_eq!(
            classify_product(&PressureRatioAlphas(&linear), 1_000_000, 1e-5).unwrap(),
            ProductClass::VanishesNumerically
        );
        let expsqrt = PressureSchedule::ExpSqrt { base: 2.0 };
        assert_eq!(
            classify_product(&PressureRatioAlphas(&expsqrt), 10_000, 1e-12).unwrap(),
            ProductClass::PositiveLimitSuspected
        );
        let constant = PressureSchedule::Constant { value: 1.0 };
        assert_eq!(
            classify_product(&PressureRatioAlphas(&constant), 10_000, 1e-12).unwrap(),
            ProductClass::VanishesNumerically
        );
    }

    #[test]
    fn report_routes_agree() {
        let schedule = PressureSchedule::ExpSqrt { base: 2.0 };
        let report =
            ContractionReport::from_source(&PressureRatioAlphas(&schedule), 2_000, 1e-12).unwrap();
        let direct = *report.partial_products.last().unwrap();
        let logged = report.final_partial_product();
        assert!(
            (direct - logged).abs() <= 1e-9 * logged,
            "direct {direct} vs log {logged}"
        );
        for w in report.partial_products.windows(2) {
            assert!(w[1] <= w[0]);
            assert!(w[1] > 0.0);
        }
    }

    #[test]
    fn chained_bound_holds_on_short_runs() {
        let sys = k2();
        for schedule in [
            PressureSchedule::Linear { slope: 1.0 },
            PressureSchedule::ExpSqrt { base: 2.0 },
        ] {
            let traj = sys.simulate(&schedule, 300).unwrap();
            let report =
                ContractionReport::from_source(&SystemAlphas {
                    system: &sys,
                    schedule: &schedule,
                }, 300, 1e-12)
                .unwrap();
            let slacks = telescoped_slacks(&traj, &report.alphas);
            let min = slacks.iter().cloned().fold(f64::INFINITY, f64::min);
            assert!(min >= -1e-9, "min slack {min} for {schedule:?}");
        }
    }
}
