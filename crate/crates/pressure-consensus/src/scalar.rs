//! One-dimensional map families with fixed point 0, and the Euler
//! function.
//!
//! These families make the product criterion tangible without any graph
//! machinery. Every member of either family contracts toward 0, yet the
//! composed maps behave differently:
//!
//! - `GeometricGap`: `f_k(x) = (1 − q^k) x`. The factors approach 1 so
//!   fast that `Π (1 − q^k)` converges to the Euler function `φ(q) > 0`;
//!   composition stalls at `φ(q)·x` instead of reaching the fixed point.
//! - `Telescoping`: `f_k(x) = ((k−1)/k) x`. The product telescopes to
//!   `x/k → 0`; composition does reach the fixed point.
//!
//! Read literally, the telescoping family's `k = 1` factor is `0/1 = 0`,
//! which annihilates every input at the first application and trivializes
//! the example. [`scalar_compose`] therefore starts that family at
//! `k = 2`, which yields the intended `x/k` envelope;
//! [`scalar_compose_from`] exposes the literal start for completeness.

use crate::error::Error;

/// A family of scalar contraction maps, indexed by `k ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ScalarFamily {
    /// `f_k(x) = (1 − q^k) x` with `q ∈ (0, 1)`.
    GeometricGap { q: f64 },
    /// `f_k(x) = ((k − 1)/k) x`.
    Telescoping,
}

impl ScalarFamily {
    /// Validated constructor for the geometric-gap family.
    pub fn geometric_gap(q: f64) -> Result<Self, Error> {
        if !(q.is_finite() && q > 0.0 && q < 1.0) {
            return Err(Error::QOutOfRange { q });
        }
        Ok(ScalarFamily::GeometricGap { q })
    }

    /// The multiplier of the `k`-th map.
    pub fn factor(&self, k: u64) -> f64 {
        match self {
            ScalarFamily::GeometricGap { q } => 1.0 - q.powi(k.min(i32::MAX as u64) as i32),
            ScalarFamily::Telescoping => (k - 1) as f64 / k as f64,
        }
    }

    /// First index used by [`scalar_compose`]: 1, except 2 for the
    /// telescoping family whose literal first factor is zero.
    pub fn default_start(&self) -> u64 {
        match self {
            ScalarFamily::GeometricGap { .. } => 1,
            ScalarFamily::Telescoping => 2,
        }
    }

    fn assert_valid(&self) {
        if let ScalarFamily::GeometricGap { q } = self {
            assert!(
                q.is_finite() && *q > 0.0 && *q < 1.0,
                "geometric-gap parameter out of range: {q}"
            );
        }
    }
}

/// Composes `f_k ∘ … ∘ f_start` applied to `x` by literal factor-by-factor
/// multiplication, with `start` the family's default start index.
pub fn scalar_compose(family: &ScalarFamily, x: f64, k_max: u64) -> f64 {
    scalar_compose_from(family, x, k_max, family.default_start())
}

/// [`scalar_compose`] with an explicit start index. `start = 1` on the
/// telescoping family applies the literal zero factor and returns 0 for
/// every input.
pub fn scalar_compose_from(family: &ScalarFamily, x: f64, k_max: u64, start: u64) -> f64 {
    assert!(k_max >= 1, "composition needs at least one map");
    assert!(start >= 1, "map indices begin at 1");
    family.assert_valid();
    let mut value = x;
    for k in start..=k_max {
        value *= family.factor(k);
    }
    value
}

/// The Euler function `φ(q) = Π_{n≥1} (1 − qⁿ)`.
///
/// The product is truncated once the geometric tail bound
/// `Σ_{m>n} q^m = q^{n+1}/(1−q) < tol`, which caps the relative truncation
/// error by `2·tol/(1−q)`; for `q ≤ 0.9` the returned value is within
/// `tol` of the true one.
pub fn euler_phi(q: f64, tol: f64) -> Result<f64, Error> {
    if !q.is_finite() || !(0.0..1.0).contains(&q) {
        return Err(Error::QOutOfRange { q });
    }
    assert!(tol.is_finite() && tol > 0.0, "tolerance must be positive");
    if q == 0.0 {
        return Ok(1.0);
    }
    let mut product = 1.0;
    let mut qn = 1.0;
    loop {
        qn *= q;
        product *= 1.0 - qn;
        if qn * q / (1.0 - q) < tol {
            return Ok(product);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Frozen from a 60-digit evaluation; the in-test oracle below re-derives
    // them by direct long products.
    const PHI_TENTH: f64 = 0.890010099998999;
    const PHI_HALF: f64 = 0.2887880950866024;

    fn oracle_phi(q: f64, factors: u32) -> f64 {
        let mut p = 1.0f64;
        for n in 1..=factors {
            p *= 1.0 - q.powi(n as i32);
        }
        p
    }

    #[test]
    fn euler_phi_matches_frozen_values() {
        let phi = euler_phi(0.1, 1e-14).unwrap();
        assert!((phi - PHI_TENTH).abs() < 1e-13, "got {phi:.17}");
        assert!((phi - oracle_phi(0.1, 400)).abs() < 1e-13);

        let phi = euler_phi(0.5, 1e-14).unwrap();
        assert!((phi - PHI_HALF).abs() < 1e-13, "got {phi:.17}");
        assert!((phi - oracle_phi(0.5, 400)).abs() < 1e-13);
    }

    #[test]
    fn euler_phi_at_zero_is_one() {
        assert_eq!(euler_phi(0.0, 1e-10).unwrap(), 1.0);
    }

    #[test]
    fn euler_phi_respects_tolerance_contract() {
        for q in [0.3, 0.6, 0.9] {
            let coarse = euler_phi(q, 1e-4).unwrap();
            let fine = euler_phi(q, 1e-14).unwrap();
            assert!((coarse - fine).abs() <= 1e-4, "q={q}");
        }
    }

    #[test]
    fn euler_phi_rejects_bad_q() {
        assert!(matches!(euler_phi(1.0, 1e-8), Err(Error::QOutOfRange { .. })));
        assert!(matches!(euler_phi(-0.1, 1e-8), Err(Error::QOutOfRange { .. })));
        assert!(matches!(
            euler_phi(f64::NAN, 1e-8),
            Err(Error::QOutOfRange { .. })
        ));
    }

    #[test]
    fn euler_phi_is_decreasing_in_q() {
        let mut prev = 1.0;
        for i in 1..10 {
            let q = i as f64 / 10.0;
            let phi = euler_phi(q, 1e-10).unwrap();
            assert!(phi > 0.0 && phi < 1.0);
            assert!(phi < prev, "phi({q}) = {phi} not below {prev}");
            prev = phi;
        }
    }

    #[test]
    fn geometric_composition_approaches_phi() {
        let family = ScalarFamily::geometric_gap(0.1).unwrap();
        let value = scalar_compose(&family, 1.0, 200);
        assert!((value - 0.89001).abs() <= 1e-5, "got {value}");
        assert_eq!(scalar_compose(&family, 0.0, 50), 0.0);
    }

    #[test]
    fn telescoping_composition_is_x_over_k() {
        let family = ScalarFamily::Telescoping;
        let value = scalar_compose(&family, 1.0, 100);
        assert!((value - 0.01).abs() <= 1e-12 * 0.01, "got {value:.17}");
        // Literal start applies the zero factor immediately.
        assert_eq!(scalar_compose_from(&family, 1.0, 100, 1), 0.0);
        assert_eq!(scalar_compose_from(&family, -3.5, 7, 1), 0.0);
    }

    #[test]
    fn geometric_gap_constructor_validates() {
        assert!(ScalarFamily::geometric_gap(0.5).is_ok());
        assert!(matches!(
            ScalarFamily::geometric_gap(0.0),
            Err(Error::QOutOfRange { .. })
        ));
        assert!(matches!(
            ScalarFamily::geometric_gap(1.0),
            Err(Error::QOutOfRange { .. })
        ));
    }
}
