//! Property tests over random systems, pressures, and states.

#![allow(clippy::needless_range_loop)]

use proptest::prelude::*;

use pressure_consensus::linalg::{dist2, dist_inf, dot, Matrix};
use pressure_consensus::output::fmt_f64;
use pressure_consensus::{
    partial_product, OpinionSystem, PressureSchedule, SliceAlphas, StateVector,
};

#[derive(Debug, Clone)]
struct SystemSpec {
    adjacency: Vec<Vec<f64>>,
    stubbornness: Vec<f64>,
    preferred: Vec<f64>,
}

impl SystemSpec {
    fn build(&self) -> OpinionSystem {
        OpinionSystem::new(
            self.adjacency.clone(),
            self.stubbornness.clone(),
            self.preferred.clone(),
        )
        .expect("generated systems are valid")
    }

    fn with_preferred(&self, preferred: Vec<f64>) -> OpinionSystem {
        OpinionSystem::new(self.adjacency.clone(), self.stubbornness.clone(), preferred)
            .expect("generated systems are valid")
    }
}

/// Connected symmetric system on 2..=8 nodes: a random spanning tree plus
/// optional extra edges.
fn system_spec() -> impl Strategy<Value = SystemSpec> {
    (2usize..=8)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec((any::<u64>(), 0.1f64..2.0), n - 1),
                proptest::collection::vec(proptest::option::weighted(0.3, 0.1f64..2.0), n * n),
                proptest::collection::vec(0.1f64..5.0, n),
                proptest::collection::vec(0.0f64..1.0, n),
            )
        })
        .prop_map(|(n, tree, extra, stubbornness, preferred)| {
            let mut adjacency = vec![vec![0.0f64; n]; n];
            for (i, (seed, w)) in tree.iter().enumerate() {
                let node = i + 1;
                let parent = (*seed as usize) % node;
                adjacency[node][parent] = *w;
                adjacency[parent][node] = *w;
            }
            for i in 0..n {
                for j in 0..i {
                    if adjacency[i][j] == 0.0 {
                        if let Some(w) = extra[i * n + j] {
                            adjacency[i][j] = w;
                            adjacency[j][i] = w;
                        }
                    }
                }
            }
            SystemSpec {
                adjacency,
                stubbornness,
                preferred,
            }
        })
}

fn log_uniform_rho() -> impl Strategy<Value = f64> {
    (-3.0f64..6.0).prop_map(|e| 10f64.powf(e))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn fixed_point_is_stationary(spec in system_spec(), rho in log_uniform_rho()) {
        let sys = spec.build();
        let fp = sys.fixed_point(rho).unwrap();
        let next = sys.step(&fp, rho).unwrap();
        prop_assert!(dist_inf(next.as_slice(), fp.as_slice()) <= 1e-9);
    }

    #[test]
    fn fixed_point_residual_criterion(spec in system_spec(), rho in log_uniform_rho()) {
        let sys = spec.build();
        let fp = sys.fixed_point(rho).unwrap();
        let mut rhs_scale = 1.0f64;
        for i in 0..sys.len() {
            rhs_scale = rhs_scale.max((sys.stubbornness()[i] * sys.preferred()[i]).abs());
        }
        prop_assert!(sys.fixed_point_residual_inf(&fp, rho) <= 1e-10 * rhs_scale);
    }

    #[test]
    fn contraction_inequality_holds(
        spec in system_spec(),
        rho in log_uniform_rho(),
        seed in any::<u64>(),
    ) {
        let sys = spec.build();
        let n = sys.len();
        let fp = sys.fixed_point(rho).unwrap();
        let alpha = sys.contraction_constant(rho).unwrap();
        // Deterministic state sweep derived from the seed.
        let mut state = vec![0.0f64; n];
        for trial in 0..20u64 {
            for (i, slot) in state.iter_mut().enumerate() {
                let h = seed
                    .wrapping_mul(0x9e37_79b9_7f4a_7c15)
                    .wrapping_add((trial * 31 + i as u64) * 0x85eb_ca6b);
                *slot = (h % 4_000) as f64 / 1_000.0 - 2.0;
            }
            let x = StateVector::new(state.clone()).unwrap();
            let before = dist2(x.as_slice(), fp.as_slice());
            let after = dist2(sys.step(&x, rho).unwrap().as_slice(), fp.as_slice());
            prop_assert!(after <= (alpha + 1e-10) * before);
        }
    }

    #[test]
    fn trajectories_are_affine_invariant(
        spec in system_spec(),
        shift in -5.0f64..5.0,
        steps in 1u64..30,
    ) {
        let base = spec.build();
        let shifted_preferred: Vec<f64> =
            spec.preferred.iter().map(|p| p + shift).collect();
        let shifted = spec.with_preferred(shifted_preferred);
        let schedule = PressureSchedule::Linear { slope: 1.0 };
        let a = base.simulate(&schedule, steps).unwrap();
        let b = shifted.simulate(&schedule, steps).unwrap();
        for (xa, xb) in a.states.iter().zip(&b.states) {
            for i in 0..xa.len() {
                prop_assert!((xb[i] - xa[i] - shift).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn iterates_stay_in_the_unit_hull(spec in system_spec(), steps in 1u64..40) {
        // x+ and x0 in [0,1]^N keep every iterate there, in exact float
        // terms: neighbor sums and row sums share the accumulation order.
        let sys = spec.build();
        let schedule = PressureSchedule::ExpSqrt { base: 2.0 };
        let traj = sys.simulate(&schedule, steps).unwrap();
        for state in &traj.states {
            for i in 0..state.len() {
                prop_assert!((0.0..=1.0).contains(&state[i]), "escaped hull: {}", state[i]);
            }
        }
    }

    #[test]
    fn step_matches_dense_solve(
        spec in system_spec(),
        rho in log_uniform_rho(),
        seed in any::<u64>(),
    ) {
        let sys = spec.build();
        let n = sys.len();
        let state: Vec<f64> = (0..n)
            .map(|i| {
                let h = seed.wrapping_add(i as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15);
                (h % 3_000) as f64 / 1_000.0 - 1.0
            })
            .collect();
        let x = StateVector::new(state).unwrap();
        let fast = sys.step(&x, rho).unwrap();
        let mut m = Matrix::zeros(n, n);
        let mut rhs = vec![0.0; n];
        for i in 0..n {
            m.set(i, i, sys.stubbornness()[i] + rho * sys.row_sums()[i]);
            rhs[i] = sys.stubbornness()[i] * sys.preferred()[i]
                + rho * dot(sys.adjacency().row(i), x.as_slice());
        }
        let slow = m.solve(&rhs).unwrap();
        for i in 0..n {
            prop_assert!((fast[i] - slow[i]).abs() <= 1e-12 * slow[i].abs().max(1.0));
        }
    }

    #[test]
    fn partial_products_are_monotone(
        alphas in proptest::collection::vec(0.0f64..1.0, 1..200),
    ) {
        let n = alphas.len() as u64;
        let logged = partial_product(&SliceAlphas(&alphas), n).unwrap();
        let direct: f64 = alphas.iter().product();
        prop_assert!(logged >= 0.0);
        if direct > 1e-300 {
            prop_assert!((logged - direct).abs() <= 1e-9 * direct.max(logged));
        }
        let mut running = 1.0;
        for k in 1..=n {
            let p = partial_product(&SliceAlphas(&alphas), k).unwrap();
            prop_assert!(p <= running + 1e-15 * running);
            running = p;
        }
    }

    #[test]
    fn float_format_round_trips(bits in any::<u64>()) {
        let v = f64::from_bits(bits);
        if v.is_finite() {
            let parsed: f64 = fmt_f64(v).parse().unwrap();
            // -0.0 and 0.0 compare equal but have distinct bits; both are
            // fine on the wire.
            if v != 0.0 {
                prop_assert_eq!(parsed.to_bits(), v.to_bits());
            } else {
                prop_assert_eq!(parsed, v);
            }
        }
    }
}

#[test]
fn norm_ratio_is_state_independent_on_k2() {
    let sys = pressure_consensus::experiments::k2_demo_system();
    for rho in [0.5, 3.0, 250.0] {
        let mut ratios = Vec::new();
        for t in 0..100 {
            let a = (t as f64 * 0.917) % 2.0 - 1.0;
            let b = (t as f64 * 1.313) % 2.0 - 0.5;
            let x = StateVector::new(vec![a, b]).unwrap();
            match sys.norm_ratio(rho, &x) {
                Ok(r) => ratios.push(r),
                Err(_) => continue, // landed on the fixed point
            }
        }
        let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
        let var = ratios.iter().map(|r| (r - mean) * (r - mean)).sum::<f64>()
            / ratios.len() as f64;
        assert!(
            var.sqrt() <= 1e-10,
            "rho={rho}: ratio spread {} too wide",
            var.sqrt()
        );
    }
}

#[test]
fn k2_fixed_points_approach_consensus_monotonically() {
    let sys = pressure_consensus::experiments::k2_demo_system();
    let limit = sys.consensus_limit();
    let mut previous = f64::INFINITY;
    for exponent in 1..=6 {
        let rho = 10f64.powi(exponent);
        let fp = sys.fixed_point(rho).unwrap();
        let dist = dist2(fp.as_slice(), limit.as_slice());
        assert!(dist <= previous, "distance increased at rho=1e{exponent}");
        previous = dist;
    }
    assert!(previous < 1e-5, "1e6 pressure left distance {previous:.3e}");
}
