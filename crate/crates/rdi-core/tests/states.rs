//! State-builder tests: parameter validation, the normalization factor the
//! Hermiticity gate is sensitive to, and the approximate accelerated-boost
//! construction.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rdi_core::engine::{dirac_residual, hermiticity_gate, invert_potential, HERMITICITY_TOL};
use rdi_core::states::{
    AcceleratedBoostState, NonlinearState, RotationState, ScalarState, SpacetimePoint,
    SpinorField, Trajectory, TranslationState,
};
use rdi_core::{CoreError, PhysicalConstants};

#[test]
fn superluminal_rotation_is_rejected() {
    let k = PhysicalConstants::default();
    // r0|ω| = 1.5c
    let r0 = 1e-3;
    let omega = 1.5 * k.c / r0;
    match RotationState::new(r0, omega, 0.35, &k) {
        Err(CoreError::InvalidParameter(msg)) => assert!(msg.contains("below c")),
        other => panic!("expected invalid-parameter error, got {other:?}"),
    }
    // just below is accepted
    assert!(RotationState::new(r0, 0.99 * k.c / r0, 0.35, &k).is_ok());
}

#[test]
fn superluminal_trajectory_is_rejected() {
    let k = PhysicalConstants::default();
    // peak speed πL/(2T) ≥ c
    let t_period = 1e-12;
    let l = 2.0 * k.c * t_period; // peak = πc > c
    match TranslationState::new(Trajectory::Sinusoid { l, t_period }, 1.0, &k) {
        Err(CoreError::InvalidParameter(_)) => {}
        other => panic!("expected invalid-parameter error, got {other:?}"),
    }
}

#[test]
fn nonpositive_widths_are_rejected() {
    assert!(ScalarState::new(0.0, 1.0).is_err());
    assert!(ScalarState::new(-1e-12, 1.0).is_err());
    assert!(ScalarState::new(f64::NAN, 1.0).is_err());
    assert!(NonlinearState::new(0.0).is_err());
    assert!(NonlinearState::new(1e-12).is_ok());
}

/// A relativistic trajectory for gate testing: fast enough that dropping
/// the 1/√u⁰ normalization produces an O(1) non-Hermitian part.
fn gate_test_trajectory(k: &PhysicalConstants) -> Trajectory {
    let t_period = 2e-20;
    let peak = 0.9 * k.c;
    let l = 2.0 * t_period * peak / std::f64::consts::PI;
    Trajectory::Sinusoid { l, t_period }
}

/// Dropping the 1/√u⁰ amplitude factor makes the dynamics unreachable by
/// electromagnetic fields: the inversion's anti-Hermitian part is large at
/// nearly all generic points, while the normalized state passes everywhere.
#[test]
fn broken_normalization_fails_hermiticity_gate() {
    let k = PhysicalConstants::default();
    let traj = gate_test_trajectory(&k);
    let good = TranslationState::new(traj.clone(), 1.0, &k).unwrap();
    let bad = TranslationState::broken(traj.clone(), 1.0, &k).unwrap();
    let t_period = 2e-20;
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut failing = 0usize;
    let n = 100;
    for _ in 0..n {
        let t = rng.gen_range(0.05 * t_period..0.95 * t_period);
        let yc = traj.derivatives(t, &k).unwrap()[0];
        let p = SpacetimePoint::new(
            t,
            rng.gen_range(-1e-10..1e-10),
            yc + rng.gen_range(-1e-10..1e-10),
            rng.gen_range(-1e-10..1e-10),
        );
        let good_raw = invert_potential(&good, p, &k).unwrap();
        assert!(
            good_raw.residual < 1e-8,
            "normalized state residual {:e} at {p:?}",
            good_raw.residual
        );
        assert!(hermiticity_gate(&good_raw, HERMITICITY_TOL).is_ok());
        let bad_raw = invert_potential(&bad, p, &k).unwrap();
        if bad_raw.residual > 1e-3 {
            failing += 1;
        }
        match hermiticity_gate(&bad_raw, HERMITICITY_TOL) {
            Err(CoreError::NonPhysicalDynamics { .. }) => {}
            other => panic!("gate should reject the broken state, got {other:?}"),
        }
    }
    assert!(
        failing * 100 >= 95 * n,
        "only {failing}/{n} probed points show residual > 1e-3"
    );
}

/// The time-dependent-boost construction is approximate: it passes the
/// Hermiticity gate and verifies against its own potential to ~1e-8, but
/// not to machine precision.
#[test]
fn accelerated_boost_passes_gate_with_small_residual() {
    let k = PhysicalConstants::default();
    let state = AcceleratedBoostState { e0: 1e5, b0: 0.35 };
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let width = (2.0 * k.hbar / (k.e * state.b0)).sqrt();
    for _ in 0..30 {
        let t = rng.gen_range(-2e-12..2e-12);
        // hyperbolic-motion packet center Y(t) = (mc²/eE₀)(√(1+(eE₀t/mc)²) − 1)
        let sh = k.e * state.e0 * t / k.rest_momentum();
        let yc = k.rest_energy() / (k.e * state.e0) * ((1.0 + sh * sh).sqrt() - 1.0);
        let p = SpacetimePoint::new(
            t,
            rng.gen_range(-width..width),
            yc + rng.gen_range(-width..width),
            0.0,
        );
        let raw = invert_potential(&state, p, &k).unwrap();
        assert!(raw.residual < 1e-8, "residual {:e} at {p:?}", raw.residual);
        let pot = hermiticity_gate(&raw, HERMITICITY_TOL).unwrap();
        let res = dirac_residual(&state, pot.ea_values(), p, &k).unwrap();
        assert!(res < 1e-8, "dirac residual {res:e} at {p:?}");
    }
}

/// Zero-velocity limits: the translation state at Ẏ ≡ 0 carries no boost
/// and the rotation state at ω = 0 is a static Landau-type packet; both
/// still invert cleanly.
#[test]
fn degenerate_parameters_still_invert() {
    let k = PhysicalConstants::default();
    let rot = RotationState::new(0.0, 0.0, 0.35, &k).unwrap();
    let p = SpacetimePoint::new(1e-12, 1e-8, -2e-8, 0.0);
    let raw = invert_potential(&rot, p, &k).unwrap();
    assert!(raw.residual < 1e-10);
    let state = TranslationState::new(
        Trajectory::Sinusoid { l: 0.0, t_period: 1e-9 },
        1.0,
        &k,
    )
    .unwrap();
    let raw = invert_potential(&state, p, &k).unwrap();
    assert!(raw.residual < 1e-10);
}

/// The evaluation paths agree: the deep (third-order) pass truncates to
/// the jet pass, which truncates to plain values.
#[test]
fn evaluation_depths_are_consistent() {
    let k = PhysicalConstants::default();
    let state = RotationState::new(2e-6, -6e10, 0.35, &k).unwrap();
    let t = 2e-11;
    let (s, c) = (-6e10 * t as f64).sin_cos();
    let p = SpacetimePoint::new(t, 2e-6 * c + 1e-8, 2e-6 * s - 1e-8, 0.0);
    let v = state.evaluate(p, &k).unwrap();
    let j = state.evaluate_jet(p, &k).unwrap();
    let d = state.evaluate_deep(p, &k).unwrap();
    for r in 0..2 {
        for cc in 0..2 {
            assert!((v.e[r][cc] - j.e[r][cc].val).norm() < 1e-13 * v.frobenius_norm());
            assert!((v.e[r][cc] - d.e[r][cc].val).norm() < 1e-13 * v.frobenius_norm());
            for mu in 0..4 {
                assert!(
                    (j.e[r][cc].grad[mu] - d.e[r][cc].grad[mu]).norm()
                        <= 1e-12 * j.e[r][cc].grad[mu].norm().max(1.0)
                );
            }
        }
    }
}
