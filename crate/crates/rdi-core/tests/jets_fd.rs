//! Automatic-differentiation soundness: jet first derivatives must match
//! central finite differences of values, and jet second derivatives must
//! match central differences of jet first derivatives, across every state
//! builder at randomized points.
//!
//! The comparison runs on the factored evaluation (σ, Φ, λ): differencing
//! the assembled state is hopeless in doubles because the trajectory phase
//! reaches ~1e10 rad and its rounding swamps any stencil.  Coordinates are
//! snapped to dyadic grids so the stencil offsets are exact.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rdi_core::aps::ApsElement;
use rdi_core::jets::{Jet, Scalar};
use rdi_core::states::{
    AcceleratedBoostState, BoostedLandauState, ConfinedState, NonlinearState, ParametrizedState,
    Profile, RestState, RotatingConfinedState, RotationState, ScalarState, SpacetimePoint,
    SpinorField, Trajectory, TranslationState,
};
use rdi_core::PhysicalConstants;

const TOL: f64 = 1e-6;

/// Per-coordinate stencil steps: seconds for t, meters for x/y/z.
/// All are powers of two so that grid-snapped coordinates shift exactly.
#[derive(Clone, Copy)]
struct Steps {
    h: [f64; 4],
}

fn snap(v: f64, h: f64) -> f64 {
    (v / h).round() * h
}

/// The six scalar functions under test: the four entries of e^σ·Φ, plus σ
/// and λ.  The bare boost entries of slow states are constant to second
/// order in the proper velocity — beneath what any stencil resolves — so
/// Φ is tested with the amplitude attached (the sample regions stay within
/// a couple of packet widths, where e^σ is healthy).
const NFN: usize = 6;

fn functions<S: Scalar + Copy>(sigma: S, phi: &ApsElement<S>, lambda: S) -> [S; NFN] {
    let a = sigma.exp();
    [
        phi.e[0][0] * a,
        phi.e[0][1] * a,
        phi.e[1][0] * a,
        phi.e[1][1] * a,
        sigma,
        lambda,
    ]
}

fn eval_values<T: ParametrizedState>(
    state: &T,
    q: [f64; 4],
    k: &PhysicalConstants,
) -> [Complex64; NFN] {
    let vars = [
        Complex64::new(q[0], 0.0),
        Complex64::new(q[1], 0.0),
        Complex64::new(q[2], 0.0),
        Complex64::new(q[3], 0.0),
    ];
    let (sig, phi, lam) = state.eval_factored(vars, k).unwrap();
    functions(sig, &phi, lam)
}

fn eval_jets<T: ParametrizedState>(
    state: &T,
    q: [f64; 4],
    k: &PhysicalConstants,
) -> [Jet; NFN] {
    let [ct, x, y, z] = Jet::seed(q[0], q[1], q[2], q[3], k.c);
    let (sig, phi, lam) = state
        .eval_factored([ct.scale(1.0 / k.c), x, y, z], k)
        .unwrap();
    functions(sig, &phi, lam)
}

fn shifted(q: [f64; 4], mu: usize, delta: f64) -> [f64; 4] {
    let mut s = q;
    s[mu] += delta;
    s
}

/// Checks one state at `n` random points drawn by `sampler`.
fn check_state<T: ParametrizedState>(
    state: &T,
    steps: Steps,
    n: usize,
    seed: u64,
    sampler: impl Fn(&mut ChaCha8Rng) -> [f64; 4],
    label: &str,
) -> usize {
    let k = PhysicalConstants::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..n {
        let raw = sampler(&mut rng);
        let mut q = [0.0; 4];
        for mu in 0..4 {
            q[mu] = snap(raw[mu], steps.h[mu]);
        }
        let p = SpacetimePoint::new(q[0], q[1], q[2], q[3]);
        let (sig3, phi3, lam3) = state.evaluate_factored_deep(p, &k).unwrap();
        let ad: [rdi_core::jets::Jet3; NFN] = functions(sig3, &phi3, lam3);
        // overall derivative scales per function, for judging zero entries
        let gnorm: Vec<f64> = ad
            .iter()
            .map(|f| f.truncate().grad.iter().map(|g| g.norm_sqr()).sum::<f64>().sqrt())
            .collect();
        let hnorm: Vec<f64> = ad
            .iter()
            .map(|f| {
                f.truncate()
                    .hess
                    .iter()
                    .flatten()
                    .map(|h| h.norm_sqr())
                    .sum::<f64>()
                    .sqrt()
            })
            .collect();
        // No single stencil width suits every function: λ's time slope is
        // ~1e12, so differencing across a ~1e-12 m stencil amplifies its
        // last-bit rounding by ~1e12, while the packet amplitudes need the
        // stencil well inside their width.  Try geometrically spaced widths
        // (powers of two, so shifts from the snapped point stay exact) and
        // keep the best agreement for each derivative entry.
        let mut grad_err = [[f64::INFINITY; 4]; NFN];
        let mut hess_err = [[[f64::INFINITY; 4]; 4]; NFN];
        for scale in [1.0, 2048.0, 2097152.0] {
            for mu in 0..4 {
                let h = scale * steps.h[mu];
                // step in the differentiation variable (slot 0 is ct)
                let dv = if mu == 0 { k.c * h } else { h };
                let fp = eval_values(state, shifted(q, mu, h), &k);
                let fm = eval_values(state, shifted(q, mu, -h), &k);
                let jp = eval_jets(state, shifted(q, mu, h), &k);
                let jm = eval_jets(state, shifted(q, mu, -h), &k);
                for f in 0..NFN {
                    let jet = ad[f].truncate();
                    let fd_grad = (fp[f] - fm[f]) / (2.0 * dv);
                    let diff = (fd_grad - jet.grad[mu]).norm();
                    let denom = jet.grad[mu].norm().max(gnorm[f]);
                    let rel = if diff == 0.0 { 0.0 } else { diff / denom };
                    grad_err[f][mu] = grad_err[f][mu].min(rel);
                    for nu in 0..4 {
                        let fd_hess = (jp[f].grad[nu] - jm[f].grad[nu]) / (2.0 * dv);
                        let diff = (fd_hess - jet.hess[nu][mu]).norm();
                        let denom = jet.hess[nu][mu].norm().max(hnorm[f]);
                        let rel = if diff == 0.0 { 0.0 } else { diff / denom };
                        hess_err[f][nu][mu] = hess_err[f][nu][mu].min(rel);
                    }
                }
            }
        }
        for f in 0..NFN {
            for mu in 0..4 {
                assert!(
                    grad_err[f][mu] <= TOL,
                    "{label}: grad[{mu}] of fn {f} off by {:e} at {q:?}",
                    grad_err[f][mu]
                );
                for nu in 0..4 {
                    assert!(
                        hess_err[f][nu][mu] <= TOL,
                        "{label}: hess[{nu}][{mu}] of fn {f} off by {:e} at {q:?}",
                        hess_err[f][nu][mu]
                    );
                }
            }
        }
    }
    n
}

const H_T: f64 = 1.4551915228366852e-11 / 1024.0 / 1024.0; // 2^-56 s
const H_XY: f64 = 1.8189894035458565e-12; // 2^-39 m

#[test]
fn ad_matches_finite_differences_across_all_builders() {
    let k = PhysicalConstants::default();
    let mut total = 0;

    total += check_state(
        &RestState,
        Steps { h: [H_T, H_XY, H_XY, H_XY] },
        6,
        1,
        |r| [r.gen_range(0.0..1e-12), r.gen_range(-1e-7..1e-7), 0.0, 0.0],
        "rest",
    );

    let b0 = 0.35;
    let omega = rdi_core::catalog::resonant_frequency(b0, &k);
    let r0 = 2e-6;
    let w = (2.0 * k.hbar / (k.e * b0)).sqrt();
    let rot = RotationState::new(r0, omega, b0, &k).unwrap();
    total += check_state(
        &rot,
        Steps { h: [H_T, H_XY, H_XY, H_XY] },
        14,
        2,
        |r| {
            let t = r.gen_range(0.0..1e-11);
            let (s, c) = (omega * t).sin_cos();
            [
                t,
                r0 * c + r.gen_range(-2.0 * w..2.0 * w),
                r0 * s + r.gen_range(-2.0 * w..2.0 * w),
                r.gen_range(-1e-7..1e-7),
            ]
        },
        "rotation",
    );

    let traj = Trajectory::Sinusoid { l: 10e-6, t_period: 1e-9 };
    let trans = TranslationState::new(traj.clone(), 1.0, &k).unwrap();
    let wt = (2.0 * k.hbar / k.e).sqrt();
    let traj2 = traj.clone();
    total += check_state(
        &trans,
        Steps { h: [H_T, H_XY, H_XY, H_XY] },
        14,
        3,
        move |r| {
            let t = r.gen_range(0.05e-9..0.2e-9);
            let yc = traj2.derivatives(t, &PhysicalConstants::default()).unwrap()[0];
            [
                t,
                r.gen_range(-2.0 * wt..2.0 * wt),
                yc + r.gen_range(-2.0 * wt..2.0 * wt),
                r.gen_range(-1e-7..1e-7),
            ]
        },
        "translation",
    );

    let xi = 5e-12;
    let conf = ConfinedState::new(Profile::SoftCore { xi }, 0.35, 1e-16);
    let h_z_conf = H_XY / 1024.0 / 2.0; // 2^-50 m, well under ξ
    total += check_state(
        &conf,
        Steps { h: [H_T, H_XY, H_XY, h_z_conf] },
        12,
        4,
        move |r| {
            [
                r.gen_range(0.0..1e-13),
                r.gen_range(-2e-12..2e-12),
                r.gen_range(-2e-12..2e-12),
                r.gen_range(-2.0 * xi..2.0 * xi),
            ]
        },
        "confined",
    );

    let rotconf = RotatingConfinedState {
        rotation: RotationState::new(r0, omega, b0, &k).unwrap(),
        profile: Profile::SoftCore { xi },
    };
    total += check_state(
        &rotconf,
        Steps { h: [H_T, H_XY, H_XY, h_z_conf] },
        12,
        5,
        move |r| {
            let t = r.gen_range(0.0..1e-11);
            let (s, c) = (omega * t).sin_cos();
            [
                t,
                r0 * c + r.gen_range(-2.0 * w..2.0 * w),
                r0 * s + r.gen_range(-2.0 * w..2.0 * w),
                r.gen_range(-2.0 * xi..2.0 * xi),
            ]
        },
        "rotating-confined",
    );

    let xis = 1e-12;
    let scal = ScalarState::new(xis, 0.2e6 * k.e).unwrap();
    let h_z_fine = h_z_conf / 16.0; // 2^-54 m
    total += check_state(
        &scal,
        Steps { h: [H_T, H_XY, H_XY, h_z_fine] },
        12,
        6,
        move |r| {
            [
                r.gen_range(0.0..1e-20),
                0.0,
                0.0,
                r.gen_range(-4.0 * xis..4.0 * xis),
            ]
        },
        "scalar",
    );

    let nl = NonlinearState::new(xis).unwrap();
    total += check_state(
        &nl,
        Steps { h: [H_T, H_XY, H_XY, h_z_fine] },
        10,
        7,
        move |r| [0.0, 0.0, 0.0, r.gen_range(-1.5 * xis..1.5 * xis)],
        "nonlinear",
    );

    let wl = (2.0 * k.hbar / (k.e * 0.35)).sqrt();
    let bl = BoostedLandauState { u2: 0.6, b0: 0.35 };
    // the packet drifts at half the speed of light, so the time stencil
    // must stay well inside the Gaussian width: c·h_t ≪ w
    let h_t_fast = H_T / 1024.0; // 2^-66 s
    total += check_state(
        &bl,
        Steps { h: [h_t_fast, H_XY, H_XY, H_XY] },
        10,
        8,
        move |r| {
            let t = r.gen_range(0.0..1e-16);
            [
                t,
                r.gen_range(-2.0 * wl..2.0 * wl),
                r.gen_range(-2.0 * wl..2.0 * wl),
                r.gen_range(-1e-7..1e-7),
            ]
        },
        "boosted-landau",
    );

    let acc = AcceleratedBoostState { e0: 1e5, b0: 0.35 };
    total += check_state(
        &acc,
        Steps { h: [H_T, H_XY, H_XY, H_XY] },
        10,
        9,
        move |r| {
            [
                r.gen_range(-2e-12..2e-12),
                r.gen_range(-wl..wl),
                r.gen_range(-wl..wl),
                r.gen_range(-1e-7..1e-7),
            ]
        },
        "accelerated-boost",
    );

    assert!(total >= 100, "only {total} points checked");
}
