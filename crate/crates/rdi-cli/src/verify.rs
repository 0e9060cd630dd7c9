//! The `verify` command: machine-readable pass/fail for each invariant
//! suite — closed-form oracle agreement, homogeneous Maxwell identities,
//! the classical-limit gap identities with their ħ-scaling, the resonance
//! property, the physicality orders, and jet-vs-finite-difference
//! agreement.
//!
//! The checks run on the canonical scenario parameters; a configuration
//! file adjusts tolerances (`[tolerances]`) and selects a subset
//! (`[verify] checks = [...]`).  Check failures are report entries, not
//! process errors: the exit code stays 0 unless the configuration itself
//! is invalid.

use std::path::Path;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use rdi_core::catalog::{
    resonant_frequency, rotation_classical_e, rotation_classical_gap, rotation_closed_form,
    translation_classical_e, translation_classical_gap, translation_closed_form,
    RotationScenarioParams, TranslationScenarioParams,
};
use rdi_core::engine::{hermiticity_gate, invert_potential, FourPotential};
use rdi_core::jets::{Jet, Scalar};
use rdi_core::physicality::{bremsstrahlung_check, synchrotron_check};
use rdi_core::states::{
    ParametrizedState, RotationState, SpacetimePoint, Trajectory, TranslationState,
};
use rdi_core::PhysicalConstants;

use crate::config::{Config, Tolerances};
use crate::AppError;

/// One verification entry.
struct CheckResult {
    name: &'static str,
    pass: bool,
    max_error: f64,
    tolerance: f64,
    detail: String,
}

fn check(name: &'static str, max_error: f64, tolerance: f64, detail: String) -> CheckResult {
    CheckResult { name, pass: max_error <= tolerance, max_error, tolerance, detail }
}

fn gated(
    field: &dyn rdi_core::states::SpinorField,
    p: SpacetimePoint,
    k: &PhysicalConstants,
) -> Result<FourPotential, rdi_core::CoreError> {
    let raw = invert_potential(field, p, k)?;
    hermiticity_gate(&raw, 1e-8)
}

fn rel(a: f64, b: f64, scale: f64) -> f64 {
    (a - b).abs() / b.abs().max(scale)
}

/// Engine vs rotation closed forms (potential and fields) on a random
/// cloud riding the orbit.
fn oracle_rotation(k: &PhysicalConstants, tol: &Tolerances) -> CheckResult {
    let b0 = 0.35;
    let omega = resonant_frequency(b0, k);
    let r0 = 2e-6;
    let state = RotationState::new(r0, omega, b0, k).expect("canonical params");
    let params = RotationScenarioParams { r0, omega, b0 };
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let period = 2.0 * std::f64::consts::PI / omega.abs();
    let width = (2.0 * k.hbar / (k.e * b0)).sqrt();
    let mc = k.rest_momentum();
    let ee_scale = mc * omega.abs();
    let mut max_err = 0.0f64;
    for _ in 0..200 {
        let t = rng.gen_range(0.0..period);
        let (swt, cwt) = (omega * t).sin_cos();
        let p = SpacetimePoint::new(
            t,
            r0 * cwt + rng.gen_range(-3.0 * width..3.0 * width),
            r0 * swt + rng.gen_range(-3.0 * width..3.0 * width),
            rng.gen_range(-1e-6..1e-6),
        );
        let oracle = rotation_closed_form(&params, p, k);
        let pot = match gated(&state, p, k) {
            Ok(pot) => pot,
            Err(e) => {
                return check("oracle-rotation", f64::INFINITY, tol.oracle_potential, e.to_string())
            }
        };
        let ea = pot.ea_values();
        for i in 0..4 {
            max_err = max_err.max(rel(ea[i], oracle.ea[i], mc));
        }
        let (ee, eb) = pot.charge_weighted_fields(k);
        for i in 0..3 {
            max_err = max_err.max(rel(ee[i], oracle.ee[i], ee_scale));
            max_err = max_err.max(rel(eb[i], oracle.eb[i], k.e * b0));
        }
    }
    check(
        "oracle-rotation",
        max_err,
        tol.oracle_potential,
        "eA, E, B vs closed forms, 200 points".into(),
    )
}

/// Engine vs translation closed forms, on a picosecond trajectory where
/// the source current is resolvable; includes J^ν at the current tolerance.
fn oracle_translation(k: &PhysicalConstants, tol: &Tolerances) -> CheckResult {
    let traj = Trajectory::Sinusoid { l: 10e-6, t_period: 1e-12 };
    let state = TranslationState::new(traj.clone(), 1.0, k).expect("canonical params");
    let params = TranslationScenarioParams { trajectory: traj, b0: 1.0 };
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    let width = (2.0 * k.hbar / k.e).sqrt();
    let mc = k.rest_momentum();
    let mut max_field = 0.0f64;
    let mut max_current = 0.0f64;
    for _ in 0..200 {
        let t = rng.gen_range(0.05e-12..0.95e-12);
        let yc = params.trajectory.derivatives(t, k).expect("sinusoid")[0];
        let p = SpacetimePoint::new(
            t,
            rng.gen_range(-3.0 * width..3.0 * width),
            yc + rng.gen_range(-3.0 * width..3.0 * width),
            rng.gen_range(-1e-6..1e-6),
        );
        let oracle = match translation_closed_form(&params, p, k) {
            Ok(o) => o,
            Err(e) => {
                return check("oracle-translation", f64::INFINITY, tol.oracle_potential, e.to_string())
            }
        };
        let pot = match gated(&state, p, k) {
            Ok(pot) => pot,
            Err(e) => {
                return check("oracle-translation", f64::INFINITY, tol.oracle_potential, e.to_string())
            }
        };
        let ea = pot.ea_values();
        for i in 0..4 {
            max_field = max_field.max(rel(ea[i], oracle.ea[i], mc));
        }
        let (ee, eb) = pot.charge_weighted_fields(k);
        let ee_scale = oracle.ee.iter().fold(0.0f64, |a, x| a.max(x.abs()));
        for i in 0..3 {
            max_field = max_field.max(rel(ee[i], oracle.ee[i], ee_scale));
            max_field = max_field.max(rel(eb[i], oracle.eb[i], k.e));
        }
        let j = pot.charge_weighted_current(k);
        let j_scale = oracle.mu0_ej.iter().fold(0.0f64, |a, x| a.max(x.abs()));
        for i in 0..3 {
            max_current = max_current.max(rel(j[i + 1], oracle.mu0_ej[i], j_scale));
        }
    }
    // the current tolerance is the looser of the two; report whichever
    // margin is worse
    let field_margin = max_field / tol.oracle_potential;
    let current_margin = max_current / tol.oracle_current;
    let (max_error, tolerance) = if field_margin >= current_margin {
        (max_field, tol.oracle_potential)
    } else {
        (max_current, tol.oracle_current)
    };
    check(
        "oracle-translation",
        max_error,
        tolerance,
        format!("fields {max_field:.3e}, currents {max_current:.3e}, 200 points"),
    )
}

/// ∇·B = 0 and Faraday's law from the exact second derivatives of the
/// inverted potential.
fn maxwell_homogeneous(k: &PhysicalConstants, tol: &Tolerances) -> CheckResult {
    let b0 = 0.35;
    let omega = resonant_frequency(b0, k);
    let r0 = 2e-6;
    let w = (2.0 * k.hbar / (k.e * b0)).sqrt();
    let rot = RotationState::new(r0, omega, b0, k).expect("canonical params");
    let landau = rdi_core::states::BoostedLandauState { u2: 0.6, b0 };
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    let floor = k.e * b0 / w;
    let mut max_defect = 0.0f64;
    for _ in 0..25 {
        let t = rng.gen_range(0.0..1e-11);
        let (s, c) = (omega * t).sin_cos();
        let dx = rng.gen_range(-2.0 * w..2.0 * w);
        let dy = rng.gen_range(-2.0 * w..2.0 * w);
        let probes: [(&dyn rdi_core::states::SpinorField, SpacetimePoint); 2] = [
            (&rot, SpacetimePoint::new(t, r0 * c + dx, r0 * s + dy, 0.0)),
            (&landau, SpacetimePoint::new(t * 1e-5, dx, dy, 0.0)),
        ];
        for (field, p) in probes {
            let pot = match gated(field, p, k) {
                Ok(pot) => pot,
                Err(e) => {
                    return check("maxwell-homogeneous", f64::INFINITY, tol.maxwell, e.to_string())
                }
            };
            let a = &pot.ea;
            let cc = k.c;
            let db = |i: usize, kk: usize| {
                let (p, q) = [(2usize, 3usize), (3, 1), (1, 2)][kk - 1];
                a[q].hess[i][p].re - a[p].hess[i][q].re
            };
            let de = |i: usize, kk: usize| -cc * (a[0].hess[i][kk].re + a[kk].hess[i][0].re);
            let hess_sum: f64 = a
                .iter()
                .map(|j| j.hess.iter().flatten().map(|h| h.norm()).sum::<f64>())
                .sum::<f64>()
                .max(floor);
            let div_b = (db(1, 1) + db(2, 2) + db(3, 3)).abs() / hess_sum;
            max_defect = max_defect.max(div_b);
            for kk in 1..4 {
                let (p, q) = [(2usize, 3usize), (3, 1), (1, 2)][kk - 1];
                let r = (de(p, q) - de(q, p) + cc * db(0, kk)).abs() / (cc * hess_sum);
                max_defect = max_defect.max(r);
            }
        }
    }
    check(
        "maxwell-homogeneous",
        max_defect,
        tol.maxwell,
        "div B and Faraday defects, 50 probes".into(),
    )
}

/// The rotation classical-limit gap: |E_exact − E_classical| equals
/// γr₀|ω|³ħ/(2c²) and scales linearly under ħ → sħ.
fn limit_rotation(k: &PhysicalConstants, tol: &Tolerances) -> CheckResult {
    let params = RotationScenarioParams {
        r0: 2e-6,
        omega: resonant_frequency(0.35, k),
        b0: 0.35,
    };
    let p = SpacetimePoint::new(2.3e-11, 2.1e-6, 0.4e-6, 0.0);
    let mut max_err = 0.0f64;
    let mut gaps = [0.0f64; 3];
    for (i, s) in [1.0, 0.5, 0.25].into_iter().enumerate() {
        let ks = k.with_hbar_scaled(s);
        let exact = rotation_closed_form(&params, p, &ks).ee;
        let classical = rotation_classical_e(&params, p, &ks);
        let gap = ((exact[0] - classical[0]).powi(2) + (exact[1] - classical[1]).powi(2)
            + (exact[2] - classical[2]).powi(2))
        .sqrt();
        let predicted = rotation_classical_gap(&params, &ks);
        max_err = max_err.max((gap - predicted).abs() / predicted);
        gaps[i] = gap;
    }
    // linear in ħ: halving s halves the gap
    max_err = max_err.max((gaps[1] / gaps[0] - 0.5).abs());
    max_err = max_err.max((gaps[2] / gaps[0] - 0.25).abs());
    check(
        "limit-rotation",
        max_err,
        tol.limits,
        "field gap vs closed form, hbar sweep {1, 0.5, 0.25}".into(),
    )
}

/// The translation classical-limit gap: E₁ discrepancy equals
/// (ħ/2c²)·d/dt(γŸ) and scales linearly under ħ → sħ.
fn limit_translation(k: &PhysicalConstants, tol: &Tolerances) -> CheckResult {
    // the fast trajectory: on the nanosecond one the gap drowns in the
    // floating-point cancellation of E1 itself
    let params = TranslationScenarioParams {
        trajectory: Trajectory::Sinusoid { l: 10e-6, t_period: 1e-12 },
        b0: 1.0,
    };
    let p = SpacetimePoint::new(0.31e-12, 0.0, 2.9e-6, 0.0);
    let mut max_err = 0.0f64;
    let mut gaps = [0.0f64; 3];
    for (i, s) in [1.0, 0.5, 0.25].into_iter().enumerate() {
        let ks = k.with_hbar_scaled(s);
        let exact = match translation_closed_form(&params, p, &ks) {
            Ok(o) => o.ee,
            Err(e) => return check("limit-translation", f64::INFINITY, tol.limits, e.to_string()),
        };
        let classical = translation_classical_e(&params, p, &ks).expect("sinusoid");
        let gap = classical[0] - exact[0];
        let predicted = translation_classical_gap(&params, p.t, &ks).expect("sinusoid");
        let scale = predicted.abs().max(1e-9 * exact[0].abs());
        max_err = max_err.max((gap - predicted).abs() / scale);
        gaps[i] = gap;
    }
    max_err = max_err.max((gaps[1] / gaps[0] - 0.5).abs());
    max_err = max_err.max((gaps[2] / gaps[0] - 0.25).abs());
    check(
        "limit-translation",
        max_err,
        tol.limits,
        "E1 gap vs closed form, hbar sweep {1, 0.5, 0.25}".into(),
    )
}

/// |μ₀eJ| is time-independent exactly at the resonant frequency and visibly
/// time-dependent one percent away from it.
fn resonance(k: &PhysicalConstants, tol: &Tolerances) -> CheckResult {
    let b0 = 0.35;
    let r0 = 2e-6;
    let omega0 = resonant_frequency(b0, k);
    let probe = |omega: f64| -> (f64, f64) {
        let params = RotationScenarioParams { r0, omega, b0 };
        let period = 2.0 * std::f64::consts::PI / omega.abs();
        let mut lo = f64::INFINITY;
        let mut hi = 0.0f64;
        for i in 0..200 {
            let t = period * i as f64 / 200.0;
            let p = SpacetimePoint::new(t, 1e-3, 0.0, 0.0);
            let j = rotation_closed_form(&params, p, k).mu0_ej;
            let norm = (j[0] * j[0] + j[1] * j[1] + j[2] * j[2]).sqrt();
            lo = lo.min(norm);
            hi = hi.max(norm);
        }
        (lo, hi)
    };
    let (lo, hi) = probe(omega0);
    let on_resonance = (hi - lo) / hi;
    let (lo, hi) = probe(omega0 * 1.01);
    let off_resonance = (hi - lo) / hi;
    let pass = on_resonance <= tol.resonance && off_resonance > 1e-3;
    CheckResult {
        name: "resonance",
        pass,
        max_error: on_resonance,
        tolerance: tol.resonance,
        detail: format!("|J| variation at resonance {on_resonance:.3e}, at 1% offset {off_resonance:.3e}"),
    }
}

/// Radiated-energy orders stay within two decades of the published
/// estimates, and the pass verdicts hold.
fn physicality(k: &PhysicalConstants) -> CheckResult {
    let decades = |v: f64, target: f64| (v / target).log10().abs();
    let rot = synchrotron_check(
        &RotationScenarioParams { r0: 2e-6, omega: resonant_frequency(0.35, k), b0: 0.35 },
        k,
    );
    let trans = bremsstrahlung_check(
        &TranslationScenarioParams {
            trajectory: Trajectory::Sinusoid { l: 10e-6, t_period: 1e-8 },
            b0: 1.0,
        },
        1e-8,
        k,
    );
    match (rot, trans) {
        (Ok(r), Ok(t)) => {
            let max_decades = decades(r.ratio, 1e-11)
                .max(decades(t.radiated_energy, 1e-38))
                .max(decades(t.kinetic_energy, 1e-24));
            CheckResult {
                name: "physicality",
                pass: r.pass && t.pass && max_decades <= 2.0,
                max_error: max_decades,
                tolerance: 2.0,
                detail: format!(
                    "rotation ratio {:.3e}, translation loss {:.3e} J / KE {:.3e} J (decades)",
                    r.ratio, t.radiated_energy, t.kinetic_energy
                ),
            }
        }
        (Err(e), _) | (_, Err(e)) => CheckResult {
            name: "physicality",
            pass: false,
            max_error: f64::INFINITY,
            tolerance: 2.0,
            detail: e.to_string(),
        },
    }
}

/// Jet derivatives vs central finite differences of the factored
/// evaluation, on dyadic stencils at randomized points.
fn finite_differences(k: &PhysicalConstants, tol: &Tolerances) -> CheckResult {
    let b0 = 0.35;
    let omega = resonant_frequency(b0, k);
    let r0 = 2e-6;
    let w = (2.0 * k.hbar / (k.e * b0)).sqrt();
    let rot = RotationState::new(r0, omega, b0, k).expect("canonical params");
    let trans = TranslationState::new(
        Trajectory::Sinusoid { l: 10e-6, t_period: 1e-9 },
        1.0,
        k,
    )
    .expect("canonical params");
    let h_t = 1.4551915228366852e-11 / 1024.0 / 1024.0; // 2^-56 s
    let h_xy = 1.8189894035458565e-12; // 2^-39 m
    let mut max_err = 0.0f64;
    let mut rng = ChaCha8Rng::seed_from_u64(104);
    for i in 0..24 {
        let t = rng.gen_range(0.05e-9..0.2e-9);
        let (q, state): ([f64; 4], &dyn DynState) = if i % 2 == 0 {
            let tr = t / 20.0;
            let (s, c) = (omega * tr).sin_cos();
            (
                [
                    tr,
                    r0 * c + rng.gen_range(-2.0 * w..2.0 * w),
                    r0 * s + rng.gen_range(-2.0 * w..2.0 * w),
                    rng.gen_range(-1e-7..1e-7),
                ],
                &rot,
            )
        } else {
            let wt = (2.0 * k.hbar / k.e).sqrt();
            let yc = trans.trajectory.derivatives(t, k).expect("sinusoid")[0];
            (
                [
                    t,
                    rng.gen_range(-2.0 * wt..2.0 * wt),
                    yc + rng.gen_range(-2.0 * wt..2.0 * wt),
                    rng.gen_range(-1e-7..1e-7),
                ],
                &trans,
            )
        };
        let steps = [h_t, h_xy, h_xy, h_xy];
        let snapped: Vec<f64> = (0..4).map(|mu| (q[mu] / steps[mu]).round() * steps[mu]).collect();
        max_err = max_err.max(fd_point(state, [snapped[0], snapped[1], snapped[2], snapped[3]], steps, k));
    }
    check(
        "fd",
        max_err,
        tol.fd,
        "jet gradients and Hessians vs dyadic central differences, 24 points".into(),
    )
}

/// Object-safe view of the factored evaluation used by the FD check.
trait DynState {
    fn values(&self, q: [f64; 4], k: &PhysicalConstants) -> [Complex64; 6];
    fn jets(&self, q: [f64; 4], k: &PhysicalConstants) -> [Jet; 6];
}

impl<T: ParametrizedState> DynState for T {
    fn values(&self, q: [f64; 4], k: &PhysicalConstants) -> [Complex64; 6] {
        let vars = q.map(|v| Complex64::new(v, 0.0));
        let (sig, phi, lam) = self.eval_factored(vars, k).expect("in-domain probe");
        let a = sig.exp();
        [
            phi.e[0][0] * a,
            phi.e[0][1] * a,
            phi.e[1][0] * a,
            phi.e[1][1] * a,
            sig,
            lam,
        ]
    }

    fn jets(&self, q: [f64; 4], k: &PhysicalConstants) -> [Jet; 6] {
        let [ct, x, y, z] = Jet::seed(q[0], q[1], q[2], q[3], k.c);
        let (sig, phi, lam) = self
            .eval_factored([ct.scale(1.0 / k.c), x, y, z], k)
            .expect("in-domain probe");
        let a = sig.exp();
        [
            phi.e[0][0] * a,
            phi.e[0][1] * a,
            phi.e[1][0] * a,
            phi.e[1][1] * a,
            sig,
            lam,
        ]
    }
}

/// Worst relative derivative disagreement at one point, taking the best of
/// three dyadic stencil widths per entry.
fn fd_point(state: &dyn DynState, q: [f64; 4], steps: [f64; 4], k: &PhysicalConstants) -> f64 {
    let ad = state.jets(q, k);
    let gnorm: Vec<f64> = ad
        .iter()
        .map(|f| f.grad.iter().map(|g| g.norm_sqr()).sum::<f64>().sqrt())
        .collect();
    let hnorm: Vec<f64> = ad
        .iter()
        .map(|f| f.hess.iter().flatten().map(|h| h.norm_sqr()).sum::<f64>().sqrt())
        .collect();
    let mut grad_err = [[f64::INFINITY; 4]; 6];
    let mut hess_err = [[[f64::INFINITY; 4]; 4]; 6];
    for scale in [1.0, 2048.0, 2097152.0] {
        for mu in 0..4 {
            let h = scale * steps[mu];
            let dv = if mu == 0 { k.c * h } else { h };
            let shift = |delta: f64| {
                let mut s = q;
                s[mu] += delta;
                s
            };
            let fp = state.values(shift(h), k);
            let fm = state.values(shift(-h), k);
            let jp = state.jets(shift(h), k);
            let jm = state.jets(shift(-h), k);
            for f in 0..6 {
                let fd_grad = (fp[f] - fm[f]) / (2.0 * dv);
                let diff = (fd_grad - ad[f].grad[mu]).norm();
                let denom = ad[f].grad[mu].norm().max(gnorm[f]);
                let rel = if diff == 0.0 { 0.0 } else { diff / denom };
                grad_err[f][mu] = grad_err[f][mu].min(rel);
                for nu in 0..4 {
                    let fd_hess = (jp[f].grad[nu] - jm[f].grad[nu]) / (2.0 * dv);
                    let diff = (fd_hess - ad[f].hess[nu][mu]).norm();
                    let denom = ad[f].hess[nu][mu].norm().max(hnorm[f]);
                    let rel = if diff == 0.0 { 0.0 } else { diff / denom };
                    hess_err[f][nu][mu] = hess_err[f][nu][mu].min(rel);
                }
            }
        }
    }
    let g = grad_err.iter().flatten().fold(0.0f64, |a, x| a.max(*x));
    let h = hess_err.iter().flatten().flatten().fold(0.0f64, |a, x| a.max(*x));
    g.max(h)
}

pub fn run(
    cfg: Option<&Config>,
    out_dir: Option<&Path>,
    pool: &rayon::ThreadPool,
) -> Result<(), AppError> {
    let tol = cfg.map(|c| c.tolerances).unwrap_or_default();
    let k = match cfg {
        Some(c) => c.constants.build().map_err(AppError::Config)?,
        None => PhysicalConstants::default(),
    };
    let selected: Option<Vec<String>> =
        cfg.and_then(|c| c.verify.checks.clone());
    let all = [
        "oracle-rotation",
        "oracle-translation",
        "maxwell-homogeneous",
        "limit-rotation",
        "limit-translation",
        "resonance",
        "physicality",
        "fd",
    ];
    if let Some(names) = &selected {
        for n in names {
            if !all.contains(&n.as_str()) {
                return Err(AppError::Config(format!(
                    "unknown verify check `{n}`; available: {}",
                    all.join(", ")
                )));
            }
        }
    }
    let wanted =
        |name: &str| selected.as_ref().map_or(true, |s| s.iter().any(|n| n == name));

    let jobs: Vec<&'static str> = all.into_iter().filter(|n| wanted(n)).collect();
    let results: Vec<CheckResult> = pool.install(|| {
        jobs.par_iter()
            .map(|name| match *name {
                "oracle-rotation" => oracle_rotation(&k, &tol),
                "oracle-translation" => oracle_translation(&k, &tol),
                "maxwell-homogeneous" => maxwell_homogeneous(&k, &tol),
                "limit-rotation" => limit_rotation(&k, &tol),
                "limit-translation" => limit_translation(&k, &tol),
                "resonance" => resonance(&k, &tol),
                "physicality" => physicality(&k),
                "fd" => finite_differences(&k, &tol),
                other => unreachable!("unknown check {other}"),
            })
            .collect()
    });

    for r in &results {
        println!(
            "check {}: {} (max error {:.3e}, tolerance {:.1e}) — {}",
            r.name,
            if r.pass { "PASS" } else { "FAIL" },
            r.max_error,
            r.tolerance,
            r.detail
        );
    }
    let failed = results.iter().filter(|r| !r.pass).count();
    println!(
        "verify: {}/{} checks passed",
        results.len() - failed,
        results.len()
    );

    let report = serde_json::json!({
        "checks": results.iter().map(|r| serde_json::json!({
            "name": r.name,
            "pass": r.pass,
            "max_error": r.max_error,
            "tolerance": r.tolerance,
            "detail": r.detail,
        })).collect::<Vec<_>>(),
        "passed": results.len() - failed,
        "failed": failed,
    });
    match out_dir {
        Some(dir) => {
            std::fs::create_dir_all(dir)
                .map_err(|e| AppError::Io(format!("cannot create {}: {e}", dir.display())))?;
            let path = dir.join("verify_report.json");
            std::fs::write(
                &path,
                format!("{}\n", serde_json::to_string_pretty(&report).expect("serializable")),
            )
            .map_err(|e| AppError::Io(format!("cannot write {}: {e}", path.display())))?;
        }
        None => println!("{}", serde_json::to_string_pretty(&report).expect("serializable")),
    }
    Ok(())
}
