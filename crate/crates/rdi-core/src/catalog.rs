//! Closed-form reference solutions for the named scenarios, transcribed
//! independently of the engine and used as oracles in tests and the
//! verification command.
//!
//! Conventions match the engine's storage: charge-weighted potentials eA_μ
//! in momentum units with physical spatial components; charge-weighted
//! fields eE (J/m), eB (J·s/m²); currents as μ₀eJ.  Divide by e (and μ₀)
//! for bare SI quantities.

use crate::constants::PhysicalConstants;
use crate::error::Result;
use crate::states::{Profile, SpacetimePoint, Trajectory};

/// Circular-orbit scenario parameters.
#[derive(Debug, Clone, Copy)]
pub struct RotationScenarioParams {
    pub r0: f64,
    pub omega: f64,
    pub b0: f64,
}

impl RotationScenarioParams {
    pub fn gamma(&self, k: &PhysicalConstants) -> f64 {
        let b = self.r0 * self.omega / k.c;
        1.0 / (1.0 - b * b).sqrt()
    }
}

/// Closed-form outputs for the rotation scenario at one point.
#[derive(Debug, Clone, Copy)]
pub struct RotationClosedForm {
    pub ea: [f64; 4],
    pub ee: [f64; 3],
    pub eb: [f64; 3],
    /// μ₀eJ^k (spatial components; the scenario's J³ vanishes).
    pub mu0_ej: [f64; 3],
    /// Bilinear current J_D^μ.
    pub jd: [f64; 4],
}

/// Evaluates the rotation-scenario closed forms (potential, fields,
/// source current, bilinear current).
pub fn rotation_closed_form(
    params: &RotationScenarioParams,
    p: SpacetimePoint,
    k: &PhysicalConstants,
) -> RotationClosedForm {
    let (r0, w, hbar, c, m) = (params.r0, params.omega, k.hbar, k.c, k.m);
    let eb0 = k.e * params.b0;
    let (t, x, y) = (p.t, p.x, p.y);
    let q = (c * c - r0 * r0 * w * w).sqrt();
    let (swt, cwt) = (w * t).sin_cos();
    let (s2wt, c2wt) = (2.0 * w * t).sin_cos();

    let ea0 = r0 * w * (eb0 + 2.0 * m * w) * (x * cwt + y * swt) / (2.0 * q)
        - r0 * r0 * w * eb0 / (2.0 * q)
        + w * hbar / (2.0 * q)
        - w * hbar / (2.0 * c);
    let ea1 = (y * eb0 * (-2.0 * c * c + r0 * r0 * w * w * c2wt + r0 * r0 * w * w)
        - 2.0 * r0 * swt * (-c * c * eb0 + r0 * x * w * w * eb0 * cwt + w * w * hbar))
        / (4.0 * c * q);
    let ea2 = (r0
        * (cwt * (2.0 * w * w * hbar - 2.0 * c * c * eb0)
            + r0 * w * w * eb0 * (x * c2wt + y * s2wt))
        + x * eb0 * (2.0 * c * c - r0 * r0 * w * w))
        / (4.0 * c * q);

    let ee1 = r0 * w
        * (cwt * (w * w * hbar - 2.0 * c * c * (eb0 + m * w))
            + r0 * w * w * eb0 * (x * c2wt + y * s2wt))
        / (2.0 * c * q);
    let ee2 = r0 * w
        * (swt * (-2.0 * c * c * (eb0 + m * w) + 2.0 * r0 * x * w * w * eb0 * cwt + w * w * hbar)
            - r0 * y * w * w * eb0 * c2wt)
        / (2.0 * c * q);
    let eb3 = eb0 * (2.0 * c * c - r0 * r0 * w * w) / (2.0 * c * q);

    // the detuning factor: vanishes exactly at the resonant frequency
    let d = w * w * hbar - 2.0 * c * c * (eb0 + m * w);
    let j1 = -(r0 * w
        * (2.0 * r0 * w.powi(3) * eb0 * (y * c2wt - x * s2wt) - w * swt * d))
        / (2.0 * c.powi(3) * q);
    let j2 = -(r0 * w * w * (cwt * d + 2.0 * r0 * w * w * eb0 * (x * c2wt + y * s2wt)))
        / (2.0 * c.powi(3) * q);

    let (rx, ry) = (r0 * cwt, r0 * swt);
    let g2 = (-eb0 * ((x - rx).powi(2) + (y - ry).powi(2)) / (2.0 * hbar)).exp();
    let jd = [
        c * g2 / q,
        -r0 * w * swt * g2 / q,
        r0 * w * cwt * g2 / q,
        0.0,
    ];

    RotationClosedForm {
        ea: [ea0, ea1, ea2, 0.0],
        ee: [ee1, ee2, 0.0],
        eb: [0.0, 0.0, eb3],
        mu0_ej: [j1, j2, 0.0],
        jd,
    }
}

/// The classical-limit (ħ → 0) electric field of the rotation scenario.
pub fn rotation_classical_e(
    params: &RotationScenarioParams,
    p: SpacetimePoint,
    k: &PhysicalConstants,
) -> [f64; 3] {
    let mut k0 = *k;
    k0.hbar = 0.0;
    // the closed forms are polynomial in ħ, so ħ=0 evaluates the limit
    rotation_closed_form(params, p, &k0).ee
}

/// The norm of the vector gap between the exact and classical electric
/// fields: γr₀ω³ħ/(2c²) in charge-weighted form.
pub fn rotation_classical_gap(params: &RotationScenarioParams, k: &PhysicalConstants) -> f64 {
    params.gamma(k) * params.r0 * params.omega.abs().powi(3) * k.hbar / (2.0 * k.c * k.c)
}

/// The orbital frequency at which the Maxwell source current becomes
/// time-independent: ω₀ = (mc² − √((mc²)² + 2eB₀c²ħ))/ħ, the cyclotron
/// frequency with its quantum correction.
pub fn resonant_frequency(b0: f64, k: &PhysicalConstants) -> f64 {
    // rationalized form of (mc² − √((mc²)² + 2eB₀c²ħ))/ħ: the direct
    // difference cancels ~10 digits at laboratory field strengths
    let mc2 = k.rest_energy();
    let disc = (mc2 * mc2 + 2.0 * k.e * b0 * k.c * k.c * k.hbar).sqrt();
    -2.0 * k.e * b0 * k.c * k.c / (mc2 + disc)
}

/// Residual of the small-ħ expansion ω₀ ≈ −ω_c + ħω_c²/(2mc²) with
/// ω_c = eB₀/m; the remainder is O(ħ²).
pub fn cyclotron_expansion_check(b0: f64, k: &PhysicalConstants) -> f64 {
    let wc = k.e * b0 / k.m;
    resonant_frequency(b0, k) + wc - k.hbar * wc * wc / (2.0 * k.rest_energy())
}

/// Straight-line scenario parameters.
#[derive(Debug, Clone)]
pub struct TranslationScenarioParams {
    pub trajectory: Trajectory,
    pub b0: f64,
}

/// Closed-form outputs for the translation scenario at one point.
#[derive(Debug, Clone, Copy)]
pub struct TranslationClosedForm {
    pub ea: [f64; 4],
    pub ee: [f64; 3],
    pub eb: [f64; 3],
    /// μ₀eJ^k (J³ vanishes).
    pub mu0_ej: [f64; 3],
}

/// Evaluates the translation-scenario closed forms through the fourth
/// trajectory derivative (which enters the source current).
pub fn translation_closed_form(
    params: &TranslationScenarioParams,
    p: SpacetimePoint,
    k: &PhysicalConstants,
) -> Result<TranslationClosedForm> {
    let (hbar, c, m) = (k.hbar, k.c, k.m);
    let eb0 = k.e * params.b0;
    let (t, x, y) = (p.t, p.x, p.y);
    let [yv, yd, ydd, yddd, y4] = params.trajectory.derivatives(t, k)?;
    let q = (c * c - yd * yd).sqrt();
    let q2 = q * q;

    let ea0 = c * (4.0 * c * (q + c) - yd * yd * ((1.0 - yd * yd / (c * c)).sqrt() + 3.0))
        * (x * yd * (c * c - yd * yd) * eb0 - 2.0 * c * c * m * ydd * (y - t * yd))
        / (2.0 * (c * (q + c) - yd * yd).powi(3));
    let ea1 = (hbar * ydd - (c * c - yd * yd) * eb0 * (y - yv)) / (2.0 * c * q);
    let ea2 = c * x * eb0 / (2.0 * q);

    let ee1 = (yd.powi(3) * eb0 * ((y - yv) * ydd + 3.0 * c * c)
        - yd * (c * c * (y - yv) * ydd * eb0 + hbar * ydd * ydd + 2.0 * c.powi(4) * eb0)
        - c * c * hbar * yddd
        + yd * yd * hbar * yddd
        - yd.powi(5) * eb0)
        / (2.0 * c * q.powi(3));
    let ee2 = ydd * (2.0 * c.powi(3) * m - c * x * yd * eb0) / (2.0 * q.powi(3));
    let eb3 = eb0 * (2.0 * c * c - yd * yd) / (2.0 * c * q);

    let j1 = (q2 * yd * yddd * (3.0 * hbar * ydd + q2 * (y - yv) * eb0)
        + 3.0 * q2 * yd.powi(4) * ydd * eb0
        + 2.0 * yd * yd * hbar * ydd.powi(3)
        + q2 * q2 * hbar * y4)
        / (2.0 * c.powi(3) * q.powi(5))
        + c * ydd * eb0 / q.powi(3)
        + ydd * (q2 * (y - yv) * ydd * eb0 + hbar * ydd * ydd - 4.0 * q2 * yd * yd * eb0)
            / (2.0 * c * q.powi(5));
    let j2 = c * (x * ydd * ydd * eb0 - 2.0 * m * q2 * yddd - 6.0 * m * yd * ydd * ydd)
        / (2.0 * q.powi(5))
        + x * yd * eb0 * (q2 * yddd + 2.0 * yd * ydd * ydd) / (2.0 * c * q.powi(5));

    Ok(TranslationClosedForm {
        ea: [ea0, ea1, ea2, 0.0],
        ee: [ee1, ee2, 0.0],
        eb: [0.0, 0.0, eb3],
        mu0_ej: [j1, j2, 0.0],
    })
}

/// Nonrelativistic-limit electric field of the translation scenario:
/// eE = (−ẎeB₀, mŸ, 0).
pub fn translation_nonrel_e(
    params: &TranslationScenarioParams,
    t: f64,
    k: &PhysicalConstants,
) -> Result<[f64; 3]> {
    let [_, yd, ydd, _, _] = params.trajectory.derivatives(t, k)?;
    Ok([-yd * k.e * params.b0, k.m * ydd, 0.0])
}

/// Classical-limit (ħ → 0) electric field of the translation scenario.
pub fn translation_classical_e(
    params: &TranslationScenarioParams,
    p: SpacetimePoint,
    k: &PhysicalConstants,
) -> Result<[f64; 3]> {
    let mut k0 = *k;
    k0.hbar = 0.0;
    Ok(translation_closed_form(params, p, &k0)?.ee)
}

/// The gap eE₁(classical) − eE₁ = (ħ/2c²)·d/dt(γŸ), the radiation-reaction
/// scale correction to the perpendicular field component.
pub fn translation_classical_gap(
    params: &TranslationScenarioParams,
    t: f64,
    k: &PhysicalConstants,
) -> Result<f64> {
    let c = k.c;
    let [_, yd, ydd, yddd, _] = params.trajectory.derivatives(t, k)?;
    let q = (c * c - yd * yd).sqrt();
    // d/dt(γŸ) with γ = c/√(c²−Ẏ²)
    let dgamma_ydd = c * (yddd / q + yd * ydd * ydd / q.powi(3));
    Ok(k.hbar / (2.0 * c * c) * dgamma_ydd)
}

/// Longitudinally confined stationary-state parameters.
#[derive(Debug, Clone)]
pub struct Confined3dParams {
    pub profile: Profile,
    pub b0: f64,
    /// Energy offset ε (J); shifts eA⁰ by ε/c.
    pub epsilon: f64,
}

/// eA⁰(z) of the confined stationary state:
/// (2mc(f′² − 1) − ħf″)/(2√(1 − f′²)) + ε/c.
pub fn confined_3d_closed_form(
    params: &Confined3dParams,
    z: f64,
    k: &PhysicalConstants,
) -> Result<f64> {
    let [_, fp, fpp] = params.profile.derivatives(z, k)?;
    let root = (1.0 - fp * fp).sqrt();
    Ok((2.0 * k.rest_momentum() * (fp * fp - 1.0) - k.hbar * fpp) / (2.0 * root)
        + params.epsilon / k.c)
}

/// The soft-core Coulomb specialization f(z) = √(ξ²+z²):
/// eA⁰ = −ξmc/√(ξ²+z²) − ξħ/(2(ξ²+z²)).
pub fn soft_coulomb(xi: f64, z: f64, k: &PhysicalConstants) -> f64 {
    let r2 = xi * xi + z * z;
    -xi * k.rest_momentum() / r2.sqrt() - xi * k.hbar / (2.0 * r2)
}

/// eA_μ of the rotating state confined along z: the planar rotation
/// potential shifted by μ(z)·u^μ along the (timelike) orbit direction,
/// with μ(z) = mc(1 − √(1−f′²)) − ħf″/(2√(1−f′²)).
pub fn rotation_3d_closed_form(
    rotation: &RotationScenarioParams,
    profile: &Profile,
    p: SpacetimePoint,
    k: &PhysicalConstants,
) -> Result<[f64; 4]> {
    let planar = rotation_closed_form(rotation, p, k).ea;
    let [_, fp, fpp] = profile.derivatives(p.z, k)?;
    let root = (1.0 - fp * fp).sqrt();
    let mu = k.rest_momentum() * (1.0 - root) - k.hbar * fpp / (2.0 * root);
    let gamma = rotation.gamma(k);
    let speed = rotation.r0 * rotation.omega;
    let (swt, cwt) = (rotation.omega * p.t).sin_cos();
    let u = [
        gamma,
        -gamma * speed * swt / k.c,
        gamma * speed * cwt / k.c,
        0.0,
    ];
    Ok([
        planar[0] + mu * u[0],
        planar[1] + mu * u[1],
        planar[2] + mu * u[2],
        planar[3],
    ])
}

/// Fields of the Landau state boosted to proper velocity u² along y:
/// E = (−u²cB₀, 0, 0), B = (0, 0, u⁰B₀).
pub fn boosted_landau_fields(u2: f64, b0: f64, k: &PhysicalConstants) -> ([f64; 3], [f64; 3]) {
    let u0 = (1.0 + u2 * u2).sqrt();
    ([-u2 * k.c * b0, 0.0, 0.0], [0.0, 0.0, u0 * b0])
}

/// The scalar potential of the nonlinear state:
/// V(z) = 2mc²z/ξ − κ√(2mc/(πξħ))·e^{−mc(2z+ξ)²/(2ξħ)}.
pub fn nonlinear_scalar_v(xi: f64, kappa: f64, z: f64, k: &PhysicalConstants) -> f64 {
    let mc = k.rest_momentum();
    2.0 * k.rest_energy() * z / xi
        - kappa
            * (2.0 * mc / (std::f64::consts::PI * xi * k.hbar)).sqrt()
            * (-mc * (2.0 * z + xi).powi(2) / (2.0 * xi * k.hbar)).exp()
}

/// The scalar potential of the linear scalar state:
/// V(z) = −mc² + (ε/ξ)√(z²+ξ²) − ħc/(2√(z²+ξ²)).
pub fn scalar_state_v(xi: f64, epsilon: f64, z: f64, k: &PhysicalConstants) -> f64 {
    let r = (z * z + xi * xi).sqrt();
    -k.rest_energy() + epsilon * r / xi - k.hbar * k.c / (2.0 * r)
}
