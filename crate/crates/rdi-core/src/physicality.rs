//! Order-of-magnitude admissibility checks: is the prescribed motion
//! physically sensible as a radiating charge?
//!
//! The estimates use the classical relativistic Larmor rate
//! P = e²a²γ⁶/(6πε₀c³) (with the γ⁴ form for circular motion, where the
//! acceleration is perpendicular to the velocity).  These are deliberately
//! coarse — the verdicts compare orders of magnitude, not precise values.

use crate::catalog::{RotationScenarioParams, TranslationScenarioParams};
use crate::constants::PhysicalConstants;
use crate::error::{CoreError, Result};

/// Default ceiling on radiated/kinetic energy ratio.
pub const RATIO_THRESHOLD: f64 = 1e-3;

/// Radiative-loss admissibility verdict for one scenario.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalityVerdict {
    /// Set when the prescribed motion reaches or exceeds c.
    pub superluminal: bool,
    /// Energy radiated over the characteristic period (J).
    pub radiated_energy: f64,
    /// Kinetic energy of the motion (J).
    pub kinetic_energy: f64,
    /// radiated/kinetic.
    pub ratio: f64,
    /// ratio < threshold and not superluminal.
    pub pass: bool,
}

fn verdict(radiated: f64, kinetic: f64, threshold: f64) -> PhysicalityVerdict {
    let ratio = if kinetic > 0.0 { radiated / kinetic } else { 0.0 };
    PhysicalityVerdict {
        superluminal: false,
        radiated_energy: radiated,
        kinetic_energy: kinetic,
        ratio,
        pass: ratio < threshold,
    }
}

/// Synchrotron estimate for the circular orbit: Larmor power with
/// a = ω²r₀ and the perpendicular-acceleration factor γ⁴, integrated over
/// one period 2π/|ω|; kinetic energy (γ−1)mc².
pub fn synchrotron_check(
    params: &RotationScenarioParams,
    k: &PhysicalConstants,
) -> Result<PhysicalityVerdict> {
    let speed = params.r0 * params.omega.abs();
    if speed >= k.c {
        return Err(CoreError::InvalidParameter(format!(
            "superluminal orbit: r0|omega| = {speed:.6e} m/s"
        )));
    }
    if params.omega == 0.0 {
        return Ok(verdict(0.0, 0.0, RATIO_THRESHOLD));
    }
    let gamma = params.gamma(k);
    let a = params.omega * params.omega * params.r0;
    let power = k.e * k.e * a * a * gamma.powi(4)
        / (6.0 * std::f64::consts::PI * k.eps0 * k.c.powi(3));
    let period = 2.0 * std::f64::consts::PI / params.omega.abs();
    let kinetic = (gamma - 1.0) * k.rest_energy();
    Ok(verdict(power * period, kinetic, RATIO_THRESHOLD))
}

/// Bremsstrahlung estimate for the rectilinear trajectory: Larmor power
/// with a(t) = Ÿ and the parallel-acceleration factor γ⁶, integrated over
/// [0, T] by Simpson's rule; kinetic energy at the peak speed.
pub fn bremsstrahlung_check(
    params: &TranslationScenarioParams,
    t_span: f64,
    k: &PhysicalConstants,
) -> Result<PhysicalityVerdict> {
    let c = k.c;
    let prefactor = k.e * k.e / (6.0 * std::f64::consts::PI * k.eps0 * c.powi(3));
    let n = 400; // Simpson panels; the integrand is smooth
    let h = t_span / (n as f64);
    let mut integral = 0.0;
    let mut peak_speed: f64 = 0.0;
    for i in 0..=n {
        let t = h * i as f64;
        let [_, yd, ydd, _, _] = params.trajectory.derivatives(t, k)?;
        if yd.abs() >= c {
            return Err(CoreError::InvalidParameter(format!(
                "superluminal trajectory: |Ydot| = {:.6e} m/s at t = {t:.3e} s",
                yd.abs()
            )));
        }
        peak_speed = peak_speed.max(yd.abs());
        let gamma = 1.0 / (1.0 - (yd / c).powi(2)).sqrt();
        let p = prefactor * gamma.powi(6) * ydd * ydd;
        let w = if i == 0 || i == n {
            1.0
        } else if i % 2 == 1 {
            4.0
        } else {
            2.0
        };
        integral += w * p;
    }
    let radiated = integral * h / 3.0;
    let gamma_pk = 1.0 / (1.0 - (peak_speed / c).powi(2)).sqrt();
    let kinetic = (gamma_pk - 1.0) * k.rest_energy();
    Ok(verdict(radiated, kinetic, RATIO_THRESHOLD))
}
