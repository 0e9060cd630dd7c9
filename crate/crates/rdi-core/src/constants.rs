//! Physical constants, overridable to probe classical (ħ → 0) and
//! nonrelativistic (c → ∞) limits.

use crate::error::CoreError;

/// SI values of the constants entering the Dirac equation.
///
/// All fields are public and overridable: limit checks scale `hbar` or `c`
/// while keeping everything else fixed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// Reduced Planck constant (J·s).
    pub hbar: f64,
    /// Speed of light (m/s).
    pub c: f64,
    /// Elementary charge (C).
    pub e: f64,
    /// Particle mass (kg); defaults to the electron mass.
    pub m: f64,
    /// Vacuum permittivity (F/m).
    pub eps0: f64,
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self {
            hbar: 1.054_571_817e-34,
            c: 299_792_458.0,
            e: 1.602_176_634e-19,
            m: 9.109_383_701_5e-31,
            eps0: 8.854_187_812_8e-12,
        }
    }
}

impl PhysicalConstants {
    /// Vacuum permeability μ₀ = 1/(ε₀c²) (H/m).
    pub fn mu0(&self) -> f64 {
        1.0 / (self.eps0 * self.c * self.c)
    }

    /// Rest energy mc² (J).
    pub fn rest_energy(&self) -> f64 {
        self.m * self.c * self.c
    }

    /// Rest momentum mc (J·s/m); the natural scale of the charge-weighted
    /// potential components.
    pub fn rest_momentum(&self) -> f64 {
        self.m * self.c
    }

    /// Returns a copy with ħ scaled by `s` (classical-limit sweeps).
    pub fn with_hbar_scaled(&self, s: f64) -> Self {
        Self { hbar: self.hbar * s, ..*self }
    }

    /// Checks that every constant is strictly positive and finite.
    pub fn validate(&self) -> Result<(), CoreError> {
        for (name, v) in [
            ("hbar", self.hbar),
            ("c", self.c),
            ("e", self.e),
            ("m", self.m),
            ("eps0", self.eps0),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(CoreError::InvalidParameter(format!(
                    "constant {name} must be positive and finite, got {v}"
                )));
            }
        }
        Ok(())
    }
}
