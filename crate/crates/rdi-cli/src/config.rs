//! Configuration format: TOML with nested sections and embedded expression
//! strings, plus the built-in presets.

use std::collections::HashMap;

use serde::Deserialize;

use rdi_core::PhysicalConstants;

/// Top-level configuration file.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub scenario: ScenarioConfig,
    #[serde(default)]
    pub grid: GridConfig,
    #[serde(default)]
    pub tolerances: Tolerances,
    #[serde(default)]
    pub constants: ConstantsOverride,
    #[serde(default)]
    pub output: OutputConfig,
    #[serde(default)]
    pub verify: VerifyConfig,
}

/// Scenario selection; fields live inline in the `[scenario]` table next
/// to `kind`.
#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ScenarioConfig {
    /// Free particle at rest; inverts to A ≡ 0.
    Rest,
    /// Gaussian packet on a circular orbit.  `omega` defaults to the
    /// resonant orbital frequency for `b0`.
    Rotation {
        b0: f64,
        r0: f64,
        omega: Option<f64>,
    },
    /// Gaussian packet translated along y by the smooth start/stop
    /// trajectory of length `l` over period `t_period`.  `broken` drops
    /// the 1/√u⁰ normalization (negative testing of the gate).
    Translation {
        b0: f64,
        l: f64,
        t_period: f64,
        #[serde(default)]
        broken: bool,
    },
    /// Stationary state confined transversely by `b0` and longitudinally
    /// by the soft-core profile of width `xi`.
    Confined {
        b0: f64,
        xi: f64,
        #[serde(default)]
        epsilon: f64,
    },
    /// The rotating packet additionally confined along z.
    RotatingConfined {
        b0: f64,
        r0: f64,
        omega: Option<f64>,
        xi: f64,
    },
    /// Stationary state admitting a purely scalar interaction.
    Scalar { xi: f64, epsilon: f64 },
    /// Static state inverting to a nonlinear scalar interaction with
    /// coupling `kappa`.
    Nonlinear {
        xi: f64,
        #[serde(default)]
        kappa: f64,
    },
    /// Landau ground state boosted to constant proper velocity `u2`.
    BoostedLandau { u2: f64, b0: f64 },
    /// Landau ground state under a uniform-acceleration boost by `e0`.
    AcceleratedBoost { e0: f64, b0: f64 },
    /// Expression-defined state Ψ = √ρ·e^{iβ/2}·B(u)·R(θ)·e^{−iεtσ₃/ħ};
    /// every factor is an expression over (t, x, y, z) and `params`.
    Custom {
        rho: String,
        u: [String; 3],
        theta: [String; 3],
        beta: String,
        #[serde(default)]
        epsilon: f64,
        #[serde(default)]
        params: HashMap<String, f64>,
    },
}

impl ScenarioConfig {
    pub fn kind_name(&self) -> &'static str {
        match self {
            ScenarioConfig::Rest => "rest",
            ScenarioConfig::Rotation { .. } => "rotation",
            ScenarioConfig::Translation { .. } => "translation",
            ScenarioConfig::Confined { .. } => "confined",
            ScenarioConfig::RotatingConfined { .. } => "rotating-confined",
            ScenarioConfig::Scalar { .. } => "scalar",
            ScenarioConfig::Nonlinear { .. } => "nonlinear",
            ScenarioConfig::BoostedLandau { .. } => "boosted-landau",
            ScenarioConfig::AcceleratedBoost { .. } => "accelerated-boost",
            ScenarioConfig::Custom { .. } => "custom",
        }
    }
}

/// One spatial axis: `count` evenly spaced samples over [min, max].
#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AxisSpec {
    #[serde(default)]
    pub min: f64,
    #[serde(default)]
    pub max: f64,
    #[serde(default = "one")]
    pub count: usize,
}

fn one() -> usize {
    1
}

impl Default for AxisSpec {
    fn default() -> Self {
        Self { min: 0.0, max: 0.0, count: 1 }
    }
}

impl AxisSpec {
    pub fn values(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.min];
        }
        let step = (self.max - self.min) / (self.count - 1) as f64;
        (0..self.count).map(|i| self.min + step * i as f64).collect()
    }

    fn validate(&self, name: &str) -> Result<(), String> {
        if self.count == 0 {
            return Err(format!("grid axis {name}: count must be >= 1"));
        }
        if !(self.min.is_finite() && self.max.is_finite()) {
            return Err(format!("grid axis {name}: bounds must be finite"));
        }
        if self.count > 1 && self.max <= self.min {
            return Err(format!("grid axis {name}: max must exceed min when count > 1"));
        }
        Ok(())
    }
}

/// Spatial grid plus explicit time samples.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    #[serde(default)]
    pub x: AxisSpec,
    #[serde(default)]
    pub y: AxisSpec,
    #[serde(default)]
    pub z: AxisSpec,
    #[serde(default = "default_times")]
    pub t: Vec<f64>,
}

fn default_times() -> Vec<f64> {
    vec![0.0]
}

impl Default for GridConfig {
    fn default() -> Self {
        Self {
            x: AxisSpec::default(),
            y: AxisSpec::default(),
            z: AxisSpec::default(),
            t: default_times(),
        }
    }
}

impl GridConfig {
    pub fn point_count(&self) -> usize {
        self.t.len() * self.x.count * self.y.count * self.z.count
    }
}

/// Every tolerance the commands consult, with the library defaults.
#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Tolerances {
    /// Hermiticity gate (scale-relative).
    pub hermiticity: f64,
    /// Closed-form agreement for eA, E, B in `verify`.
    pub oracle_potential: f64,
    /// Closed-form agreement for J^ν in `verify`.
    pub oracle_current: f64,
    /// Homogeneous Maxwell identity defects in `verify`.
    pub maxwell: f64,
    /// Classical-limit gap identities in `verify`.
    pub limits: f64,
    /// Source-current constancy at the resonant frequency in `verify`.
    pub resonance: f64,
    /// Jet-vs-finite-difference agreement in `verify`.
    pub fd: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            hermiticity: 1e-8,
            oracle_potential: 1e-9,
            oracle_current: 1e-6,
            maxwell: 1e-8,
            limits: 1e-6,
            resonance: 1e-6,
            fd: 1e-6,
        }
    }
}

impl Tolerances {
    fn validate(&self) -> Result<(), String> {
        for (name, v) in [
            ("hermiticity", self.hermiticity),
            ("oracle_potential", self.oracle_potential),
            ("oracle_current", self.oracle_current),
            ("maxwell", self.maxwell),
            ("limits", self.limits),
            ("resonance", self.resonance),
            ("fd", self.fd),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(format!("tolerance {name} must be positive, got {v}"));
            }
        }
        Ok(())
    }
}

/// Optional overrides for the physical constants.
#[derive(Debug, Clone, Copy, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstantsOverride {
    pub hbar: Option<f64>,
    pub c: Option<f64>,
    pub e: Option<f64>,
    pub m: Option<f64>,
    pub eps0: Option<f64>,
}

impl ConstantsOverride {
    pub fn build(&self) -> Result<PhysicalConstants, String> {
        let d = PhysicalConstants::default();
        let k = PhysicalConstants {
            hbar: self.hbar.unwrap_or(d.hbar),
            c: self.c.unwrap_or(d.c),
            e: self.e.unwrap_or(d.e),
            m: self.m.unwrap_or(d.m),
            eps0: self.eps0.unwrap_or(d.eps0),
        };
        k.validate().map_err(|e| e.to_string())?;
        Ok(k)
    }
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    /// File-name stem for the CSV/JSON outputs; defaults to the scenario
    /// kind.
    pub prefix: Option<String>,
}

/// Options for the `verify` command.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyConfig {
    /// Subset of check names to run; all when omitted.
    pub checks: Option<Vec<String>>,
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, String> {
        let cfg: Config = toml::from_str(text).map_err(|e| e.to_string())?;
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), String> {
        self.grid.x.validate("x")?;
        self.grid.y.validate("y")?;
        self.grid.z.validate("z")?;
        if self.grid.t.is_empty() {
            return Err("grid: at least one time sample required".into());
        }
        if self.grid.t.iter().any(|t| !t.is_finite()) {
            return Err("grid: time samples must be finite".into());
        }
        self.tolerances.validate()?;
        Ok(())
    }

    pub fn output_prefix(&self) -> String {
        self.output
            .prefix
            .clone()
            .unwrap_or_else(|| self.scenario.kind_name().to_string())
    }
}

/// Names of the built-in presets, in display order.
pub const PRESET_NAMES: [&str; 6] =
    ["fig1", "fig2", "soft-coulomb", "scalar", "nonlinear", "boosted-landau"];

/// Returns the embedded preset source, if `name` is known.
pub fn preset_source(name: &str) -> Option<&'static str> {
    match name {
        "fig1" => Some(include_str!("../presets/fig1.toml")),
        "fig2" => Some(include_str!("../presets/fig2.toml")),
        "soft-coulomb" => Some(include_str!("../presets/soft-coulomb.toml")),
        "scalar" => Some(include_str!("../presets/scalar.toml")),
        "nonlinear" => Some(include_str!("../presets/nonlinear.toml")),
        "boosted-landau" => Some(include_str!("../presets/boosted-landau.toml")),
        _ => None,
    }
}
