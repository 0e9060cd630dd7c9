//! Differentiable spinor fields Ψ(t,x,y,z): the paper-style scenario
//! builders plus expression-defined parametrizations.
//!
//! Every builder evaluates through the generic [`Scalar`] interface, so the
//! same closed-form construction yields plain values, first/second
//! derivatives, or the third-order jets the inversion engine needs.
//!
//! A note on phases: localized states riding a classical trajectory carry
//! the instantaneous-boost phase Λ = mc(u⁰ct − c·u·r) in the right factor
//! exp(−iΛσ₃/ħ); this is what makes the inverted operator Hermitian.

use std::collections::HashMap;

use num_complex::Complex64;

use crate::aps::{axial_phase, boost, density_and_beta, rotor, ApsElement};
use crate::constants::PhysicalConstants;
use crate::dsl::{Expr, EvalContext};
use crate::error::{CoreError, Result};
use crate::jets::{checked, Jet, Jet3, Scalar};

/// A spacetime event in SI units (t in seconds, x/y/z in meters).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpacetimePoint {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl SpacetimePoint {
    pub fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        Self { t, x, y, z }
    }
}

/// A state defined by one generic evaluation routine.
///
/// Implementors write the state once over an arbitrary [`Scalar`];
/// the blanket [`SpinorField`] impl instantiates it at plain values and at
/// jet-seeded coordinates.  `vars` is `[t, x, y, z]` in SI units (`t` in
/// seconds; its derivative slot is nevertheless ∂/∂(ct), carried by the
/// seeding).
pub trait ParametrizedState: Send + Sync {
    /// Ψ factored as e^σ·Φ·exp(−iλσ₃), returning (σ, Φ, λ).
    ///
    /// Both outer factors of a localized state are numerically hostile in
    /// assembled form: the axial phase λ is enormous (its gradient is the
    /// Compton scale mc/ħ), so exponentiating it inside the jet arithmetic
    /// poisons second derivatives with squared-gradient round-off, and the
    /// log-amplitude σ reaches −400 a few packet widths out, where e^σ
    /// underflows and the matrix inverse degenerates.  Both cancel
    /// identically in the inversion, so the engine consumes this factored
    /// form and never exponentiates either.
    ///
    /// Contract: σ must be real (any phase belongs in Φ or λ) — the
    /// amplitude cancellation in the mass term relies on σ† = σ.
    fn eval_factored<S: Scalar>(
        &self,
        vars: [S; 4],
        k: &PhysicalConstants,
    ) -> Result<(S, ApsElement<S>, S)>;

    /// The assembled state Ψ = e^σ·Φ·exp(−iλσ₃).
    fn eval_scalar<S: Scalar>(
        &self,
        vars: [S; 4],
        k: &PhysicalConstants,
    ) -> Result<ApsElement<S>> {
        let (sigma, phi, lambda) = self.eval_factored(vars, k)?;
        Ok(phi.scalar_mul(sigma.exp()) * axial_phase(lambda))
    }
}

/// Object-safe evaluation interface consumed by the engine.
pub trait SpinorField: Send + Sync {
    /// Ψ at a point (values only).
    fn evaluate(
        &self,
        p: SpacetimePoint,
        k: &PhysicalConstants,
    ) -> Result<ApsElement<Complex64>>;

    /// Ψ with first and second derivatives over (ct, x, y, z).
    fn evaluate_jet(&self, p: SpacetimePoint, k: &PhysicalConstants)
        -> Result<ApsElement<Jet>>;

    /// Ψ with derivatives through third order; the engine's deep pass.
    fn evaluate_deep(
        &self,
        p: SpacetimePoint,
        k: &PhysicalConstants,
    ) -> Result<ApsElement<Jet3>>;

    /// The factored form (σ, Φ, λ) with Ψ = e^σ·Φ·exp(−iλσ₃), on
    /// third-order jets.  Keeping the log-amplitude and axial phase
    /// symbolic is what lets the engine reach full double precision in
    /// fields and currents and stay finite in the far Gaussian tails.
    fn evaluate_factored_deep(
        &self,
        p: SpacetimePoint,
        k: &PhysicalConstants,
    ) -> Result<(Jet3, ApsElement<Jet3>, Jet3)>;

    /// The factored form on second-order jets.
    fn evaluate_factored_jet(
        &self,
        p: SpacetimePoint,
        k: &PhysicalConstants,
    ) -> Result<(Jet, ApsElement<Jet>, Jet)>;

    /// The factored form at plain values.
    fn evaluate_factored(
        &self,
        p: SpacetimePoint,
        k: &PhysicalConstants,
    ) -> Result<(Complex64, ApsElement<Complex64>, Complex64)>;
}

impl<T: ParametrizedState> SpinorField for T {
    fn evaluate(
        &self,
        p: SpacetimePoint,
        k: &PhysicalConstants,
    ) -> Result<ApsElement<Complex64>> {
        let vars = [
            Complex64::new(p.t, 0.0),
            Complex64::new(p.x, 0.0),
            Complex64::new(p.y, 0.0),
            Complex64::new(p.z, 0.0),
        ];
        self.eval_scalar(vars, k)
    }

    fn evaluate_jet(
        &self,
        p: SpacetimePoint,
        k: &PhysicalConstants,
    ) -> Result<ApsElement<Jet>> {
        let [ct, x, y, z] = Jet::seed(p.t, p.x, p.y, p.z, k.c);
        self.eval_scalar([ct.scale(1.0 / k.c), x, y, z], k)
    }

    fn evaluate_deep(
        &self,
        p: SpacetimePoint,
        k: &PhysicalConstants,
    ) -> Result<ApsElement<Jet3>> {
        let [ct, x, y, z] = Jet3::seed(p.t, p.x, p.y, p.z, k.c);
        self.eval_scalar([ct.scale(1.0 / k.c), x, y, z], k)
    }

    fn evaluate_factored_deep(
        &self,
        p: SpacetimePoint,
        k: &PhysicalConstants,
    ) -> Result<(Jet3, ApsElement<Jet3>, Jet3)> {
        let [ct, x, y, z] = Jet3::seed(p.t, p.x, p.y, p.z, k.c);
        self.eval_factored([ct.scale(1.0 / k.c), x, y, z], k)
    }

    fn evaluate_factored_jet(
        &self,
        p: SpacetimePoint,
        k: &PhysicalConstants,
    ) -> Result<(Jet, ApsElement<Jet>, Jet)> {
        let [ct, x, y, z] = Jet::seed(p.t, p.x, p.y, p.z, k.c);
        self.eval_factored([ct.scale(1.0 / k.c), x, y, z], k)
    }

    fn evaluate_factored(
        &self,
        p: SpacetimePoint,
        k: &PhysicalConstants,
    ) -> Result<(Complex64, ApsElement<Complex64>, Complex64)> {
        let vars = [
            Complex64::new(p.t, 0.0),
            Complex64::new(p.x, 0.0),
            Complex64::new(p.y, 0.0),
            Complex64::new(p.z, 0.0),
        ];
        self.eval_factored(vars, k)
    }
}

/// Free particle at rest with zero mean momentum: Ψ = exp(−imc²tσ₃/ħ).
/// Inverts to A ≡ 0.
#[derive(Debug, Clone, Copy, Default)]
pub struct RestState;

impl ParametrizedState for RestState {
    fn eval_factored<S: Scalar>(
        &self,
        vars: [S; 4],
        k: &PhysicalConstants,
    ) -> Result<(S, ApsElement<S>, S)> {
        let lambda = vars[0].scale(k.rest_energy() / k.hbar);
        Ok((S::from_re(0.0), ApsElement::identity(), lambda))
    }
}

/// Gaussian packet on a circular orbit of radius `r0` at angular velocity
/// `omega` (rad/s) in the xy-plane, with transverse width set by `b0` (T).
///
/// The packet center is (r₀cos ωt, r₀sin ωt); the boost is tangential with
/// constant γ, and the phase is Λ = γmc²t − γm v·r.
#[derive(Debug, Clone, Copy)]
pub struct RotationState {
    pub r0: f64,
    pub omega: f64,
    pub b0: f64,
}

impl RotationState {
    pub fn new(r0: f64, omega: f64, b0: f64, k: &PhysicalConstants) -> Result<Self> {
        if r0 < 0.0 || !r0.is_finite() || !omega.is_finite() || !b0.is_finite() {
            return Err(CoreError::InvalidParameter(
                "rotation parameters must be finite with r0 >= 0".into(),
            ));
        }
        if r0 * omega.abs() >= k.c {
            return Err(CoreError::InvalidParameter(format!(
                "orbital speed r0|omega| = {:.6e} m/s must be below c",
                r0 * omega.abs()
            )));
        }
        Ok(Self { r0, omega, b0 })
    }

    /// Lorentz factor of the orbit.
    pub fn gamma(&self, k: &PhysicalConstants) -> f64 {
        let b = self.r0 * self.omega / k.c;
        1.0 / (1.0 - b * b).sqrt()
    }
}

impl ParametrizedState for RotationState {
    fn eval_factored<S: Scalar>(
        &self,
        vars: [S; 4],
        k: &PhysicalConstants,
    ) -> Result<(S, ApsElement<S>, S)> {
        let [t, x, y, _z] = vars;
        let gamma = self.gamma(k);
        let phase = t.scale(self.omega);
        let (sin_wt, cos_wt) = (phase.sin(), phase.cos());
        let rx = cos_wt.scale(self.r0);
        let ry = sin_wt.scale(self.r0);
        let vx = (-sin_wt).scale(self.r0 * self.omega);
        let vy = cos_wt.scale(self.r0 * self.omega);
        // tangential proper velocity u = γv/c
        let u1 = vx.scale(gamma / k.c);
        let u2 = vy.scale(gamma / k.c);
        let dx = x - rx;
        let dy = y - ry;
        let sigma = (dx * dx + dy * dy).scale(-k.e * self.b0 / (4.0 * k.hbar));
        let lambda =
            (t.scale(gamma * k.rest_energy()) - (vx * x + vy * y).scale(gamma * k.m)).scale(1.0 / k.hbar);
        let b = boost([S::from_re(gamma), u1, u2, S::from_re(0.0)]);
        Ok((sigma, b, lambda))
    }
}

/// A rectilinear trajectory y = Y(t) with analytic derivatives.
#[derive(Debug, Clone)]
pub enum Trajectory {
    /// Y(t) = (L/2)[1 + sin(π(t − T/2)/T)]: smooth start/stop over one
    /// period, peak speed πL/(2T) at t = T/2.
    Sinusoid { l: f64, t_period: f64 },
    /// User-defined position and velocity expressions in `t`.  The caller
    /// must supply `y_dot` consistent with `y`; higher derivatives are
    /// taken from `y_dot` automatically.
    Custom {
        y: Expr,
        y_dot: Expr,
        params: HashMap<String, f64>,
    },
}

impl Trajectory {
    /// Y(t).
    pub fn position<S: Scalar>(&self, t: S, k: &PhysicalConstants) -> Result<S> {
        match self {
            Trajectory::Sinusoid { l, t_period } => {
                let arg = (t - S::from_re(t_period / 2.0)).scale(std::f64::consts::PI / t_period);
                Ok((arg.sin() + S::from_re(1.0)).scale(l / 2.0))
            }
            Trajectory::Custom { y, params, .. } => {
                let zero = S::from_re(0.0);
                y.eval(&EvalContext { vars: [t, zero, zero, zero], params, constants: k })
            }
        }
    }

    /// Ẏ(t).
    pub fn velocity<S: Scalar>(&self, t: S, k: &PhysicalConstants) -> Result<S> {
        match self {
            Trajectory::Sinusoid { l, t_period } => {
                let w = std::f64::consts::PI / t_period;
                let arg = (t - S::from_re(t_period / 2.0)).scale(w);
                Ok(arg.cos().scale(l / 2.0 * w))
            }
            Trajectory::Custom { y_dot, params, .. } => {
                let zero = S::from_re(0.0);
                y_dot.eval(&EvalContext { vars: [t, zero, zero, zero], params, constants: k })
            }
        }
    }

    /// `[Y, Ẏ, Ÿ, Y⁽³⁾, Y⁽⁴⁾]` at time `t`.
    pub fn derivatives(&self, t: f64, k: &PhysicalConstants) -> Result<[f64; 5]> {
        match self {
            Trajectory::Sinusoid { l, t_period } => {
                let w = std::f64::consts::PI / t_period;
                let a = l / 2.0;
                let arg = w * (t - t_period / 2.0);
                Ok([
                    a * (1.0 + arg.sin()),
                    a * w * arg.cos(),
                    -a * w * w * arg.sin(),
                    -a * w * w * w * arg.cos(),
                    a * w * w * w * w * arg.sin(),
                ])
            }
            Trajectory::Custom { .. } => {
                // seed t directly (not ct): derivative slots are d/dt
                let tj = Jet3::coordinate(t, 0);
                let y = self.position(tj, k)?;
                let v = self.velocity(tj, k)?;
                Ok([
                    y.val.re,
                    v.val.re,
                    v.grad[0].re,
                    v.hess[0][0].re,
                    v.third[0][0][0].re,
                ])
            }
        }
    }

    /// Peak speed, when known in closed form.
    pub fn peak_speed(&self) -> Option<f64> {
        match self {
            Trajectory::Sinusoid { l, t_period } => {
                Some((l / 2.0 * std::f64::consts::PI / t_period).abs())
            }
            Trajectory::Custom { .. } => None,
        }
    }
}

/// Gaussian packet translated along y = Y(t) in a magnetic field `b0`.
///
/// Ψ = G(x, y−Y)/√u⁰ · B(u) · exp(−iΛσ₃/ħ) with u² = Ẏ/√(c²−Ẏ²) and
/// Λ = mc(u⁰ct − u²y).  The 1/√u⁰ amplitude factor is required for the
/// dynamics to be electromagnetic; [`TranslationState::broken`] omits it
/// deliberately (negative testing of the Hermiticity gate).
#[derive(Debug, Clone)]
pub struct TranslationState {
    pub trajectory: Trajectory,
    pub b0: f64,
    /// When set, the 1/√u⁰ normalization is omitted; the inverted operator
    /// then fails the Hermiticity gate.
    pub broken: bool,
}

impl TranslationState {
    pub fn new(trajectory: Trajectory, b0: f64, k: &PhysicalConstants) -> Result<Self> {
        if let Some(vmax) = trajectory.peak_speed() {
            if vmax >= k.c {
                return Err(CoreError::InvalidParameter(format!(
                    "peak trajectory speed {vmax:.6e} m/s must be below c"
                )));
            }
        }
        Ok(Self { trajectory, b0, broken: false })
    }

    /// The deliberately non-normalized variant.
    pub fn broken(trajectory: Trajectory, b0: f64, k: &PhysicalConstants) -> Result<Self> {
        Ok(Self { broken: true, ..Self::new(trajectory, b0, k)? })
    }
}

impl ParametrizedState for TranslationState {
    fn eval_factored<S: Scalar>(
        &self,
        vars: [S; 4],
        k: &PhysicalConstants,
    ) -> Result<(S, ApsElement<S>, S)> {
        let [t, x, y, _z] = vars;
        let c = k.c;
        let yc = self.trajectory.position(t, k)?;
        let yd = self.trajectory.velocity(t, k)?;
        let q = checked::sqrt(&(S::from_re(c * c) - yd * yd))?;
        let u2 = yd / q;
        let u0 = (S::from_re(1.0) + u2 * u2).sqrt();
        let dy = y - yc;
        let g = (x * x + dy * dy).scale(-k.e * self.b0 / (4.0 * k.hbar));
        let lambda = (t.scale(c) * u0 - u2 * y).scale(k.m * c / k.hbar);
        let b = boost([u0, S::from_re(0.0), u2, S::from_re(0.0)]);
        // 1/√u⁰ enters the log-amplitude as −½ln u⁰ (real since u⁰ ≥ 1)
        let sigma = if self.broken { g } else { g - checked::ln(&u0)?.scale(0.5) };
        Ok((sigma, b, lambda))
    }
}

/// A longitudinal confinement profile f(z) with |f′| ≤ 1.
#[derive(Debug, Clone)]
pub enum Profile {
    /// f(z) = √(ξ² + z²): the soft-core Coulomb profile.
    SoftCore { xi: f64 },
    /// User-defined profile; `f_prime` must be the derivative of `f`
    /// (higher derivatives are taken from `f_prime` automatically).
    Custom {
        f: Expr,
        f_prime: Expr,
        params: HashMap<String, f64>,
    },
}

impl Profile {
    pub fn f<S: Scalar>(&self, z: S, k: &PhysicalConstants) -> Result<S> {
        match self {
            Profile::SoftCore { xi } => Ok((z * z + S::from_re(xi * xi)).sqrt()),
            Profile::Custom { f, params, .. } => {
                let zero = S::from_re(0.0);
                f.eval(&EvalContext { vars: [zero, zero, zero, z], params, constants: k })
            }
        }
    }

    pub fn f_prime<S: Scalar>(&self, z: S, k: &PhysicalConstants) -> Result<S> {
        match self {
            Profile::SoftCore { xi } => Ok(z / (z * z + S::from_re(xi * xi)).sqrt()),
            Profile::Custom { f_prime, params, .. } => {
                let zero = S::from_re(0.0);
                f_prime.eval(&EvalContext { vars: [zero, zero, zero, z], params, constants: k })
            }
        }
    }

    /// `[f, f′, f″]` at `z`.
    pub fn derivatives(&self, z: f64, k: &PhysicalConstants) -> Result<[f64; 3]> {
        let zj = Jet::coordinate(z, 3);
        let f = self.f(zj, k)?;
        let fp = self.f_prime(zj, k)?;
        Ok([f.val.re, fp.val.re, fp.grad[3].re])
    }
}

/// Stationary state confined transversely by a magnetic field `b0` and
/// longitudinally by a profile f(z), with energy offset `epsilon` (J):
/// Ψ = e^{iβ(z)/2}·exp(−eB₀(x²+y²)/(4ħ) − mc f(z)/ħ)·e^{−iεtσ₃/ħ},
/// β = arcsin f′.  Inverts to the symmetric-gauge magnetic potential plus
/// a longitudinal electric potential (soft-core Coulomb for the default
/// profile).
#[derive(Debug, Clone)]
pub struct ConfinedState {
    pub profile: Profile,
    pub b0: f64,
    pub epsilon: f64,
}

impl ConfinedState {
    pub fn new(profile: Profile, b0: f64, epsilon: f64) -> Self {
        Self { profile, b0, epsilon }
    }
}

impl ParametrizedState for ConfinedState {
    fn eval_factored<S: Scalar>(
        &self,
        vars: [S; 4],
        k: &PhysicalConstants,
    ) -> Result<(S, ApsElement<S>, S)> {
        let [t, x, y, z] = vars;
        let f = self.profile.f(z, k)?;
        let fp = self.profile.f_prime(z, k)?;
        let beta = checked::asin(&fp)?;
        let i = S::from_complex(Complex64::new(0.0, 1.0));
        let sigma = (x * x + y * y).scale(-k.e * self.b0 / (4.0 * k.hbar))
            - f.scale(k.rest_momentum() / k.hbar);
        let phi = ApsElement::identity().scalar_mul((i * beta.scale(0.5)).exp());
        Ok((sigma, phi, t.scale(self.epsilon / k.hbar)))
    }
}

/// The rotating packet of [`RotationState`] additionally confined along z
/// by a profile f(z): Ψ₃D = e^{iβ(z)/2}e^{−mc f(z)/ħ}·Ψ_rotation.
#[derive(Debug, Clone)]
pub struct RotatingConfinedState {
    pub rotation: RotationState,
    pub profile: Profile,
}

impl ParametrizedState for RotatingConfinedState {
    fn eval_factored<S: Scalar>(
        &self,
        vars: [S; 4],
        k: &PhysicalConstants,
    ) -> Result<(S, ApsElement<S>, S)> {
        let z = vars[3];
        let f = self.profile.f(z, k)?;
        let fp = self.profile.f_prime(z, k)?;
        let beta = checked::asin(&fp)?;
        let i = S::from_complex(Complex64::new(0.0, 1.0));
        let (sigma, phi, lambda) = self.rotation.eval_factored(vars, k)?;
        Ok((
            sigma - f.scale(k.rest_momentum() / k.hbar),
            phi.scalar_mul((i * beta.scale(0.5)).exp()),
            lambda,
        ))
    }
}

/// Stationary state admitting a purely scalar (electromagnetic-free)
/// interaction: Ψ = e^{i arctan(z/ξ)/2}·e^{−mc f(z)/ħ}·e^{−iεtσ₃/ħ} with
/// f(z) = εz²/(2ξmc²) − (ħ/4mc)ln(z²+ξ²).
#[derive(Debug, Clone, Copy)]
pub struct ScalarState {
    pub xi: f64,
    pub epsilon: f64,
}

impl ScalarState {
    pub fn new(xi: f64, epsilon: f64) -> Result<Self> {
        if !(xi.is_finite() && xi > 0.0) {
            return Err(CoreError::InvalidParameter(format!(
                "scalar-state width xi must be positive, got {xi}"
            )));
        }
        Ok(Self { xi, epsilon })
    }
}

impl ParametrizedState for ScalarState {
    fn eval_factored<S: Scalar>(
        &self,
        vars: [S; 4],
        k: &PhysicalConstants,
    ) -> Result<(S, ApsElement<S>, S)> {
        let [t, _x, _y, z] = vars;
        let xi = self.xi;
        let zsq = z * z + S::from_re(xi * xi);
        let f = (z * z).scale(self.epsilon / (2.0 * xi * k.rest_energy()))
            - checked::ln(&zsq)?.scale(k.hbar / (4.0 * k.rest_momentum()));
        let beta = z.scale(1.0 / xi).atan();
        let i = S::from_complex(Complex64::new(0.0, 1.0));
        let sigma = -f.scale(k.rest_momentum() / k.hbar);
        let phi = ApsElement::identity().scalar_mul((i * beta.scale(0.5)).exp());
        Ok((sigma, phi, t.scale(self.epsilon / k.hbar)))
    }
}

/// Static state whose inversion yields a nonlinear scalar interaction
/// linear in z: Ψ = e^{iπ/4}·exp(−mcz/ħ − mcz²/(ξħ)).
#[derive(Debug, Clone, Copy)]
pub struct NonlinearState {
    pub xi: f64,
}

impl NonlinearState {
    pub fn new(xi: f64) -> Result<Self> {
        if !(xi.is_finite() && xi > 0.0) {
            return Err(CoreError::InvalidParameter(format!(
                "nonlinear-state width xi must be positive, got {xi}"
            )));
        }
        Ok(Self { xi })
    }

    /// Normalization constant turning Tr(ΨΨ†)/2 into the probability
    /// density |ψ|² used by the nonlinear term.
    pub fn density_norm(&self, k: &PhysicalConstants) -> f64 {
        let mc = k.rest_momentum();
        (2.0 * mc / (std::f64::consts::PI * self.xi * k.hbar)).sqrt()
            * (-mc * self.xi / (2.0 * k.hbar)).exp()
    }
}

impl ParametrizedState for NonlinearState {
    fn eval_factored<S: Scalar>(
        &self,
        vars: [S; 4],
        k: &PhysicalConstants,
    ) -> Result<(S, ApsElement<S>, S)> {
        let z = vars[3];
        let mc_h = k.rest_momentum() / k.hbar;
        let sigma = -z.scale(mc_h) - (z * z).scale(mc_h / self.xi);
        let phi = ApsElement::identity().scalar_mul(S::from_complex(Complex64::from_polar(
            1.0,
            std::f64::consts::FRAC_PI_4,
        )));
        Ok((sigma, phi, S::from_re(0.0)))
    }
}

/// Landau ground state boosted to constant proper velocity `u2` along y.
/// The fields transform covariantly: B₃ = u⁰B₀, E₁ = −u²cB₀.
#[derive(Debug, Clone, Copy)]
pub struct BoostedLandauState {
    pub u2: f64,
    pub b0: f64,
}

impl ParametrizedState for BoostedLandauState {
    fn eval_factored<S: Scalar>(
        &self,
        vars: [S; 4],
        k: &PhysicalConstants,
    ) -> Result<(S, ApsElement<S>, S)> {
        let [t, x, y, _z] = vars;
        let u2 = self.u2;
        let u0 = (1.0 + u2 * u2).sqrt();
        let ct = t.scale(k.c);
        // rest-frame coordinates of the moving packet
        let ct_r = ct.scale(u0) - y.scale(u2);
        let y_r = y.scale(u0) - ct.scale(u2);
        let sigma = (x * x + y_r * y_r).scale(-k.e * self.b0 / (4.0 * k.hbar));
        let lambda = ct_r.scale(k.rest_momentum() / k.hbar);
        let b = boost([
            S::from_re(u0),
            S::from_re(0.0),
            S::from_re(u2),
            S::from_re(0.0),
        ]);
        Ok((sigma, b, lambda))
    }
}

/// Landau ground state under a time-dependent boost of rapidity
/// sinh η = eE₀t/(mc): uniform acceleration along y by a constant electric
/// field `e0` (V/m).  The construction is approximate — its Hermiticity
/// residual is small (~1e−9 at laboratory field strengths) but not zero.
#[derive(Debug, Clone, Copy)]
pub struct AcceleratedBoostState {
    pub e0: f64,
    pub b0: f64,
}

impl ParametrizedState for AcceleratedBoostState {
    fn eval_factored<S: Scalar>(
        &self,
        vars: [S; 4],
        k: &PhysicalConstants,
    ) -> Result<(S, ApsElement<S>, S)> {
        let [t, x, y, _z] = vars;
        let sh = t.scale(k.e * self.e0 / k.rest_momentum());
        let ch = (S::from_re(1.0) + sh * sh).sqrt();
        let ct = t.scale(k.c);
        let ct_r = ch * ct - sh * y;
        let y_r = ch * y - sh * ct;
        let sigma = (x * x + y_r * y_r).scale(-k.e * self.b0 / (4.0 * k.hbar));
        let lambda = ct_r.scale(k.rest_momentum() / k.hbar);
        let b = boost([ch, S::from_re(0.0), sh, S::from_re(0.0)]);
        Ok((sigma, b, lambda))
    }
}

/// Expression-defined state: the factorized form
/// Ψ = √ρ·e^{iβ/2}·B(u)·R(θ)·exp(−iεtσ₃/ħ) with every factor given as an
/// expression over (t, x, y, z) and named parameters.
#[derive(Debug, Clone)]
pub struct StateParametrization {
    /// Probability-density modulation ρ ≥ 0.
    pub rho: Expr,
    /// Spatial proper-velocity components u¹, u², u³ (dimensionless);
    /// u⁰ = √(1+|u|²) is derived.
    pub u: [Expr; 3],
    /// Rotation vector θ^k (radians); the σ₃-phase of the named builders
    /// corresponds to θ = (0, 0, 2Λ/ħ).
    pub theta: [Expr; 3],
    /// Yvon–Takabayashi angle β (radians).
    pub beta: Expr,
    /// Energy ε (J) of the global phase exp(−iεtσ₃/ħ).
    pub epsilon: f64,
    pub params: HashMap<String, f64>,
}

impl ParametrizedState for StateParametrization {
    fn eval_factored<S: Scalar>(
        &self,
        vars: [S; 4],
        k: &PhysicalConstants,
    ) -> Result<(S, ApsElement<S>, S)> {
        let ctx = EvalContext { vars, params: &self.params, constants: k };
        let rho = self.rho.eval(&ctx)?;
        // √ρ enters as the log-amplitude ½ln ρ, so ρ must be positive
        let sigma = checked::ln(&rho)?.scale(0.5);
        let beta = self.beta.eval(&ctx)?;
        let u1 = self.u[0].eval(&ctx)?;
        let u2 = self.u[1].eval(&ctx)?;
        let u3 = self.u[2].eval(&ctx)?;
        let u0 = (S::from_re(1.0) + u1 * u1 + u2 * u2 + u3 * u3).sqrt();
        let i = S::from_complex(Complex64::new(0.0, 1.0));
        let amp = (i * beta.scale(0.5)).exp();
        let b = boost([u0, u1, u2, u3]);
        let mut lambda = vars[0].scale(self.epsilon / k.hbar);
        // A rotation about the z axis is itself an axial phase; folding it
        // into λ keeps large trajectory phases out of the jet exponentials.
        let axial_only = matches!(self.theta[0], Expr::Number(v) if v == 0.0)
            && matches!(self.theta[1], Expr::Number(v) if v == 0.0);
        let phi = if axial_only {
            lambda = lambda + self.theta[2].eval(&ctx)?.scale(0.5);
            b.scalar_mul(amp)
        } else {
            let th = [
                self.theta[0].eval(&ctx)?,
                self.theta[1].eval(&ctx)?,
                self.theta[2].eval(&ctx)?,
            ];
            (b * rotor(th)).scalar_mul(amp)
        };
        Ok((sigma, phi, lambda))
    }
}

/// Recovers (ρ, β) from an assembled state: det Ψ = ρe^{iβ} because the
/// boost and rotor factors are unimodular.
pub fn extract_beta_rho(psi: &ApsElement<Complex64>) -> (f64, f64) {
    let (rho, beta) = density_and_beta(psi);
    (beta, rho)
}
