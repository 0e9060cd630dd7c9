//! Turns a [`ScenarioConfig`] into an evaluatable state plus the pipeline
//! and scenario-level checks that apply to it.

use rdi_core::catalog::{
    resonant_frequency, RotationScenarioParams, TranslationScenarioParams,
};
use rdi_core::dsl;
use rdi_core::states::{
    AcceleratedBoostState, BoostedLandauState, ConfinedState, NonlinearState, Profile,
    RestState, RotatingConfinedState, RotationState, ScalarState, SpinorField,
    StateParametrization, Trajectory, TranslationState,
};
use rdi_core::{CoreError, PhysicalConstants};

use crate::config::ScenarioConfig;

/// Which inversion runs per grid point.
pub enum Pipeline {
    /// Four-potential inversion with the Hermiticity gate.
    Electromagnetic,
    /// Scalar-interaction inversion V(z).
    Scalar { kappa: f64, density_norm: f64 },
}

/// The radiative-loss estimate applicable to the scenario, if any.
pub enum PhysicalityCheck {
    Rotation(RotationScenarioParams),
    Translation(TranslationScenarioParams, f64),
    None,
}

pub struct BuiltScenario {
    pub name: &'static str,
    pub field: Box<dyn SpinorField>,
    pub pipeline: Pipeline,
    pub physicality: PhysicalityCheck,
}

/// Validates parameters and constructs the state.  All preconditions are
/// checked here, before any grid evaluation starts.
pub fn build(cfg: &ScenarioConfig, k: &PhysicalConstants) -> Result<BuiltScenario, CoreError> {
    let name = cfg.kind_name();
    let em = |field: Box<dyn SpinorField>, phys| BuiltScenario {
        name,
        field,
        pipeline: Pipeline::Electromagnetic,
        physicality: phys,
    };
    match cfg {
        ScenarioConfig::Rest => Ok(em(Box::new(RestState), PhysicalityCheck::None)),
        ScenarioConfig::Rotation { b0, r0, omega } => {
            let omega = omega.unwrap_or_else(|| resonant_frequency(*b0, k));
            let state = RotationState::new(*r0, omega, *b0, k)?;
            let params = RotationScenarioParams { r0: *r0, omega, b0: *b0 };
            Ok(em(Box::new(state), PhysicalityCheck::Rotation(params)))
        }
        ScenarioConfig::Translation { b0, l, t_period, broken } => {
            let traj = Trajectory::Sinusoid { l: *l, t_period: *t_period };
            let state = if *broken {
                TranslationState::broken(traj.clone(), *b0, k)?
            } else {
                TranslationState::new(traj.clone(), *b0, k)?
            };
            let params = TranslationScenarioParams { trajectory: traj, b0: *b0 };
            Ok(em(
                Box::new(state),
                PhysicalityCheck::Translation(params, *t_period),
            ))
        }
        ScenarioConfig::Confined { b0, xi, epsilon } => {
            check_width("confined", *xi)?;
            let state = ConfinedState::new(Profile::SoftCore { xi: *xi }, *b0, *epsilon);
            Ok(em(Box::new(state), PhysicalityCheck::None))
        }
        ScenarioConfig::RotatingConfined { b0, r0, omega, xi } => {
            check_width("rotating-confined", *xi)?;
            let omega = omega.unwrap_or_else(|| resonant_frequency(*b0, k));
            let rotation = RotationState::new(*r0, omega, *b0, k)?;
            let state = RotatingConfinedState {
                rotation,
                profile: Profile::SoftCore { xi: *xi },
            };
            let params = RotationScenarioParams { r0: *r0, omega, b0: *b0 };
            Ok(em(Box::new(state), PhysicalityCheck::Rotation(params)))
        }
        ScenarioConfig::Scalar { xi, epsilon } => {
            let state = ScalarState::new(*xi, *epsilon)?;
            Ok(BuiltScenario {
                name,
                field: Box::new(state),
                pipeline: Pipeline::Scalar { kappa: 0.0, density_norm: 0.0 },
                physicality: PhysicalityCheck::None,
            })
        }
        ScenarioConfig::Nonlinear { xi, kappa } => {
            let state = NonlinearState::new(*xi)?;
            let density_norm = state.density_norm(k);
            Ok(BuiltScenario {
                name,
                field: Box::new(state),
                pipeline: Pipeline::Scalar { kappa: *kappa, density_norm },
                physicality: PhysicalityCheck::None,
            })
        }
        ScenarioConfig::BoostedLandau { u2, b0 } => {
            if !u2.is_finite() || !b0.is_finite() {
                return Err(CoreError::InvalidParameter(
                    "boosted-landau parameters must be finite".into(),
                ));
            }
            let state = BoostedLandauState { u2: *u2, b0: *b0 };
            Ok(em(Box::new(state), PhysicalityCheck::None))
        }
        ScenarioConfig::AcceleratedBoost { e0, b0 } => {
            if !e0.is_finite() || !b0.is_finite() {
                return Err(CoreError::InvalidParameter(
                    "accelerated-boost parameters must be finite".into(),
                ));
            }
            let state = AcceleratedBoostState { e0: *e0, b0: *b0 };
            Ok(em(Box::new(state), PhysicalityCheck::None))
        }
        ScenarioConfig::Custom { rho, u, theta, beta, epsilon, params } => {
            let state = StateParametrization {
                rho: dsl::parse(rho)?,
                u: [dsl::parse(&u[0])?, dsl::parse(&u[1])?, dsl::parse(&u[2])?],
                theta: [
                    dsl::parse(&theta[0])?,
                    dsl::parse(&theta[1])?,
                    dsl::parse(&theta[2])?,
                ],
                beta: dsl::parse(beta)?,
                epsilon: *epsilon,
                params: params.clone(),
            };
            Ok(em(Box::new(state), PhysicalityCheck::None))
        }
    }
}

fn check_width(kind: &str, xi: f64) -> Result<(), CoreError> {
    if !(xi.is_finite() && xi > 0.0) {
        return Err(CoreError::InvalidParameter(format!(
            "{kind}: width xi must be positive, got {xi}"
        )));
    }
    Ok(())
}
