//! The algebra of physical space: 2×2 complex matrices as paravectors.
//!
//! A four-vector a^μ is represented by the matrix a^μσ_μ (σ₀ = 𝟙); its
//! components are recovered as a_μ = Tr(Mσ_μ)/2.  Clifford conjugation is
//! the matrix adjugate, so M̄M = det(M)𝟙 and inverses are cheap.  Dirac
//! spinors map to elements of this algebra column-wise; Lorentz boosts and
//! rotations act by left multiplication.
//!
//! Everything is generic over [`Scalar`] so the same expressions evaluate
//! values ([`Complex64`] entries) or carry derivatives (jet entries).

use num_complex::Complex64;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{CoreError, Result};
use crate::jets::Scalar;

/// Relative singularity threshold: Ψ is treated as non-invertible when
/// |det Ψ| < threshold · ‖Ψ‖²_F.
pub const SINGULARITY_THRESHOLD: f64 = 1e-12;

/// A 2×2 matrix over a scalar type; the workhorse of the whole library.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApsElement<S> {
    /// Row-major entries.
    pub e: [[S; 2]; 2],
}

impl<S: Scalar> ApsElement<S> {
    pub fn new(e00: S, e01: S, e10: S, e11: S) -> Self {
        Self { e: [[e00, e01], [e10, e11]] }
    }

    pub fn zero() -> Self {
        let z = S::from_re(0.0);
        Self::new(z, z, z, z)
    }

    pub fn identity() -> Self {
        let z = S::from_re(0.0);
        let o = S::from_re(1.0);
        Self::new(o, z, z, o)
    }

    /// The basis paravector σ_μ for μ ∈ 0..4.
    pub fn sigma(mu: usize) -> Self {
        let z = S::from_re(0.0);
        let o = S::from_re(1.0);
        let i = S::from_complex(Complex64::new(0.0, 1.0));
        match mu {
            0 => Self::identity(),
            1 => Self::new(z, o, o, z),
            2 => Self::new(z, -i, i, z),
            3 => Self::new(o, z, z, -o),
            _ => panic!("sigma index out of range: {mu}"),
        }
    }

    /// Builds a^μσ_μ from paravector components.
    pub fn from_components(a: [S; 4]) -> Self {
        let i = S::from_complex(Complex64::new(0.0, 1.0));
        Self::new(
            a[0] + a[3],
            a[1] - i * a[2],
            a[1] + i * a[2],
            a[0] - a[3],
        )
    }

    /// The component a_μ = Tr(Mσ_μ)/2.
    pub fn component(&self, mu: usize) -> S {
        let h = S::from_re(0.5);
        let e = &self.e;
        let i = S::from_complex(Complex64::new(0.0, 1.0));
        match mu {
            0 => (e[0][0] + e[1][1]) * h,
            1 => (e[0][1] + e[1][0]) * h,
            2 => i * (e[0][1] - e[1][0]) * h,
            3 => (e[0][0] - e[1][1]) * h,
            _ => panic!("sigma index out of range: {mu}"),
        }
    }

    /// All four components at once.
    pub fn components(&self) -> [S; 4] {
        [
            self.component(0),
            self.component(1),
            self.component(2),
            self.component(3),
        ]
    }

    /// Clifford conjugation: the matrix adjugate, reversing the sign of the
    /// spatial part (ā = a⁰σ₀ − a^kσ_k).
    pub fn bar(&self) -> Self {
        let e = &self.e;
        Self::new(e[1][1], -e[0][1], -e[1][0], e[0][0])
    }

    /// Hermitian conjugate (entry-wise conjugation + transpose).
    pub fn dagger(&self) -> Self {
        let e = &self.e;
        Self::new(e[0][0].conj(), e[1][0].conj(), e[0][1].conj(), e[1][1].conj())
    }

    /// Determinant; for a paravector this is the Lorentz norm a_μa^μ.
    pub fn det(&self) -> S {
        let e = &self.e;
        e[0][0] * e[1][1] - e[0][1] * e[1][0]
    }

    /// Trace.
    pub fn trace(&self) -> S {
        self.e[0][0] + self.e[1][1]
    }

    /// Unchecked inverse M⁻¹ = M̄ / det M.
    pub fn inverse(&self) -> Self {
        let d = self.det();
        let b = self.bar();
        Self::new(b.e[0][0] / d, b.e[0][1] / d, b.e[1][0] / d, b.e[1][1] / d)
    }

    /// Inverse with the scale-relative singularity check.
    pub fn try_inverse(&self) -> Result<Self> {
        let det_mag = self.det().value().norm();
        let threshold = SINGULARITY_THRESHOLD * self.frobenius_norm_sq();
        // the comparison alone misses the fully degenerate 0 < 0 case
        if det_mag < threshold || !(det_mag > 0.0) || !threshold.is_finite() {
            return Err(CoreError::SingularState { det_mag, threshold });
        }
        Ok(self.inverse())
    }

    /// Scales every entry by a real constant.
    pub fn scale(&self, k: f64) -> Self {
        let e = &self.e;
        Self::new(
            e[0][0].scale(k),
            e[0][1].scale(k),
            e[1][0].scale(k),
            e[1][1].scale(k),
        )
    }

    /// Multiplies every entry by a scalar.
    pub fn scalar_mul(&self, s: S) -> Self {
        let e = &self.e;
        Self::new(e[0][0] * s, e[0][1] * s, e[1][0] * s, e[1][1] * s)
    }

    /// Squared Frobenius norm of the value part.
    pub fn frobenius_norm_sq(&self) -> f64 {
        self.e
            .iter()
            .flatten()
            .map(|x| x.value().norm_sqr())
            .sum()
    }

    /// Frobenius norm of the value part.
    pub fn frobenius_norm(&self) -> f64 {
        self.frobenius_norm_sq().sqrt()
    }

    /// Hermitian part (M + M†)/2.
    pub fn hermitian_part(&self) -> Self {
        (*self + self.dagger()).scale(0.5)
    }

    /// Anti-Hermitian part (M − M†)/2.
    pub fn anti_hermitian_part(&self) -> Self {
        (*self - self.dagger()).scale(0.5)
    }

    /// ‖M − M†‖_F / 2, the absolute deviation from Hermiticity.
    pub fn hermiticity_deviation(&self) -> f64 {
        self.anti_hermitian_part().frobenius_norm()
    }
}

impl<S: Scalar> Add for ApsElement<S> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(
            self.e[0][0] + o.e[0][0],
            self.e[0][1] + o.e[0][1],
            self.e[1][0] + o.e[1][0],
            self.e[1][1] + o.e[1][1],
        )
    }
}

impl<S: Scalar> Sub for ApsElement<S> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<S: Scalar> Neg for ApsElement<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.e[0][0], -self.e[0][1], -self.e[1][0], -self.e[1][1])
    }
}

impl<S: Scalar> Mul for ApsElement<S> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let a = &self.e;
        let b = &o.e;
        Self::new(
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        )
    }
}

/// A Dirac 4-spinor as a complex column, in the standard (Dirac) basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ColumnSpinor(pub [Complex64; 4]);

/// Maps a column Dirac spinor to its matrix representative.
///
/// Columns carry the two "minimal left ideal" combinations:
/// first column (ψ₁+ψ₃, ψ₂+ψ₄)ᵀ, second column (−ψ₂*+ψ₄*, ψ₁*−ψ₃*)ᵀ.
pub fn spinor_to_matrix(psi: &ColumnSpinor) -> ApsElement<Complex64> {
    let p = &psi.0;
    ApsElement::new(
        p[0] + p[2],
        -p[1].conj() + p[3].conj(),
        p[1] + p[3],
        p[0].conj() - p[2].conj(),
    )
}

/// Inverse of [`spinor_to_matrix`].
pub fn matrix_to_spinor(m: &ApsElement<Complex64>) -> ColumnSpinor {
    let e = &m.e;
    // From the linear map: 2ψ₁ = e00 + e11*, 2ψ₂ = e10 − e01*,
    // 2ψ₃ = e00 − e11*, 2ψ₄ = e10 + e01*.
    ColumnSpinor([
        0.5 * (e[0][0] + e[1][1].conj()),
        0.5 * (e[1][0] - e[0][1].conj()),
        0.5 * (e[0][0] - e[1][1].conj()),
        0.5 * (e[1][0] + e[0][1].conj()),
    ])
}

/// The boost taking the rest frame to proper velocity u^μ (u_μu^μ = 1):
/// B(u) = (u^μσ_μ + 𝟙)/√(2(1+u⁰)).  Unimodular and Hermitian.
pub fn boost<S: Scalar>(u: [S; 4]) -> ApsElement<S> {
    let m = ApsElement::from_components(u) + ApsElement::identity();
    let norm = ((u[0] + S::from_re(1.0)).scale(2.0)).sqrt();
    m.scalar_mul(S::from_re(1.0) / norm)
}

/// Rotation about the z axis through a (possibly spacetime-dependent) phase:
/// exp(−iλσ₃) = diag(e^{−iλ}, e^{iλ}).
pub fn axial_phase<S: Scalar>(lambda: S) -> ApsElement<S> {
    let i = S::from_complex(Complex64::new(0.0, 1.0));
    let z = S::from_re(0.0);
    ApsElement::new((-(i * lambda)).exp(), z, z, (i * lambda).exp())
}

/// General rotor exp(−iθ·σ/2) for a rotation vector θ^k.
///
/// Written in terms of the entire functions cos(√q/2) and sin(√q/2)/√q of
/// q = |θ|², so it is smooth through θ = 0 (series branch for small q).
pub fn rotor<S: Scalar>(theta: [S; 3]) -> ApsElement<S> {
    let q = theta[0] * theta[0] + theta[1] * theta[1] + theta[2] * theta[2];
    let (c0, s1) = if q.value().norm() < 1.0 {
        // cos(√q/2) = Σ (−q/4)ⁿ/(2n)!,  sin(√q/2)/√q = ½ Σ (−q/4)ⁿ/(2n+1)!
        let x = -q.scale(0.25);
        let mut c = S::from_re(0.0);
        let mut s = S::from_re(0.0);
        for n in (0..=12).rev() {
            let fact_2n: f64 = (1..=2 * n).map(|k| k as f64).product();
            c = c * x + S::from_re(1.0 / fact_2n);
            s = s * x + S::from_re(1.0 / (fact_2n * (2 * n + 1) as f64));
        }
        (c, s.scale(0.5))
    } else {
        let r = q.sqrt();
        let h = r.scale(0.5);
        (h.cos(), h.sin() / r)
    };
    let i = S::from_complex(Complex64::new(0.0, 1.0));
    let spin = ApsElement::from_components([S::from_re(0.0), theta[0], theta[1], theta[2]]);
    ApsElement::identity().scalar_mul(c0) - spin.scalar_mul(i * s1)
}

/// Proper velocity of a circular orbit of radius `r0` at angular velocity
/// `omega` in the xy-plane, evaluated from the lab time jet `t` (seconds).
/// Returns `[u0, u1, u2, u3]` with u³ = 0.
pub fn circular_proper_velocity<S: Scalar>(t: S, r0: f64, omega: f64, c: f64) -> Result<[S; 4]> {
    let speed = r0 * omega.abs();
    if speed >= c {
        return Err(CoreError::InvalidParameter(format!(
            "orbital speed r0|omega| = {speed:.6e} m/s is not below c"
        )));
    }
    let gamma = 1.0 / (1.0 - (speed / c).powi(2)).sqrt();
    let phase = t.scale(omega);
    // velocity is tangent to the orbit: v = r0 ω (−sin ωt, cos ωt)
    let u1 = (-phase.sin()).scale(gamma * speed / c);
    let u2 = phase.cos().scale(gamma * speed / c);
    Ok([S::from_re(gamma), u1, u2, S::from_re(0.0)])
}

/// Polar decomposition data of a nonsingular state: density ρ = |det Ψ| and
/// chiral phase β = arg det Ψ.
pub fn density_and_beta(psi: &ApsElement<Complex64>) -> (f64, f64) {
    let d = psi.det();
    (d.norm(), d.arg())
}
