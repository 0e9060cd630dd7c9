//! Forward-mode differentiation over the four spacetime coordinates.
//!
//! A [`Jet`] carries a complex value together with its first and second
//! partial derivatives with respect to (ct, x, y, z).  The time slot is
//! ∂/∂(ct), so the four-gradient matches the paravector gradient convention
//! used by the inversion engine.  [`Jet3`] extends this to third order; the
//! engine evaluates states on `Jet3` so that the inverted potential is itself
//! a `Jet` (its Hessian supplies the Maxwell source current).
//!
//! All arithmetic implements the exact chain/Leibniz rules; finite
//! differences appear only in tests as an independent oracle.

use num_complex::Complex64;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{CoreError, Result};

/// Number of differentiation directions: (ct, x, y, z).
pub const DIRS: usize = 4;

/// Common interface of plain complex numbers and derivative-carrying jets.
///
/// State builders and the expression evaluator are generic over this trait,
/// so one formula serves value-only evaluation ([`Complex64`]), second-order
/// differentiation ([`Jet`]) and the engine's third-order pass ([`Jet3`]).
pub trait Scalar:
    Copy
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Embeds a constant (all derivatives zero).
    fn from_complex(z: Complex64) -> Self;

    /// Embeds a real constant.
    fn from_re(x: f64) -> Self {
        Self::from_complex(Complex64::new(x, 0.0))
    }

    /// The value part.
    fn value(&self) -> Complex64;

    /// Complex conjugation.  The coordinates are real, so conjugation
    /// commutes with differentiation and acts component-wise.
    fn conj(&self) -> Self;

    /// Chain rule through a univariate analytic function whose derivatives
    /// at `self.value()` are `d = [f, f', f'', f''']`.
    fn compose(&self, d: [Complex64; 4]) -> Self;

    /// Multiplies by a real constant.
    fn scale(&self, k: f64) -> Self;

    fn exp(&self) -> Self {
        let f = self.value().exp();
        self.compose([f, f, f, f])
    }

    fn ln(&self) -> Self {
        let v = self.value();
        let i1 = v.inv();
        let i2 = i1 * i1;
        self.compose([v.ln(), i1, -i2, 2.0 * i2 * i1])
    }

    fn sqrt(&self) -> Self {
        let v = self.value();
        let s = v.sqrt();
        let i1 = (2.0 * s).inv();
        let iv = v.inv();
        self.compose([s, i1, -0.5 * i1 * iv, 0.75 * i1 * iv * iv])
    }

    fn sin(&self) -> Self {
        let v = self.value();
        let (s, c) = (v.sin(), v.cos());
        self.compose([s, c, -s, -c])
    }

    fn cos(&self) -> Self {
        let v = self.value();
        let (s, c) = (v.sin(), v.cos());
        self.compose([c, -s, -c, s])
    }

    fn asin(&self) -> Self {
        let v = self.value();
        let one = Complex64::new(1.0, 0.0);
        let w = one - v * v;
        let r = w.sqrt().inv(); // (1-v^2)^{-1/2}
        let r3 = r * r * r;
        let r5 = r3 * r * r;
        self.compose([v.asin(), r, v * r3, (one + 2.0 * v * v) * r5])
    }

    fn atan(&self) -> Self {
        let v = self.value();
        let one = Complex64::new(1.0, 0.0);
        let w = (one + v * v).inv();
        let w2 = w * w;
        self.compose([v.atan(), w, -2.0 * v * w2, (6.0 * v * v - 2.0) * w2 * w])
    }

    fn asinh(&self) -> Self {
        let v = self.value();
        let one = Complex64::new(1.0, 0.0);
        let w = one + v * v;
        let r = w.sqrt().inv(); // (1+v^2)^{-1/2}
        let r3 = r * r * r;
        let r5 = r3 * r * r;
        self.compose([v.asinh(), r, -v * r3, (2.0 * v * v - one) * r5])
    }

    /// Real power x^p through the analytic branch at the current value.
    fn powf(&self, p: f64) -> Self {
        let v = self.value();
        let f = v.powf(p);
        let d1 = p * v.powf(p - 1.0);
        let d2 = p * (p - 1.0) * v.powf(p - 2.0);
        let d3 = p * (p - 1.0) * (p - 2.0) * v.powf(p - 3.0);
        self.compose([f, d1, d2, d3])
    }

    /// Integer power by repeated multiplication (exact at negative bases).
    fn powi(&self, n: i32) -> Self {
        if n == 0 {
            return Self::from_re(1.0);
        }
        let mut base = if n < 0 {
            Self::from_re(1.0) / *self
        } else {
            *self
        };
        let mut k = n.unsigned_abs();
        let mut acc: Option<Self> = None;
        while k > 0 {
            if k & 1 == 1 {
                acc = Some(match acc {
                    None => base,
                    Some(a) => a * base,
                });
            }
            k >>= 1;
            if k > 0 {
                base = base * base;
            }
        }
        acc.unwrap()
    }
}

impl Scalar for Complex64 {
    fn from_complex(z: Complex64) -> Self {
        z
    }
    fn value(&self) -> Complex64 {
        *self
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn compose(&self, d: [Complex64; 4]) -> Self {
        d[0]
    }
    fn scale(&self, k: f64) -> Self {
        self * k
    }
}

/// A complex value with first and second partials over (ct, x, y, z).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet {
    /// Value.
    pub val: Complex64,
    /// Gradient: `grad[0]` is ∂/∂(ct).
    pub grad: [Complex64; DIRS],
    /// Symmetric Hessian.
    pub hess: [[Complex64; DIRS]; DIRS],
}

const C_ZERO: Complex64 = Complex64::new(0.0, 0.0);

impl Jet {
    /// A constant jet (derivatives zero).
    pub fn constant(z: Complex64) -> Self {
        Self {
            val: z,
            grad: [C_ZERO; DIRS],
            hess: [[C_ZERO; DIRS]; DIRS],
        }
    }

    /// Coordinate jet: value `v`, unit first derivative in direction `dir`.
    pub fn coordinate(v: f64, dir: usize) -> Self {
        let mut j = Self::constant(Complex64::new(v, 0.0));
        j.grad[dir] = Complex64::new(1.0, 0.0);
        j
    }

    /// Seeds the four coordinate jets at a spacetime point given in SI
    /// (t in seconds).  The time coordinate is seeded as ct, so derivative
    /// slot 0 is (1/c)∂ₜ.
    pub fn seed(t: f64, x: f64, y: f64, z: f64, c: f64) -> [Jet; DIRS] {
        [
            Jet::coordinate(c * t, 0),
            Jet::coordinate(x, 1),
            Jet::coordinate(y, 2),
            Jet::coordinate(z, 3),
        ]
    }

    /// ∂ₜ of this jet's value (SI seconds), i.e. c·∂/∂(ct).
    pub fn dt(&self, c: f64) -> Complex64 {
        self.grad[0] * c
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, o: Jet) -> Jet {
        let mut r = self;
        r.val += o.val;
        for i in 0..DIRS {
            r.grad[i] += o.grad[i];
            for j in 0..DIRS {
                r.hess[i][j] += o.hess[i][j];
            }
        }
        r
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, o: Jet) -> Jet {
        self + (-o)
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        let mut r = self;
        r.val = -r.val;
        for i in 0..DIRS {
            r.grad[i] = -r.grad[i];
            for j in 0..DIRS {
                r.hess[i][j] = -r.hess[i][j];
            }
        }
        r
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, o: Jet) -> Jet {
        let mut r = Jet::constant(self.val * o.val);
        for i in 0..DIRS {
            r.grad[i] = self.grad[i] * o.val + self.val * o.grad[i];
        }
        for i in 0..DIRS {
            for j in 0..DIRS {
                r.hess[i][j] = self.hess[i][j] * o.val
                    + self.grad[i] * o.grad[j]
                    + self.grad[j] * o.grad[i]
                    + self.val * o.hess[i][j];
            }
        }
        r
    }
}

impl Div for Jet {
    type Output = Jet;
    fn div(self, o: Jet) -> Jet {
        let v = o.val;
        let i1 = v.inv();
        let i2 = i1 * i1;
        self * o.compose([i1, -i2, 2.0 * i2 * i1, C_ZERO])
    }
}

impl Scalar for Jet {
    fn from_complex(z: Complex64) -> Self {
        Jet::constant(z)
    }
    fn value(&self) -> Complex64 {
        self.val
    }
    fn conj(&self) -> Self {
        let mut r = *self;
        r.val = r.val.conj();
        for i in 0..DIRS {
            r.grad[i] = r.grad[i].conj();
            for j in 0..DIRS {
                r.hess[i][j] = r.hess[i][j].conj();
            }
        }
        r
    }
    fn compose(&self, d: [Complex64; 4]) -> Self {
        let mut r = Jet::constant(d[0]);
        for i in 0..DIRS {
            r.grad[i] = d[1] * self.grad[i];
        }
        for i in 0..DIRS {
            for j in 0..DIRS {
                r.hess[i][j] = d[2] * self.grad[i] * self.grad[j] + d[1] * self.hess[i][j];
            }
        }
        r
    }
    fn scale(&self, k: f64) -> Self {
        let mut r = *self;
        r.val *= k;
        for i in 0..DIRS {
            r.grad[i] *= k;
            for j in 0..DIRS {
                r.hess[i][j] *= k;
            }
        }
        r
    }
}

/// Third-order extension of [`Jet`].
///
/// Only the inversion engine uses this: evaluating a state on `Jet3`
/// coordinates yields a potential whose own value/gradient/Hessian are all
/// exact, which is what the field-strength and current derivations consume.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet3 {
    pub val: Complex64,
    pub grad: [Complex64; DIRS],
    pub hess: [[Complex64; DIRS]; DIRS],
    /// Symmetric third-derivative tensor.
    pub third: [[[Complex64; DIRS]; DIRS]; DIRS],
}

impl Jet3 {
    pub fn constant(z: Complex64) -> Self {
        Self {
            val: z,
            grad: [C_ZERO; DIRS],
            hess: [[C_ZERO; DIRS]; DIRS],
            third: [[[C_ZERO; DIRS]; DIRS]; DIRS],
        }
    }

    pub fn coordinate(v: f64, dir: usize) -> Self {
        let mut j = Self::constant(Complex64::new(v, 0.0));
        j.grad[dir] = Complex64::new(1.0, 0.0);
        j
    }

    /// Seeds the four coordinate jets (time slot as ct); see [`Jet::seed`].
    pub fn seed(t: f64, x: f64, y: f64, z: f64, c: f64) -> [Jet3; DIRS] {
        [
            Jet3::coordinate(c * t, 0),
            Jet3::coordinate(x, 1),
            Jet3::coordinate(y, 2),
            Jet3::coordinate(z, 3),
        ]
    }

    /// Drops the third-order block.
    pub fn truncate(&self) -> Jet {
        Jet {
            val: self.val,
            grad: self.grad,
            hess: self.hess,
        }
    }

    /// The partial derivative in direction `mu` as a second-order jet:
    /// the returned jet's value is ∂_μf, its gradient is ∂_μ∇f, and its
    /// Hessian comes from the third-order block.
    pub fn partial(&self, mu: usize) -> Jet {
        Jet {
            val: self.grad[mu],
            grad: self.hess[mu],
            hess: self.third[mu],
        }
    }
}

impl Add for Jet3 {
    type Output = Jet3;
    fn add(self, o: Jet3) -> Jet3 {
        let mut r = self;
        r.val += o.val;
        for i in 0..DIRS {
            r.grad[i] += o.grad[i];
            for j in 0..DIRS {
                r.hess[i][j] += o.hess[i][j];
                for k in 0..DIRS {
                    r.third[i][j][k] += o.third[i][j][k];
                }
            }
        }
        r
    }
}

impl Sub for Jet3 {
    type Output = Jet3;
    fn sub(self, o: Jet3) -> Jet3 {
        self + (-o)
    }
}

impl Neg for Jet3 {
    type Output = Jet3;
    fn neg(self) -> Jet3 {
        let mut r = self;
        r.val = -r.val;
        for i in 0..DIRS {
            r.grad[i] = -r.grad[i];
            for j in 0..DIRS {
                r.hess[i][j] = -r.hess[i][j];
                for k in 0..DIRS {
                    r.third[i][j][k] = -r.third[i][j][k];
                }
            }
        }
        r
    }
}

impl Mul for Jet3 {
    type Output = Jet3;
    fn mul(self, o: Jet3) -> Jet3 {
        let a = &self;
        let b = &o;
        let mut r = Jet3::constant(a.val * b.val);
        for i in 0..DIRS {
            r.grad[i] = a.grad[i] * b.val + a.val * b.grad[i];
        }
        for i in 0..DIRS {
            for j in 0..DIRS {
                r.hess[i][j] = a.hess[i][j] * b.val
                    + a.grad[i] * b.grad[j]
                    + a.grad[j] * b.grad[i]
                    + a.val * b.hess[i][j];
            }
        }
        for i in 0..DIRS {
            for j in 0..DIRS {
                for k in 0..DIRS {
                    r.third[i][j][k] = a.third[i][j][k] * b.val
                        + a.hess[i][j] * b.grad[k]
                        + a.hess[i][k] * b.grad[j]
                        + a.hess[j][k] * b.grad[i]
                        + a.grad[i] * b.hess[j][k]
                        + a.grad[j] * b.hess[i][k]
                        + a.grad[k] * b.hess[i][j]
                        + a.val * b.third[i][j][k];
                }
            }
        }
        r
    }
}

impl Div for Jet3 {
    type Output = Jet3;
    fn div(self, o: Jet3) -> Jet3 {
        let v = o.val;
        let i1 = v.inv();
        let i2 = i1 * i1;
        let i3 = i2 * i1;
        self * o.compose([i1, -i2, 2.0 * i3, -6.0 * i3 * i1])
    }
}

impl Scalar for Jet3 {
    fn from_complex(z: Complex64) -> Self {
        Jet3::constant(z)
    }
    fn value(&self) -> Complex64 {
        self.val
    }
    fn conj(&self) -> Self {
        let mut r = *self;
        r.val = r.val.conj();
        for i in 0..DIRS {
            r.grad[i] = r.grad[i].conj();
            for j in 0..DIRS {
                r.hess[i][j] = r.hess[i][j].conj();
                for k in 0..DIRS {
                    r.third[i][j][k] = r.third[i][j][k].conj();
                }
            }
        }
        r
    }
    fn compose(&self, d: [Complex64; 4]) -> Self {
        let g = &self.grad;
        let h = &self.hess;
        let mut r = Jet3::constant(d[0]);
        for i in 0..DIRS {
            r.grad[i] = d[1] * g[i];
        }
        for i in 0..DIRS {
            for j in 0..DIRS {
                r.hess[i][j] = d[2] * g[i] * g[j] + d[1] * h[i][j];
            }
        }
        for i in 0..DIRS {
            for j in 0..DIRS {
                for k in 0..DIRS {
                    r.third[i][j][k] = d[3] * g[i] * g[j] * g[k]
                        + d[2] * (h[i][j] * g[k] + h[i][k] * g[j] + h[j][k] * g[i])
                        + d[1] * self.third[i][j][k];
                }
            }
        }
        r
    }
    fn scale(&self, k: f64) -> Self {
        let mut r = *self;
        r.val *= k;
        for i in 0..DIRS {
            r.grad[i] *= k;
            for j in 0..DIRS {
                r.hess[i][j] *= k;
                for kk in 0..DIRS {
                    r.third[i][j][kk] *= k;
                }
            }
        }
        r
    }
}

/// Relative tolerance for treating a complex value as real in domain checks.
const REAL_EPS: f64 = 1e-12;

fn essentially_real(z: Complex64) -> Option<f64> {
    if z.im.abs() <= REAL_EPS * (1.0 + z.re.abs()) {
        Some(z.re)
    } else {
        None
    }
}

/// Elementary functions with real-domain validation.
///
/// The unchecked trait methods continue analytically into the complex plane;
/// these wrappers reject arguments that are real but outside the function's
/// real domain (the signal that a parametrization left its admissible range,
/// e.g. a profile slope exceeding one under `arcsin`).
pub mod checked {
    use super::*;

    pub fn asin<S: Scalar>(x: &S) -> Result<S> {
        if let Some(r) = essentially_real(x.value()) {
            if r.abs() > 1.0 {
                return Err(CoreError::Domain { func: "arcsin", value: r });
            }
        }
        Ok(x.asin())
    }

    pub fn sqrt<S: Scalar>(x: &S) -> Result<S> {
        if let Some(r) = essentially_real(x.value()) {
            if r < 0.0 {
                return Err(CoreError::Domain { func: "sqrt", value: r });
            }
        }
        Ok(x.sqrt())
    }

    pub fn ln<S: Scalar>(x: &S) -> Result<S> {
        if let Some(r) = essentially_real(x.value()) {
            if r <= 0.0 {
                return Err(CoreError::Domain { func: "log", value: r });
            }
        }
        Ok(x.ln())
    }
}
