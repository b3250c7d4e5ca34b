//! Coin operators and initial spin states.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// The three angles (radians) of the U(2) coin
/// `[[e^{iξ}cosθ, e^{iζ}sinθ], [e^{−iζ}sinθ, −e^{−iξ}cosθ]]`.
///
/// θ controls the balance between the two propagation directions and is the
/// knob that tunes spread, recurrence, and mixing; ξ and ζ add relative
/// phases.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoinParams {
    pub xi: f64,
    pub theta: f64,
    pub zeta: f64,
}

impl CoinParams {
    pub fn new(xi: f64, theta: f64, zeta: f64) -> Self {
        Self { xi, theta, zeta }
    }

    pub fn from_degrees(xi: f64, theta: f64, zeta: f64) -> Self {
        Self::new(xi.to_radians(), theta.to_radians(), zeta.to_radians())
    }

    /// The balanced coin `(0, π/4, 0)`, i.e. the Hadamard matrix.
    pub fn hadamard() -> Self {
        Self::new(0.0, FRAC_PI_4, 0.0)
    }

    /// Angles folded into the canonical range `[0, 2π)`.
    pub fn normalized(self) -> Self {
        let wrap = |a: f64| a.rem_euclid(TAU);
        Self::new(wrap(self.xi), wrap(self.theta), wrap(self.zeta))
    }

    pub fn is_finite(&self) -> bool {
        self.xi.is_finite() && self.theta.is_finite() && self.zeta.is_finite()
    }
}

/// A realized 2×2 complex coin matrix, always unitary by construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoinMatrix {
    pub c00: Complex64,
    pub c01: Complex64,
    pub c10: Complex64,
    pub c11: Complex64,
}

impl CoinMatrix {
    /// Builds the coin matrix from its three angles.
    ///
    /// Fails with [`Error::NonFiniteAngle`] if any angle is NaN or infinite.
    pub fn new(params: CoinParams) -> Result<Self> {
        if !params.is_finite() {
            let bad = [params.xi, params.theta, params.zeta]
                .into_iter()
                .find(|a| !a.is_finite())
                .unwrap();
            return Err(Error::NonFiniteAngle(bad));
        }
        let (sin, cos) = params.theta.sin_cos();
        let phase_xi = Complex64::from_polar(1.0, params.xi);
        let phase_zeta = Complex64::from_polar(1.0, params.zeta);
        Ok(Self {
            c00: phase_xi * cos,
            c01: phase_zeta * sin,
            c10: phase_zeta.conj() * sin,
            c11: -phase_xi.conj() * cos,
        })
    }

    pub fn hadamard() -> Self {
        Self::new(CoinParams::hadamard()).expect("hadamard angles are finite")
    }

    /// The conjugate transpose, which inverts the coin.
    pub fn dagger(&self) -> Self {
        Self {
            c00: self.c00.conj(),
            c01: self.c10.conj(),
            c10: self.c01.conj(),
            c11: self.c11.conj(),
        }
    }

    pub fn determinant(&self) -> Complex64 {
        self.c00 * self.c11 - self.c01 * self.c10
    }

    /// Entrywise check of `C†C = 1` within `tol`.
    pub fn is_unitary(&self, tol: f64) -> bool {
        let d = self.dagger();
        let prod = [
            d.c00 * self.c00 + d.c01 * self.c10,
            d.c00 * self.c01 + d.c01 * self.c11,
            d.c10 * self.c00 + d.c11 * self.c10,
            d.c10 * self.c01 + d.c11 * self.c11,
        ];
        let id = [
            Complex64::ONE,
            Complex64::ZERO,
            Complex64::ZERO,
            Complex64::ONE,
        ];
        prod.iter().zip(id).all(|(p, i)| (p - i).norm() <= tol)
    }

    /// Applies the matrix to a spinor `(a0, a1)`.
    pub fn apply(&self, a0: Complex64, a1: Complex64) -> (Complex64, Complex64) {
        (self.c00 * a0 + self.c01 * a1, self.c10 * a0 + self.c11 * a1)
    }
}

/// Two angles (radians) selecting the initial coin state
/// `cos(δ)|0⟩ + e^{iη} sin(δ)|1⟩`, which has unit norm for any δ, η.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InitialSpin {
    pub delta: f64,
    pub eta: f64,
}

impl InitialSpin {
    pub fn new(delta: f64, eta: f64) -> Self {
        Self { delta, eta }
    }

    pub fn from_degrees(delta: f64, eta: f64) -> Self {
        Self::new(delta.to_radians(), eta.to_radians())
    }

    /// `(1/√2)(|0⟩ + i|1⟩)`: the spin that keeps a balanced-coin walk
    /// left-right symmetric.
    pub fn symmetric() -> Self {
        Self::new(FRAC_PI_4, FRAC_PI_2)
    }

    /// The spinor components `(cos δ, e^{iη} sin δ)`.
    pub fn spinor(&self) -> (Complex64, Complex64) {
        (
            Complex64::new(self.delta.cos(), 0.0),
            Complex64::from_polar(1.0, self.eta) * self.delta.sin(),
        )
    }
}
