//! Closed-form unitary evolution operators for the rotating-field problem.
//!
//! Every builder lists its rotation factors left to right exactly as they
//! act (rightmost first on the state), mapped through the single sign
//! convention of [`crate::su2`]: `R_j(a) = exp(-i sigma_j a / 2)`. The main
//! defect risk in this algebra is a per-factor sign slip, so the factor
//! lists are spelled out and pinned by the probability-equality tests in
//! [`crate::closed_forms`].
//!
//! Observation frames are labelled by the pair (alpha, beta) of z- and
//! y-rotations taking the laboratory frame into them: (0, 0) is the lab,
//! (-omega t, theta) co-rotates with the field, (-omega t, Theta)
//! diagonalizes the dynamics.

use crate::error::{Error, Result};
use crate::model::DerivedFrequencies;
use crate::su2::{Hermitian2, SpinLabel, Spinor, Unitary2};

/// The z-rotation angle of an observation frame: either a fixed angle or
/// the co-rotating angle -omega t.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ZAngle {
    Fixed(f64),
    CoRotating,
}

/// Label (alpha, beta) of an observation frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameLabel {
    alpha: ZAngle,
    beta: f64,
}

impl FrameLabel {
    /// beta must lie in [0, pi].
    pub fn new(alpha: ZAngle, beta: f64) -> Result<Self> {
        if !(0.0..=std::f64::consts::PI).contains(&beta) {
            return Err(Error::InvalidParams(format!(
                "frame tilt beta must lie in [0, pi], got {beta}"
            )));
        }
        Ok(Self { alpha, beta })
    }

    /// The laboratory frame (0, 0).
    pub fn laboratory() -> Self {
        Self {
            alpha: ZAngle::Fixed(0.0),
            beta: 0.0,
        }
    }

    /// The frame co-rotating with the field, (-omega t, theta).
    pub fn rotating_field(d: &DerivedFrequencies) -> Self {
        Self {
            alpha: ZAngle::CoRotating,
            beta: d.theta(),
        }
    }

    pub fn alpha(&self) -> ZAngle {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }
}

impl std::fmt::Display for FrameLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.alpha {
            ZAngle::Fixed(a) => write!(f, "({a}, {})", self.beta),
            ZAngle::CoRotating => write!(f, "(-omega t, {})", self.beta),
        }
    }
}

fn check_interval(t1: f64, t2: f64) -> Result<()> {
    if !(t1.is_finite() && t2.is_finite()) || t2 < t1 {
        return Err(Error::InvalidTimeInterval { t1, t2 });
    }
    Ok(())
}

fn check_tau(tau: f64) -> Result<()> {
    if !tau.is_finite() || tau < 0.0 {
        return Err(Error::InvalidTau(tau));
    }
    Ok(())
}

/// Exact laboratory-frame propagator from t1 to t2.
///
/// Factors, left to right:
/// `R_z(-omega t2) R_y(Theta) R_z(-Omega (t2-t1)) R_y(-Theta) R_z(omega t1)`.
///
/// The middle factor is the dynamical rotation in the diagonalizing frame;
/// the outer factors carry that frame back to the laboratory at each
/// endpoint. Satisfies the semigroup law
/// `lab(t1, t3) = lab(t2, t3) * lab(t1, t2)`.
pub fn lab_propagator(d: &DerivedFrequencies, t1: f64, t2: f64) -> Result<Unitary2> {
    check_interval(t1, t2)?;
    let tau = t2 - t1;
    let u = Unitary2::rot_z(-d.omega() * t2)?
        * Unitary2::rot_y(d.theta_cap())?
        * Unitary2::rot_z(-d.big_omega() * tau)?
        * Unitary2::rot_y(-d.theta_cap())?
        * Unitary2::rot_z(d.omega() * t1)?;
    Ok(u)
}

/// Evolution observed in the frame co-rotating with the field.
///
/// Factors, left to right: `R_y(Gamma) R_z(-Omega tau) R_y(-Gamma)`.
///
/// Its squared off-diagonal magnitude is the 1937 transition probability
/// `sin^2(Gamma) sin^2(Omega tau / 2)`.
pub fn rotating_field_propagator(d: &DerivedFrequencies, tau: f64) -> Result<Unitary2> {
    check_tau(tau)?;
    let u = Unitary2::rot_y(d.gamma_cap())?
        * Unitary2::rot_z(-d.big_omega() * tau)?
        * Unitary2::rot_y(-d.gamma_cap())?;
    Ok(u)
}

/// Combined evolution operator with both reference frames explicit:
/// the dynamical rotation at Omega followed by the kinematic rotation of
/// the observation frame at omega.
///
/// Factors, left to right:
/// `R_y(Gamma) R_z(-Omega tau) R_y(-Gamma) . R_y(-theta) R_z(-omega tau) R_y(theta)`.
///
/// Its squared off-diagonal magnitude equals
/// [`crate::closed_forms::w_unified`] to 1e-12.
pub fn dual_frame_matrix(d: &DerivedFrequencies, tau: f64) -> Result<Unitary2> {
    check_tau(tau)?;
    let kinematic = Unitary2::rot_y(-d.theta())?
        * Unitary2::rot_z(-d.omega() * tau)?
        * Unitary2::rot_y(d.theta())?;
    Ok(rotating_field_propagator(d, tau)? * kinematic)
}

/// Basis ket of the rotating-field frame as a laboratory-frame spinor:
/// `R_z(-omega t) R_y(theta) |m>`.
///
/// This is the instantaneous eigenvector of the quantization operator
/// along the field, `I_H(t) b = m b`, with
/// `I_H(t) = -H(t)/omega_bar` (see [`instantaneous_hamiltonian`]).
/// At t = 0 with theta = 0 it reduces to the lab basis ket.
pub fn rotating_basis(d: &DerivedFrequencies, t: f64, m: SpinLabel) -> Result<Spinor> {
    if !t.is_finite() {
        return Err(Error::InvalidTau(t));
    }
    let map = Unitary2::rot_z(-d.omega() * t)? * Unitary2::rot_y(d.theta())?;
    Ok(map.apply(&Spinor::basis(m)))
}

/// Laboratory-frame Hamiltonian at time t (hbar = 1):
///
/// `H(t) = -(omega0 sigma_z + omega1 cos(omega t) sigma_x - omega1 sin(omega t) sigma_y) / 2`.
///
/// Hermitian, traceless, with time-independent eigenvalues -+ omega_bar/2:
/// the field direction moves but its magnitude never does.
pub fn instantaneous_hamiltonian(d: &DerivedFrequencies, t: f64) -> Result<Hermitian2> {
    if !t.is_finite() {
        return Err(Error::InvalidTau(t));
    }
    let (s, c) = (d.omega() * t).sin_cos();
    Ok(Hermitian2::from_pauli(
        0.0,
        -0.5 * d.omega1() * c,
        0.5 * d.omega1() * s,
        -0.5 * d.omega0(),
    ))
}
