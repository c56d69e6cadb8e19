//! Scalar closed-form transition probabilities for the driven spin-1/2.
//!
//! Three formulas for the same physical setup, distinguished by how the
//! measurement basis is handled:
//!
//! * [`w1954`] — projection onto the fixed laboratory basis:
//!   `(omega1/Omega)^2 sin^2(Omega tau/2)`;
//! * [`w1937`] — evolution observed entirely in the rotating-field frame:
//!   `(omega omega1/(omega_bar Omega))^2 sin^2(Omega tau/2)`;
//! * [`w_unified`] — both the dynamical rotation (at Omega) and the
//!   kinematic motion of the measurement basis (at omega) kept explicit;
//!   reduces to the other two in the appropriate limits.
//!
//! All amplitudes are evaluated directly as frequency ratios, not through
//! sin(Gamma)/sin(Theta), so no angle-branch decision enters here; equality
//! with the angle forms and with the operator products of
//! [`crate::propagators`] is checked by tests, not assumed.

use crate::error::{Error, Result};
use crate::model::DerivedFrequencies;

/// Relative width of the resonance manifold accepted by [`w_resonance`].
pub const RESONANCE_REL_TOL: f64 = 1e-9;

/// A sampled point of a transition-probability curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbabilityPoint {
    /// Evolution time tau = t2 - t1 (s).
    pub tau: f64,
    /// Transition probability, in [0, 1] up to 1e-12 rounding slack.
    pub value: f64,
}

fn check_tau(tau: f64) -> Result<()> {
    if !tau.is_finite() || tau < 0.0 {
        return Err(Error::InvalidTau(tau));
    }
    Ok(())
}

fn check_omega_bar(d: &DerivedFrequencies) -> Result<()> {
    if d.omega_bar() <= 0.0 {
        return Err(Error::ZeroFieldAmplitude);
    }
    Ok(())
}

/// Rotating-field-frame result:
/// `(omega omega1 / (omega_bar Omega))^2 sin^2(Omega tau / 2)`.
///
/// Equals `sin^2(Gamma) sin^2(Omega tau / 2)` and the squared off-diagonal
/// magnitude of [`crate::propagators::rotating_field_propagator`].
pub fn w1937(d: &DerivedFrequencies, tau: f64) -> Result<f64> {
    check_tau(tau)?;
    check_omega_bar(d)?;
    let amp = d.omega() * d.omega1() / (d.omega_bar() * d.big_omega());
    Ok(amp * amp * half_sin_sq(d.big_omega() * tau))
}

/// Fixed-laboratory-basis result: `(omega1 / Omega)^2 sin^2(Omega tau / 2)`.
///
/// Equals `sin^2(Theta) sin^2(Omega tau / 2)` and the squared off-diagonal
/// magnitude of [`crate::propagators::lab_propagator`].
pub fn w1954(d: &DerivedFrequencies, tau: f64) -> Result<f64> {
    check_tau(tau)?;
    let amp = d.omega1() / d.big_omega();
    Ok(amp * amp * half_sin_sq(d.big_omega() * tau))
}

/// Transition probability with both reference frames explicit:
///
/// ```text
/// (omega1/Omega)^2 sin^2(Omega tau/2) sin^2(omega tau/2)
///   + [ (omega omega1/(Omega omega_bar)) sin(Omega tau/2) cos(omega tau/2)
///       - (omega1/omega_bar) cos(Omega tau/2) sin(omega tau/2) ]^2
/// ```
///
/// At stroboscopic times omega tau = 2 pi n it equals [`w1937`] exactly;
/// projected onto the fixed lab basis the same evolution gives [`w1954`].
pub fn w_unified(d: &DerivedFrequencies, tau: f64) -> Result<f64> {
    check_tau(tau)?;
    check_omega_bar(d)?;
    let (sin_dyn, cos_dyn) = (d.big_omega() * tau / 2.0).sin_cos();
    let (sin_kin, cos_kin) = (d.omega() * tau / 2.0).sin_cos();
    let a1 = d.omega1() / d.big_omega();
    let a2 = d.omega() * d.omega1() / (d.big_omega() * d.omega_bar());
    let a3 = d.omega1() / d.omega_bar();
    let direct = a1 * sin_dyn * sin_kin;
    let cross = a2 * sin_dyn * cos_kin - a3 * cos_dyn * sin_kin;
    Ok(direct * direct + cross * cross)
}

/// [`w_unified`] specialized to exact resonance omega = omega0 (then
/// Omega = omega1):
///
/// ```text
/// sin^2(Omega tau/2) sin^2(omega tau/2)
///   + [ (omega/omega_bar) sin(Omega tau/2) cos(omega tau/2)
///       - (Omega/omega_bar) cos(Omega tau/2) sin(omega tau/2) ]^2
/// ```
///
/// Callers off the manifold (relative detuning beyond
/// [`RESONANCE_REL_TOL`]) are rejected; use [`w_unified`] there.
pub fn w_resonance(d: &DerivedFrequencies, tau: f64) -> Result<f64> {
    check_tau(tau)?;
    check_omega_bar(d)?;
    let deviation = (d.omega() - d.omega0()).abs();
    let allowed = RESONANCE_REL_TOL * d.omega().max(d.omega0());
    if deviation > allowed {
        return Err(Error::OffResonance { deviation, allowed });
    }
    let (sin_dyn, cos_dyn) = (d.big_omega() * tau / 2.0).sin_cos();
    let (sin_kin, cos_kin) = (d.omega() * tau / 2.0).sin_cos();
    let direct = sin_dyn * sin_kin;
    let cross = (d.omega() / d.omega_bar()) * sin_dyn * cos_kin
        - (d.big_omega() / d.omega_bar()) * cos_dyn * sin_kin;
    Ok(direct * direct + cross * cross)
}

/// Weak-driving resonance limit (omega1 << omega0 at omega = omega0): the
/// conventional flopping form `sin^2(Omega tau / 2)`.
pub fn w_weak_resonance(big_omega: f64, tau: f64) -> Result<f64> {
    check_tau(tau)?;
    if !(big_omega.is_finite() && big_omega > 0.0) {
        return Err(Error::DegenerateDetuning);
    }
    Ok(half_sin_sq(big_omega * tau))
}

/// Second resonance (omega = omega0 = omega1): `sin^4(omega tau / 2)`.
pub fn w_second_resonance(omega: f64, tau: f64) -> Result<f64> {
    check_tau(tau)?;
    if !(omega.is_finite() && omega > 0.0) {
        return Err(Error::InvalidParams(format!(
            "second-resonance form needs omega > 0, got {omega}"
        )));
    }
    let s = half_sin_sq(omega * tau);
    Ok(s * s)
}

/// Survival probability 1 - w for a two-level system.
pub fn complement(w: f64) -> Result<f64> {
    if !w.is_finite() || !(0.0..=1.0).contains(&w) {
        return Err(Error::ProbabilityOutOfRange(w));
    }
    Ok(1.0 - w)
}

fn half_sin_sq(phase: f64) -> f64 {
    let s = (phase / 2.0).sin();
    s * s
}
