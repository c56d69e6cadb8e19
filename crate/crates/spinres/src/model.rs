//! Physical field parameters and the frequencies/angles derived from them.
//!
//! A field of amplitude H rotates about z at frequency omega while keeping a
//! constant polar angle theta. With gyromagnetic ratio gamma the
//! characteristic frequencies are
//!
//! ```text
//! omega_bar = gamma H            (Larmor)
//! omega0    = omega_bar cos(theta)
//! omega1    = omega_bar sin(theta)
//! Omega     = sqrt((omega0 - omega)^2 + omega1^2)   (generalized Rabi)
//! tan(Theta) = omega1 / (omega0 - omega)
//! Gamma     = Theta - theta
//! ```
//!
//! Theta is taken on the branch [0, pi] (two-argument arctangent with
//! omega1 >= 0), which makes sin(Theta) = omega1/Omega >= 0 so transition
//! amplitudes stay non-negative. Units: rad/s throughout with hbar = 1;
//! only the dimensionless products (frequency x time) matter.

use crate::error::{Error, Result};

/// Relative tolerance used by invariant checks on derived quantities.
pub const DERIVED_REL_TOL: f64 = 1e-12;

/// Physical inputs: gyromagnetic ratio, field amplitude, polar angle of the
/// field, and drive rotation frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldParams {
    /// Gyromagnetic ratio (rad/s per field unit); must be positive.
    pub gamma: f64,
    /// Field amplitude H (field units); must be non-negative.
    pub field: f64,
    /// Polar field angle theta in [0, pi] (radians).
    pub theta: f64,
    /// Drive rotation frequency omega >= 0 (rad/s). The drive orientation
    /// convention (azimuth -omega t) lives in the propagator builders.
    pub omega: f64,
}

impl FieldParams {
    /// Validating constructor.
    pub fn new(gamma: f64, field: f64, theta: f64, omega: f64) -> Result<Self> {
        let p = Self {
            gamma,
            field,
            theta,
            omega,
        };
        p.validate()?;
        Ok(p)
    }

    /// Inverse parametrization from the characteristic frequencies, with
    /// gamma = 1: H = sqrt(omega0^2 + omega1^2), theta = atan2(omega1, omega0).
    /// Round-trips through [`FieldParams::derive`] to relative 1e-12.
    pub fn from_frequencies(omega0: f64, omega1: f64, omega: f64) -> Result<Self> {
        if !(omega0.is_finite() && omega1.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "non-finite frequencies: omega0 = {omega0}, omega1 = {omega1}"
            )));
        }
        if omega1 < 0.0 {
            return Err(Error::InvalidParams(format!(
                "omega1 must be non-negative, got {omega1}"
            )));
        }
        if omega0 == 0.0 && omega1 == 0.0 {
            return Err(Error::InvalidParams(
                "omega0 and omega1 cannot both vanish".into(),
            ));
        }
        Self::new(1.0, omega0.hypot(omega1), omega1.atan2(omega0), omega)
    }

    pub fn validate(&self) -> Result<()> {
        let all_finite = self.gamma.is_finite()
            && self.field.is_finite()
            && self.theta.is_finite()
            && self.omega.is_finite();
        if !all_finite {
            return Err(Error::InvalidParams(format!("non-finite entry in {self:?}")));
        }
        if self.gamma <= 0.0 {
            return Err(Error::InvalidParams(format!(
                "gamma must be positive, got {}",
                self.gamma
            )));
        }
        if self.field < 0.0 {
            return Err(Error::InvalidParams(format!(
                "field amplitude must be non-negative, got {}",
                self.field
            )));
        }
        if !(0.0..=std::f64::consts::PI).contains(&self.theta) {
            return Err(Error::InvalidParams(format!(
                "theta must lie in [0, pi], got {}",
                self.theta
            )));
        }
        if self.omega < 0.0 {
            // Counter-rotating drives are out of scope; rejecting keeps one
            // orientation convention.
            return Err(Error::InvalidParams(format!(
                "omega must be non-negative, got {}",
                self.omega
            )));
        }
        Ok(())
    }

    /// Derive every frequency and angle the probability formulas consume.
    ///
    /// Errors with [`Error::DegenerateDetuning`] when the generalized Rabi
    /// frequency vanishes (omega = omega0 and omega1 = 0), where the frame
    /// tilt angle Theta is undefined and every formula divides by zero.
    pub fn derive(&self) -> Result<DerivedFrequencies> {
        self.validate()?;
        let omega_bar = self.gamma * self.field;
        let (sin_theta, cos_theta) = self.theta.sin_cos();
        let omega0 = omega_bar * cos_theta;
        let omega1 = omega_bar * sin_theta;
        let big_omega = (omega0 - self.omega).hypot(omega1);
        if big_omega == 0.0 {
            return Err(Error::DegenerateDetuning);
        }
        let theta_cap = omega1.atan2(omega0 - self.omega);
        Ok(DerivedFrequencies {
            omega_bar,
            omega0,
            omega1,
            omega: self.omega,
            big_omega,
            theta_cap,
            gamma_cap: theta_cap - self.theta,
            theta: self.theta,
        })
    }
}

/// Frequencies and angles derived from [`FieldParams`]; constructed only by
/// [`FieldParams::derive`], so `big_omega > 0` always holds here.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedFrequencies {
    omega_bar: f64,
    omega0: f64,
    omega1: f64,
    omega: f64,
    big_omega: f64,
    theta_cap: f64,
    gamma_cap: f64,
    theta: f64,
}

impl DerivedFrequencies {
    /// Larmor frequency omega_bar = gamma H.
    pub fn omega_bar(&self) -> f64 {
        self.omega_bar
    }

    /// Longitudinal component omega0 = omega_bar cos(theta).
    pub fn omega0(&self) -> f64 {
        self.omega0
    }

    /// Transverse component omega1 = omega_bar sin(theta) >= 0.
    pub fn omega1(&self) -> f64 {
        self.omega1
    }

    /// Drive rotation frequency.
    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// Generalized Rabi frequency Omega > 0.
    pub fn big_omega(&self) -> f64 {
        self.big_omega
    }

    /// Frame tilt angle Theta in [0, pi], with sin(Theta) = omega1/Omega.
    pub fn theta_cap(&self) -> f64 {
        self.theta_cap
    }

    /// Geometry angle Gamma = Theta - theta.
    pub fn gamma_cap(&self) -> f64 {
        self.gamma_cap
    }

    /// Polar field angle theta.
    pub fn theta(&self) -> f64 {
        self.theta
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    #[test]
    fn static_transverse_field() {
        // omega_bar = 1, theta = pi/2, omega = 0
        let d = FieldParams::new(1.0, 1.0, PI / 2.0, 0.0).unwrap().derive().unwrap();
        assert!(d.omega0().abs() < 1e-15);
        assert!((d.omega1() - 1.0).abs() < 1e-15);
        assert!((d.big_omega() - 1.0).abs() < 1e-15);
        assert!((d.theta_cap() - PI / 2.0).abs() < 1e-15);
        assert!(d.gamma_cap().abs() < 1e-15);
    }

    #[test]
    fn resonance_gives_omega1_and_right_angle() {
        // omega = omega0 with omega1 > 0: Omega = omega1, Theta = pi/2,
        // so the 1954 amplitude (omega1/Omega)^2 = 1.
        let p = FieldParams::from_frequencies(2.0, 0.7, 2.0).unwrap();
        let d = p.derive().unwrap();
        assert!((d.big_omega() - d.omega1()).abs() < 1e-15 * d.omega1());
        assert!((d.theta_cap() - PI / 2.0).abs() < 1e-12);
    }

    #[test]
    fn derive_worked_numbers() {
        // omega_bar = 2, theta = pi/3, omega = 1.7:
        // omega0 = 1, omega1 = sqrt(3), Omega = sqrt(0.49 + 3),
        // Theta = atan2(sqrt(3), -0.7)
        let d = FieldParams::new(1.0, 2.0, PI / 3.0, 1.7).unwrap().derive().unwrap();
        assert!((d.omega0() - 1.0).abs() < 1e-12);
        assert!((d.omega1() - 3.0f64.sqrt()).abs() < 1e-12);
        assert!((d.big_omega() - 3.49f64.sqrt()).abs() < 1e-12);
        assert!((d.theta_cap() - 3.0f64.sqrt().atan2(-0.7)).abs() < 1e-12);
        assert!((d.gamma_cap() - (d.theta_cap() - PI / 3.0)).abs() < 1e-15);
    }

    #[test]
    fn derived_internal_identities() {
        let d = FieldParams::new(1.3, 2.1, 1.1, 0.9).unwrap().derive().unwrap();
        let wbar = d.omega_bar();
        assert!((wbar * wbar - (d.omega0().powi(2) + d.omega1().powi(2))).abs() < 1e-12 * wbar * wbar);
        let om = d.big_omega();
        assert!(
            (om * om - ((d.omega0() - d.omega()).powi(2) + d.omega1().powi(2))).abs()
                < 1e-12 * om * om
        );
        assert!((d.theta_cap().sin() - d.omega1() / om).abs() < 1e-12);
        assert!((d.theta_cap().cos() - (d.omega0() - d.omega()) / om).abs() < 1e-12);
    }

    #[test]
    fn from_frequencies_basic_cases() {
        let p = FieldParams::from_frequencies(1.0, 0.0, 0.0).unwrap();
        assert!(p.theta.abs() < 1e-15);
        assert!((p.field - 1.0).abs() < 1e-15);

        let p = FieldParams::from_frequencies(0.0, 1.0, 0.5).unwrap();
        assert!((p.theta - PI / 2.0).abs() < 1e-15);
        assert!((p.field - 1.0).abs() < 1e-15);

        let p = FieldParams::from_frequencies(3.0, 4.0, 2.0).unwrap();
        assert!((p.field - 5.0).abs() < 1e-12);
        assert!((p.theta - 4.0f64.atan2(3.0)).abs() < 1e-15);
        let d = p.derive().unwrap();
        assert!((d.omega0() - 3.0).abs() < 1e-12 * 3.0);
        assert!((d.omega1() - 4.0).abs() < 1e-12 * 4.0);
    }

    #[test]
    fn degenerate_detuning_rejected() {
        // theta = 0 puts the field along z; driving at omega = omega0 then
        // leaves a vanishing Rabi frequency.
        let p = FieldParams::new(1.0, 1.5, 0.0, 1.5).unwrap();
        assert!(matches!(p.derive(), Err(Error::DegenerateDetuning)));
    }

    #[test]
    fn invalid_params_rejected() {
        assert!(FieldParams::new(0.0, 1.0, 1.0, 1.0).is_err());
        assert!(FieldParams::new(-1.0, 1.0, 1.0, 1.0).is_err());
        assert!(FieldParams::new(1.0, -0.1, 1.0, 1.0).is_err());
        assert!(FieldParams::new(1.0, 1.0, -0.1, 1.0).is_err());
        assert!(FieldParams::new(1.0, 1.0, PI + 0.1, 1.0).is_err());
        assert!(FieldParams::new(1.0, 1.0, 1.0, -0.5).is_err());
        assert!(FieldParams::new(1.0, f64::NAN, 1.0, 1.0).is_err());
        assert!(FieldParams::from_frequencies(1.0, -0.2, 0.0).is_err());
        assert!(FieldParams::from_frequencies(0.0, 0.0, 1.0).is_err());
    }

    proptest! {
        #[test]
        fn from_frequencies_round_trip(
            omega0 in -10.0f64..10.0,
            omega1 in 1e-6f64..10.0,
            omega in 0.0f64..10.0,
        ) {
            let p = FieldParams::from_frequencies(omega0, omega1, omega).unwrap();
            let d = p.derive().unwrap();
            let scale = omega0.abs().max(omega1).max(1e-30);
            prop_assert!((d.omega0() - omega0).abs() <= DERIVED_REL_TOL * scale);
            prop_assert!((d.omega1() - omega1).abs() <= DERIVED_REL_TOL * scale);
            prop_assert!((d.omega() - omega).abs() == 0.0);
        }

        #[test]
        fn theta_cap_branch_consistency(
            omega0 in -5.0f64..5.0,
            omega1 in 1e-3f64..5.0,
            omega in 0.0f64..5.0,
        ) {
            let d = FieldParams::from_frequencies(omega0, omega1, omega)
                .unwrap()
                .derive()
                .unwrap();
            // tan(Theta) (omega0 - omega) = omega1 away from the pole of tan
            if d.theta_cap().cos().abs() > 1e-8 {
                let lhs = d.theta_cap().tan() * (d.omega0() - d.omega());
                prop_assert!((lhs - d.omega1()).abs() < 1e-10 * (1.0 + d.omega1()));
            }
            // the chosen branch keeps sin(Theta) >= 0
            prop_assert!(d.theta_cap().sin() >= -1e-15);
            prop_assert!((0.0..=PI).contains(&d.theta_cap()));
        }
    }
}
