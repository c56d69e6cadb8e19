//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors surfaced by parameter validation, operator construction, and the
/// numerical oracle.
#[derive(Debug, Error)]
pub enum Error {
    /// A rotation angle was NaN or infinite.
    #[error("rotation angle is not finite: {0}")]
    NonFiniteAngle(f64),

    /// A projection was requested with a state away from unit norm.
    #[error("spinor is not normalized: |psi|^2 = {norm_sq}")]
    UnnormalizedSpinor { norm_sq: f64 },

    /// Field parameters violate their domain (gamma > 0, H >= 0,
    /// theta in [0, pi], omega >= 0, all finite).
    #[error("invalid field parameters: {0}")]
    InvalidParams(String),

    /// omega = omega0 with omega1 = 0: the generalized Rabi frequency
    /// vanishes and the frame tilt angle is undefined.
    #[error("degenerate detuning: Rabi frequency is zero (omega = omega0 and omega1 = 0)")]
    DegenerateDetuning,

    /// omega_bar = 0 (zero field amplitude): amplitudes dividing by the
    /// Larmor frequency are undefined.
    #[error("zero field amplitude: omega_bar = 0")]
    ZeroFieldAmplitude,

    /// An evolution interval with t2 < t1 or non-finite endpoints.
    #[error("invalid time interval: t1 = {t1}, t2 = {t2}")]
    InvalidTimeInterval { t1: f64, t2: f64 },

    /// A negative or non-finite evolution time.
    #[error("invalid evolution time: tau = {0}")]
    InvalidTau(f64),

    /// The resonance-manifold form was called off resonance.
    #[error("off resonance: |omega - omega0| = {deviation:e} exceeds {allowed:e}")]
    OffResonance { deviation: f64, allowed: f64 },

    /// A probability argument outside [0, 1].
    #[error("probability out of range [0, 1]: {0}")]
    ProbabilityOutOfRange(f64),

    /// Integrator step size rejected (non-positive, non-finite, or too
    /// coarse to resolve the fastest frequency).
    #[error("integrator configuration rejected: {0}")]
    IntegratorConfig(String),

    /// A sweep specification with too few steps or a reversed range.
    #[error("invalid sweep: {0}")]
    InvalidSweep(String),

    /// A curve file that is missing, empty, or not in the expected layout.
    #[error("malformed curve file: {0}")]
    MalformedCurve(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
