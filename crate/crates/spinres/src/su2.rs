//! Complex 2-vectors and 2x2 unitaries for spin-1/2 rotation algebra.
//!
//! Sign convention, fixed once for the whole crate:
//!
//! ```text
//! R_j(a) = exp(-i sigma_j a / 2)
//! ```
//!
//! so `rot_z(a)` = diag(e^{-ia/2}, e^{+ia/2}) and `rot_j(-a)` is the inverse
//! rotation. Every operator exponential elsewhere in the crate is expressed
//! through these two constructors. Global phases carry no physics; helpers
//! that compare up to a phase say so in their name.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Entrywise tolerance for the unitarity and normalization invariants
/// guaranteed by the rotation constructors and their products.
pub const ALGEBRA_TOL: f64 = 1e-12;

/// Norm-squared drift accepted from legitimately evolved states before a
/// projection input is rejected as unnormalized. Far above any integrator
/// drift budget (1e-9), far below any genuinely wrong input.
pub const PROJECTION_NORM_TOL: f64 = 1e-6;

/// Spin projection label along the quantization axis: m = +1/2 or -1/2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpinLabel {
    /// m = +1/2
    Up,
    /// m = -1/2
    Down,
}

impl SpinLabel {
    /// Spin projection quantum number m.
    pub fn projection(self) -> f64 {
        match self {
            SpinLabel::Up => 0.5,
            SpinLabel::Down => -0.5,
        }
    }
}

/// State of a spin-1/2: amplitudes on the |+1/2> and |-1/2> basis kets.
///
/// Raw constructors accept unnormalized amplitudes; every evolution
/// operation in the crate preserves unit norm to [`ALGEBRA_TOL`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spinor {
    /// Amplitude on |+1/2>.
    pub up: Complex64,
    /// Amplitude on |-1/2>.
    pub down: Complex64,
}

impl Spinor {
    pub fn new(up: Complex64, down: Complex64) -> Self {
        Self { up, down }
    }

    /// The m = +1/2 basis ket (1, 0).
    pub fn spin_up() -> Self {
        Self::new(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0))
    }

    /// The m = -1/2 basis ket (0, 1).
    pub fn spin_down() -> Self {
        Self::new(Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0))
    }

    /// Basis ket for the given spin label.
    pub fn basis(m: SpinLabel) -> Self {
        match m {
            SpinLabel::Up => Self::spin_up(),
            SpinLabel::Down => Self::spin_down(),
        }
    }

    /// |up|^2 + |down|^2.
    pub fn norm_sq(&self) -> f64 {
        self.up.norm_sqr() + self.down.norm_sqr()
    }

    /// Rescale to unit norm. Errors on the zero vector.
    pub fn normalize(&self) -> Result<Self> {
        let n = self.norm_sq().sqrt();
        if !(n.is_finite() && n > 0.0) {
            return Err(Error::UnnormalizedSpinor {
                norm_sq: self.norm_sq(),
            });
        }
        Ok(Self::new(self.up / n, self.down / n))
    }

    /// Inner product <self|other> (conjugate-linear in `self`).
    pub fn inner(&self, other: &Spinor) -> Complex64 {
        self.up.conj() * other.up + self.down.conj() * other.down
    }

    pub fn is_normalized(&self, tol: f64) -> bool {
        (self.norm_sq() - 1.0).abs() <= tol
    }
}

impl std::ops::Add for Spinor {
    type Output = Spinor;
    fn add(self, rhs: Spinor) -> Spinor {
        Spinor::new(self.up + rhs.up, self.down + rhs.down)
    }
}

impl std::ops::Mul<Complex64> for Spinor {
    type Output = Spinor;
    fn mul(self, k: Complex64) -> Spinor {
        Spinor::new(self.up * k, self.down * k)
    }
}

impl std::ops::Mul<f64> for Spinor {
    type Output = Spinor;
    fn mul(self, k: f64) -> Spinor {
        Spinor::new(self.up * k, self.down * k)
    }
}

/// 2x2 complex matrix in U(2); rotation constructors and their products
/// satisfy U†U = I and |det U| = 1 to [`ALGEBRA_TOL`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Unitary2 {
    entries: [[Complex64; 2]; 2],
}

impl Unitary2 {
    /// Raw construction from row-major entries. No unitarity is enforced;
    /// use [`Unitary2::unitarity_defect`] to check when it matters.
    pub fn from_entries(entries: [[Complex64; 2]; 2]) -> Self {
        Self { entries }
    }

    pub fn identity() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        Self::from_entries([[one, zero], [zero, one]])
    }

    /// Rotation about z: `exp(-i sigma_z angle / 2)` = diag(e^{-ia/2}, e^{+ia/2}).
    pub fn rot_z(angle: f64) -> Result<Self> {
        if !angle.is_finite() {
            return Err(Error::NonFiniteAngle(angle));
        }
        let half = angle / 2.0;
        let zero = Complex64::new(0.0, 0.0);
        Ok(Self::from_entries([
            [Complex64::from_polar(1.0, -half), zero],
            [zero, Complex64::from_polar(1.0, half)],
        ]))
    }

    /// Rotation about y: `exp(-i sigma_y angle / 2)`, real-entried
    /// [[cos(a/2), -sin(a/2)], [sin(a/2), cos(a/2)]].
    pub fn rot_y(angle: f64) -> Result<Self> {
        if !angle.is_finite() {
            return Err(Error::NonFiniteAngle(angle));
        }
        let (s, c) = (angle / 2.0).sin_cos();
        let re = Complex64::new;
        Ok(Self::from_entries([
            [re(c, 0.0), re(-s, 0.0)],
            [re(s, 0.0), re(c, 0.0)],
        ]))
    }

    /// Conjugate transpose; inverse of any unitary built here.
    pub fn dagger(&self) -> Self {
        let e = &self.entries;
        Self::from_entries([
            [e[0][0].conj(), e[1][0].conj()],
            [e[0][1].conj(), e[1][1].conj()],
        ])
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row][col]
    }

    pub fn entries(&self) -> &[[Complex64; 2]; 2] {
        &self.entries
    }

    /// Apply to a state: U |psi>.
    pub fn apply(&self, psi: &Spinor) -> Spinor {
        let e = &self.entries;
        Spinor::new(
            e[0][0] * psi.up + e[0][1] * psi.down,
            e[1][0] * psi.up + e[1][1] * psi.down,
        )
    }

    pub fn det(&self) -> Complex64 {
        let e = &self.entries;
        e[0][0] * e[1][1] - e[0][1] * e[1][0]
    }

    /// max entrywise |U†U - I|; zero for an exact unitary.
    pub fn unitarity_defect(&self) -> f64 {
        let p = self.dagger() * *self;
        let mut worst: f64 = 0.0;
        for r in 0..2 {
            for c in 0..2 {
                let expect = if r == c { 1.0 } else { 0.0 };
                worst = worst.max((p.entries[r][c] - expect).norm());
            }
        }
        worst
    }

    /// max entrywise |self - other|.
    pub fn max_abs_diff(&self, other: &Unitary2) -> f64 {
        let mut worst: f64 = 0.0;
        for r in 0..2 {
            for c in 0..2 {
                worst = worst.max((self.entries[r][c] - other.entries[r][c]).norm());
            }
        }
        worst
    }

    /// max entrywise |self - e^{i phi} other| minimized over the global
    /// phase phi, aligned on the largest entry of `self`.
    pub fn max_abs_diff_up_to_phase(&self, other: &Unitary2) -> f64 {
        let mut pivot = (0, 0);
        let mut best = 0.0;
        for r in 0..2 {
            for c in 0..2 {
                let m = self.entries[r][c].norm();
                if m > best {
                    best = m;
                    pivot = (r, c);
                }
            }
        }
        let (r, c) = pivot;
        if other.entries[r][c].norm() == 0.0 {
            return self.max_abs_diff(other);
        }
        let phase = (self.entries[r][c] / other.entries[r][c])
            / (self.entries[r][c] / other.entries[r][c]).norm();
        let mut worst: f64 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                worst = worst.max((self.entries[i][j] - phase * other.entries[i][j]).norm());
            }
        }
        worst
    }
}

impl std::ops::Mul for Unitary2 {
    type Output = Unitary2;
    fn mul(self, rhs: Unitary2) -> Unitary2 {
        let a = &self.entries;
        let b = &rhs.entries;
        let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
        for r in 0..2 {
            for c in 0..2 {
                out[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
            }
        }
        Unitary2::from_entries(out)
    }
}

/// Transition probability |<final| U |initial>|^2.
///
/// Both states must be normalized to within [`PROJECTION_NORM_TOL`].
/// The result is real and sits in [0, 1] up to rounding slack.
pub fn transition_probability(
    final_state: &Spinor,
    u: &Unitary2,
    initial: &Spinor,
) -> Result<f64> {
    for s in [final_state, initial] {
        if !s.is_normalized(PROJECTION_NORM_TOL) {
            return Err(Error::UnnormalizedSpinor {
                norm_sq: s.norm_sq(),
            });
        }
    }
    Ok(final_state.inner(&u.apply(initial)).norm_sqr())
}

/// Hermitian 2x2 matrix stored by its Pauli decomposition
/// `H = c0 I + cx sigma_x + cy sigma_y + cz sigma_z` (real coefficients).
///
/// Unlike [`Unitary2`] this type carries no unitarity contract; it exists
/// for Hamiltonians. Eigenvalues and the exact step propagator
/// `exp(-i H dt)` follow in closed form from the decomposition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hermitian2 {
    c0: f64,
    cx: f64,
    cy: f64,
    cz: f64,
}

impl Hermitian2 {
    pub fn from_pauli(c0: f64, cx: f64, cy: f64, cz: f64) -> Self {
        Self { c0, cx, cy, cz }
    }

    /// Row-major complex entries.
    pub fn matrix(&self) -> [[Complex64; 2]; 2] {
        let c = Complex64::new;
        [
            [c(self.c0 + self.cz, 0.0), c(self.cx, -self.cy)],
            [c(self.cx, self.cy), c(self.c0 - self.cz, 0.0)],
        ]
    }

    /// Eigenvalues in ascending order: c0 -+ |c|.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let r = pauli_norm(self.cx, self.cy, self.cz);
        (self.c0 - r, self.c0 + r)
    }

    /// H |psi>.
    pub fn apply(&self, psi: &Spinor) -> Spinor {
        let m = self.matrix();
        Spinor::new(
            m[0][0] * psi.up + m[0][1] * psi.down,
            m[1][0] * psi.up + m[1][1] * psi.down,
        )
    }

    /// Exact exponential `exp(-i H dt)`:
    /// e^{-i c0 dt} [cos(|c| dt) I - i sin(|c| dt) c_hat . sigma].
    /// Unitary by construction for any finite dt.
    pub fn evolution_operator(&self, dt: f64) -> Unitary2 {
        let r = pauli_norm(self.cx, self.cy, self.cz);
        let phase = Complex64::from_polar(1.0, -self.c0 * dt);
        if r == 0.0 {
            let zero = Complex64::new(0.0, 0.0);
            return Unitary2::from_entries([[phase, zero], [zero, phase]]);
        }
        let (s, c) = (r * dt).sin_cos();
        let (nx, ny, nz) = (self.cx / r, self.cy / r, self.cz / r);
        let i = Complex64::new(0.0, 1.0);
        let cc = Complex64::new(c, 0.0);
        // cos I - i sin (n . sigma)
        let m00 = cc - i * s * nz;
        let m11 = cc + i * s * nz;
        let m01 = -i * s * Complex64::new(nx, -ny);
        let m10 = -i * s * Complex64::new(nx, ny);
        Unitary2::from_entries([[phase * m00, phase * m01], [phase * m10, phase * m11]])
    }
}

fn pauli_norm(cx: f64, cy: f64, cz: f64) -> f64 {
    (cx * cx + cy * cy + cz * cz).sqrt()
}
