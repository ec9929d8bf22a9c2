//! Dense Bell operators and their GHZ eigenpairs.
//!
//! Every `x–y` plane observable flips a `sigma_z` eigenstate, so `B_f` maps
//! each product state `|w>` onto its antipode `|w~>` up to a complex factor
//! `beta_f(w)`. The eigenvectors of `B_f` are then the GHZ combinations
//! `(|w> ± e^{i phi} |w~>) / sqrt 2` with eigenvalues `± |beta_f(w)|`.
//! Nothing here assumes that structure: [`BellOperator::beta`] scans the
//! whole column and reports a [`Error::StructuralViolation`] if it fails.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_complex::Complex64;

use crate::boolean_group::{fourier, particle_bit, FourierVector, SignVector};
use crate::geometry::{observable_matrix, Geometry};
use crate::linalg::{self, kron, ComplexMatrix, StateVector};
use crate::{check_particles, check_same_n, Error, Result, MAX_MATRIX_PARTICLES};

/// Amplitudes of `B_f|w>` off the antipodal component must stay below this.
pub const PERMUTATION_TOL: f64 = 1e-10;
/// Eigen-relation residual allowed for a GHZ pair.
pub const EIGEN_TOL: f64 = 1e-9;
/// `lambda` at or below this is treated as the kernel of `B_f`.
pub const KERNEL_TOL: f64 = 1e-10;
/// An eigenvalue violates the Bell inequality when `|lambda| > 1 + VIOLATION_TOL`.
pub const VIOLATION_TOL: f64 = 1e-9;

/// A sign pattern `w ∈ {-1, 1}^n` labelling the product state `|w>` of
/// `sigma_z` eigenvectors.
///
/// In the computational basis `w_k = +1` is `|0>` and `w_k = -1` is `|1>`,
/// with particle 1 the most significant bit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    signs: Vec<i8>,
}

impl Configuration {
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        check_particles(signs.len())?;
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::ConfigurationParse(String::from(
                "entries must be +1 or -1",
            )));
        }
        Ok(Configuration { signs })
    }

    pub fn from_index(n: usize, index: usize) -> Result<Self> {
        check_particles(n)?;
        if index >> n != 0 {
            return Err(Error::SetupOutOfRange {
                bits: index as u32,
                n,
            });
        }
        Ok(Self::from_index_unchecked(n, index))
    }

    fn from_index_unchecked(n: usize, index: usize) -> Self {
        Configuration {
            signs: (0..n)
                .map(|k| {
                    if index as u32 & particle_bit(n, k) != 0 {
                        -1
                    } else {
                        1
                    }
                })
                .collect(),
        }
    }

    /// All `2^n` configurations in basis order.
    pub fn all(n: usize) -> Result<impl Iterator<Item = Configuration>> {
        check_particles(n)?;
        Ok((0..1usize << n).map(move |i| Self::from_index_unchecked(n, i)))
    }

    /// One representative per antipodal class: those with `w_1 = +1`.
    pub fn canonical_all(n: usize) -> Result<impl Iterator<Item = Configuration>> {
        check_particles(n)?;
        Ok((0..1usize << (n - 1)).map(move |i| Self::from_index_unchecked(n, i)))
    }

    pub fn n(&self) -> usize {
        self.signs.len()
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn sign(&self, k: usize) -> i8 {
        self.signs[k]
    }

    /// Index of `|w>` in the computational basis.
    pub fn index(&self) -> usize {
        let n = self.n();
        self.signs
            .iter()
            .enumerate()
            .filter(|&(_, &s)| s < 0)
            .map(|(k, _)| particle_bit(n, k) as usize)
            .sum()
    }

    /// `w~`: every sign flipped.
    pub fn antipode(&self) -> Configuration {
        Configuration {
            signs: self.signs.iter().map(|s| -s).collect(),
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.signs[0] > 0
    }

    /// The member of `{w, w~}` with `w_1 = +1`.
    pub fn canonical(&self) -> Configuration {
        if self.is_canonical() {
            self.clone()
        } else {
            self.antipode()
        }
    }

    pub fn basis_state(&self) -> StateVector {
        StateVector::basis(1 << self.n(), self.index()).expect("n within range")
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.signs {
            f.write_str(if s > 0 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl FromStr for Configuration {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let signs = s
            .trim()
            .chars()
            .map(|c| match c {
                '+' => Ok(1),
                '-' | '\u{2212}' => Ok(-1),
                _ => Err(Error::ConfigurationParse(format!(
                    "unexpected character {c:?}"
                ))),
            })
            .collect::<Result<Vec<i8>>>()?;
        Configuration::new(signs)
    }
}

/// A pair of GHZ eigenvectors `|w; ±>` of `B_f` with eigenvalues `± lambda`.
#[derive(Clone, Debug)]
pub struct GhzPair {
    /// Canonical representative of the antipodal class.
    pub config: Configuration,
    pub lambda: f64,
    /// `e^{i phi_f(w)} = beta_f(w) / lambda_f(w)`; fixed to 1 on the kernel.
    pub phase: Complex64,
    pub plus_state: StateVector,
    pub minus_state: StateVector,
}

impl GhzPair {
    /// True when the pair reaches `|<B_f>| > 1`.
    pub fn violates(&self) -> bool {
        self.lambda > 1.0 + VIOLATION_TOL
    }

    fn from_phase(config: Configuration, lambda: f64, phase: Complex64) -> GhzPair {
        let w = config.basis_state();
        let anti = config.antipode().basis_state();
        let r = Complex64::new(core::f64::consts::FRAC_1_SQRT_2, 0.0);
        let plus = w.plus_scaled(phase, &anti).expect("same dim").scaled(r);
        let minus = w.plus_scaled(-phase, &anti).expect("same dim").scaled(r);
        GhzPair {
            config,
            lambda,
            phase,
            plus_state: plus,
            minus_state: minus,
        }
    }
}

/// `B_f` for a fixed geometry, realized as a dense `2^n x 2^n` matrix.
#[derive(Clone, Debug)]
pub struct BellOperator {
    f: SignVector,
    fhat: FourierVector,
    geometry: Geometry,
    matrix: ComplexMatrix,
}

impl BellOperator {
    pub fn new(f: &SignVector, g: &Geometry) -> Result<Self> {
        check_same_n(f.n(), g.n())?;
        let n = f.n();
        if n > MAX_MATRIX_PARTICLES {
            return Err(Error::ParticleCount {
                n,
                min: crate::MIN_PARTICLES,
                max: MAX_MATRIX_PARTICLES,
            });
        }
        let fhat = fourier(f);
        let observables: Vec<[ComplexMatrix; 2]> = g
            .sites()
            .iter()
            .map(|s| [observable_matrix(s, false), observable_matrix(s, true)])
            .collect();
        let mut matrix = ComplexMatrix::zeros(1 << n)?;
        for s in 0..1u32 << n {
            let coeff = fhat.value(s as usize);
            if coeff == 0.0 {
                continue;
            }
            let setting = |k: usize| (s & particle_bit(n, k) != 0) as usize;
            let mut term = observables[0][setting(0)].clone();
            for (k, pair) in observables.iter().enumerate().skip(1) {
                term = kron(&term, &pair[setting(k)])?;
            }
            matrix.add_scaled(Complex64::new(coeff, 0.0), &term)?;
        }
        Ok(BellOperator {
            f: f.clone(),
            fhat,
            geometry: g.clone(),
            matrix,
        })
    }

    pub fn n(&self) -> usize {
        self.f.n()
    }

    pub fn sign_vector(&self) -> &SignVector {
        &self.f
    }

    pub fn fourier(&self) -> &FourierVector {
        &self.fhat
    }

    pub fn geometry(&self) -> &Geometry {
        &self.geometry
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    /// `<psi|B_f|psi>` for a normalized state.
    pub fn expectation(&self, psi: &StateVector) -> Result<f64> {
        linalg::expectation(&self.matrix, psi)
    }

    /// The amplitude `beta_f(w)` in `B_f|w> = beta_f(w)|w~>`.
    pub fn beta(&self, w: &Configuration) -> Result<Complex64> {
        check_same_n(self.n(), w.n())?;
        let col = w.index();
        let target = w.antipode().index();
        for row in 0..self.matrix.dim() {
            let amplitude = self.matrix.get(row, col).norm();
            if row != target && amplitude > PERMUTATION_TOL {
                return Err(Error::StructuralViolation {
                    config: col,
                    component: row,
                    amplitude,
                });
            }
        }
        Ok(self.matrix.get(target, col))
    }

    /// The GHZ pair for the antipodal class of `w`.
    ///
    /// Returns [`Error::DegenerateKernel`] when `lambda_f(w)` vanishes, since
    /// the phase is undefined there; [`BellOperator::full_eigensystem`]
    /// handles that case.
    pub fn ghz_pair(&self, w: &Configuration) -> Result<GhzPair> {
        let config = w.canonical();
        let beta = self.beta(&config)?;
        let lambda = beta.norm();
        if lambda <= KERNEL_TOL {
            return Err(Error::DegenerateKernel { lambda });
        }
        let pair = GhzPair::from_phase(config, lambda, beta / lambda);
        self.check_pair(&pair)?;
        Ok(pair)
    }

    /// One GHZ pair per antipodal class, ordered by the canonical
    /// representative's basis index. Kernel classes get `lambda = 0` and
    /// phase 1.
    pub fn full_eigensystem(&self) -> Result<Vec<GhzPair>> {
        Configuration::canonical_all(self.n())?
            .map(|w| match self.ghz_pair(&w) {
                Err(Error::DegenerateKernel { .. }) => {
                    let pair = GhzPair::from_phase(w, 0.0, Complex64::new(1.0, 0.0));
                    self.check_pair(&pair)?;
                    Ok(pair)
                }
                other => other,
            })
            .collect()
    }

    fn check_pair(&self, pair: &GhzPair) -> Result<()> {
        for (state, sign) in [(&pair.plus_state, 1.0), (&pair.minus_state, -1.0)] {
            let image = linalg::apply(&self.matrix, state)?;
            let residual = image
                .plus_scaled(Complex64::new(-sign * pair.lambda, 0.0), state)?
                .norm();
            if residual > EIGEN_TOL {
                return Err(Error::EigenRelation { residual });
            }
        }
        Ok(())
    }
}

/// `B_f = sum_s fhat(s) ⊗_k A_k(s_k)` as a dense matrix; requires `n <= 10`.
pub fn build_bell_matrix(f: &SignVector, g: &Geometry) -> Result<ComplexMatrix> {
    BellOperator::new(f, g).map(BellOperator::into_matrix)
}

pub fn beta(f: &SignVector, g: &Geometry, w: &Configuration) -> Result<Complex64> {
    BellOperator::new(f, g)?.beta(w)
}

pub fn ghz_pair(f: &SignVector, g: &Geometry, w: &Configuration) -> Result<GhzPair> {
    BellOperator::new(f, g)?.ghz_pair(w)
}

pub fn full_eigensystem(f: &SignVector, g: &Geometry) -> Result<Vec<GhzPair>> {
    BellOperator::new(f, g)?.full_eigensystem()
}
