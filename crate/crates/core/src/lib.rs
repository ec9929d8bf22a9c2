//! Spectral theory of the (n,2,2) Bell operators `B_f`.
//!
//! An experiment with `n` observers, each measuring one of two dichotomic
//! observables, is indexed by a sign vector `f: Z_2^n -> {-1, 1}`. The
//! corresponding Bell operator is
//!
//! ```text
//! B_f = sum_s fhat(s) A_1(s_1) ⊗ ... ⊗ A_n(s_n)
//! ```
//!
//! where `fhat` is the Fourier transform of `f` on `Z_2^n`. This crate
//! computes `fhat` exactly, builds `B_f` as a dense matrix, and evaluates the
//! spectrum of `B_f^2` in closed form from the coefficients `C_p(f)` without
//! ever touching a matrix. The dense path and the closed form are kept
//! independent so each can check the other.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod analytic_spectrum;
pub mod bell_operator;
pub mod boolean_group;
mod error;
pub mod geometry;
pub mod linalg;
pub mod optimal;

pub use analytic_spectrum::{
    aligned_radius_bound, analyze, coefficient, coefficient_bar, coefficient_bar_table,
    coefficient_table, eigenvalue_sq, partition_weight_sum, spectral_radius, spectrum,
    spectrum_from_table, CoefficientTable, SpectralAnalysis, SpectrumTable,
};
pub use bell_operator::{
    beta, build_bell_matrix, full_eigensystem, ghz_pair, BellOperator, Configuration, GhzPair,
};
pub use boolean_group::{
    even_subgroup, even_subsets, fourier, pairing, FourierVector, SetupVector, SignVector,
};
pub use error::{Error, Result};
pub use geometry::{
    cos_theta, observable_matrix, optimal_geometry, sin_theta, Geometry, SiteGeometry,
};
pub use linalg::{
    apply, expectation, hermitian_eigensystem, kron, ComplexMatrix, Eigensystem, StateVector,
};
pub use optimal::{
    exhaustive_count, exhaustive_count_range, is_optimal, max_radius, mermin_check,
    optimal_vectors, orbit, MerminEntry, MerminReport, OptimalCertificate,
};

/// Smallest supported number of particles.
pub const MIN_PARTICLES: usize = 2;
/// Largest supported number of particles; setups fit in one `u32`.
pub const MAX_PARTICLES: usize = 16;
/// Largest particle count for which `B_f` is realized as a dense matrix.
pub const MAX_MATRIX_PARTICLES: usize = 10;

pub(crate) fn check_particles(n: usize) -> Result<()> {
    if (MIN_PARTICLES..=MAX_PARTICLES).contains(&n) {
        Ok(())
    } else {
        Err(Error::ParticleCount {
            n,
            min: MIN_PARTICLES,
            max: MAX_PARTICLES,
        })
    }
}

pub(crate) fn check_same_n(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::Dimension { expected, found })
    }
}
