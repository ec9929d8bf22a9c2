//! Measurement directions.
//!
//! Each particle measures one of two observables
//! `A_k(s) = cos(phi_k(s)) sigma_x + sin(phi_k(s)) sigma_y` lying in the local
//! x–y plane. The spectral formulas only see the angle difference
//! `theta_k = phi_k(0) - phi_k(1)` through `sin theta_k` and `cos theta_k`.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, TAU};

use num_complex::Complex64;

use crate::bell_operator::Configuration;
use crate::linalg::ComplexMatrix;
use crate::{check_particles, Error, Result};

/// Tolerance for comparing angles.
pub const ANGLE_TOL: f64 = 1e-12;

fn canonical_angle(phi: f64) -> Result<f64> {
    if !phi.is_finite() {
        return Err(Error::NonFiniteAngle(phi));
    }
    let mut r = libm::fmod(phi, TAU);
    if r < 0.0 {
        r += TAU;
    }
    // fmod of a tiny negative angle can round up to exactly TAU
    if r >= TAU {
        r -= TAU;
    }
    Ok(r)
}

/// The two observable directions of one particle, as angles in `[0, 2π)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SiteGeometry {
    phi0: f64,
    phi1: f64,
}

impl SiteGeometry {
    pub fn new(phi0: f64, phi1: f64) -> Result<Self> {
        Ok(SiteGeometry {
            phi0: canonical_angle(phi0)?,
            phi1: canonical_angle(phi1)?,
        })
    }

    pub fn phi0(&self) -> f64 {
        self.phi0
    }

    pub fn phi1(&self) -> f64 {
        self.phi1
    }

    pub fn angle(&self, setting: bool) -> f64 {
        if setting {
            self.phi1
        } else {
            self.phi0
        }
    }

    /// The same site with the two observables exchanged.
    pub fn swapped(&self) -> SiteGeometry {
        SiteGeometry {
            phi0: self.phi1,
            phi1: self.phi0,
        }
    }

    pub fn approx_eq(&self, other: &SiteGeometry) -> bool {
        angle_distance(self.phi0, other.phi0) <= ANGLE_TOL
            && angle_distance(self.phi1, other.phi1) <= ANGLE_TOL
    }
}

fn angle_distance(a: f64, b: f64) -> f64 {
    let d = libm::fmod((a - b).abs(), TAU);
    d.min(TAU - d)
}

/// `sin theta_k`: the z-component of `n_k(1) × n_k(0)`.
pub fn sin_theta(g: &SiteGeometry) -> f64 {
    libm::sin(g.phi0 - g.phi1)
}

/// `cos theta_k`, so that `{A_k(0), A_k(1)} / 2 = cos theta_k * 1`.
pub fn cos_theta(g: &SiteGeometry) -> f64 {
    libm::cos(g.phi0 - g.phi1)
}

/// `cos(phi) sigma_x + sin(phi) sigma_y` for the selected setting.
pub fn observable_matrix(g: &SiteGeometry, setting: bool) -> ComplexMatrix {
    let phi = g.angle(setting);
    let (s, c) = (libm::sin(phi), libm::cos(phi));
    let zero = Complex64::new(0.0, 0.0);
    ComplexMatrix::from_vec(
        2,
        alloc::vec![zero, Complex64::new(c, -s), Complex64::new(c, s), zero],
    )
    .expect("2x2")
}

/// Per-particle measurement directions for an `n`-particle experiment.
#[derive(Clone, Debug, PartialEq)]
pub struct Geometry {
    sites: Vec<SiteGeometry>,
}

impl Geometry {
    pub fn new(sites: Vec<SiteGeometry>) -> Result<Self> {
        check_particles(sites.len())?;
        Ok(Geometry { sites })
    }

    /// Builds a geometry from `(phi0, phi1)` pairs.
    pub fn from_angles(angles: &[(f64, f64)]) -> Result<Self> {
        let sites = angles
            .iter()
            .map(|&(a, b)| SiteGeometry::new(a, b))
            .collect::<Result<Vec<_>>>()?;
        Geometry::new(sites)
    }

    /// `phi0 = π/2`, `phi1 = 0` everywhere: anticommuting pairs, `cos theta_k = 0`.
    pub fn orthogonal(n: usize) -> Result<Self> {
        Geometry::new(alloc::vec![SiteGeometry::new(FRAC_PI_2, 0.0)?; n])
    }

    /// `phi0 = phi1 = 0`: commuting observables at every site.
    pub fn aligned(n: usize) -> Result<Self> {
        Geometry::new(alloc::vec![SiteGeometry::new(0.0, 0.0)?; n])
    }

    pub fn n(&self) -> usize {
        self.sites.len()
    }

    pub fn sites(&self) -> &[SiteGeometry] {
        &self.sites
    }

    pub fn site(&self, k: usize) -> &SiteGeometry {
        &self.sites[k]
    }

    pub fn sin_thetas(&self) -> Vec<f64> {
        self.sites.iter().map(sin_theta).collect()
    }

    pub fn cos_thetas(&self) -> Vec<f64> {
        self.sites.iter().map(cos_theta).collect()
    }

    /// Exchanges `A_k(0)` and `A_k(1)` at every site.
    pub fn swapped(&self) -> Geometry {
        Geometry {
            sites: self.sites.iter().map(SiteGeometry::swapped).collect(),
        }
    }

    pub fn approx_eq(&self, other: &Geometry) -> bool {
        self.n() == other.n()
            && self
                .sites
                .iter()
                .zip(&other.sites)
                .all(|(a, b)| a.approx_eq(b))
    }
}

/// The geometry that tunes an experiment to the GHZ pair of configuration `w`:
/// `cos theta_k = 0` and `w_k sin theta_k = 1` at every site.
pub fn optimal_geometry(w: &Configuration) -> Geometry {
    let sites = w
        .signs()
        .iter()
        .map(|&wk| SiteGeometry::new(wk as f64 * FRAC_PI_2, 0.0).expect("finite angle"))
        .collect();
    Geometry { sites }
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::{FRAC_PI_3, FRAC_PI_4, PI};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn site(a: f64, b: f64) -> SiteGeometry {
        SiteGeometry::new(a, b).unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn sin_theta_examples() {
        assert_eq!(sin_theta(&site(0.0, 0.0)), 0.0);
        assert!((sin_theta(&site(FRAC_PI_2, 0.0)) - 1.0).abs() < 1e-15);
        let g = site(FRAC_PI_4, 0.0);
        assert!((sin_theta(&g) - core::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
        // (i/2)[A0, A1] built from Pauli matrices; its (0,0) entry is sin theta.
        let a0 = observable_matrix(&g, false);
        let a1 = observable_matrix(&g, true);
        let comm = &(&a0 * &a1) - &(&a1 * &a0);
        let z = comm.scaled(c(0.0, 0.5));
        assert!((z.get(0, 0) - c(sin_theta(&g), 0.0)).norm() < 1e-15);
    }

    #[test]
    fn cos_theta_examples() {
        assert_eq!(cos_theta(&site(0.0, 0.0)), 1.0);
        assert!(cos_theta(&site(FRAC_PI_2, 0.0)).abs() < 1e-15);
        assert!((cos_theta(&site(FRAC_PI_3, 0.0)) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn observable_examples() {
        let x = observable_matrix(&site(0.0, 0.0), false);
        assert_eq!(x, ComplexMatrix::pauli_x());
        let y = observable_matrix(&site(FRAC_PI_2, 0.0), false);
        assert!(y.max_abs_diff(&ComplexMatrix::pauli_y()).unwrap() < 1e-15);
        let minus_x = observable_matrix(&site(0.0, PI), true);
        assert!(
            minus_x
                .max_abs_diff(&ComplexMatrix::pauli_x().scaled(c(-1.0, 0.0)))
                .unwrap()
                < 1e-15
        );
    }

    #[test]
    fn angles_are_canonicalized() {
        let g = site(-FRAC_PI_2, 5.0 * PI);
        assert!((g.phi0() - 1.5 * PI).abs() < 1e-15);
        assert!((g.phi1() - PI).abs() < 1e-14);
        assert!(site(-1e-300, 0.0).phi0() < TAU);
        assert!(SiteGeometry::new(f64::NAN, 0.0).is_err());
        assert!(SiteGeometry::new(0.0, f64::INFINITY).is_err());
    }

    #[test]
    fn optimal_geometry_examples() {
        let w: Configuration = "++".parse().unwrap();
        let g = optimal_geometry(&w);
        assert!(g.approx_eq(&Geometry::from_angles(&[(FRAC_PI_2, 0.0); 2]).unwrap()));

        let w: Configuration = "-+".parse().unwrap();
        let g = optimal_geometry(&w);
        assert!((g.site(0).phi0() - 1.5 * PI).abs() < ANGLE_TOL);
        assert!(g.site(1).approx_eq(&site(FRAC_PI_2, 0.0)));

        for w in Configuration::all(4).unwrap() {
            let g = optimal_geometry(&w);
            for (k, s) in g.sites().iter().enumerate() {
                assert!(cos_theta(s).abs() < ANGLE_TOL);
                assert!((w.sign(k) as f64 * sin_theta(s) - 1.0).abs() < ANGLE_TOL);
            }
        }
    }

    #[test]
    fn observable_algebra_on_random_angles() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let id = ComplexMatrix::identity(2).unwrap();
        let z = ComplexMatrix::pauli_z();
        for _ in 0..1000 {
            let g = site(rng.random_range(0.0..TAU), rng.random_range(0.0..TAU));
            let a0 = observable_matrix(&g, false);
            let a1 = observable_matrix(&g, true);
            for a in [&a0, &a1] {
                assert!((a * a).max_abs_diff(&id).unwrap() <= 1e-12);
                assert!(a.is_hermitian(0.0));
                assert!(a.trace().norm() <= 1e-15);
            }
            let comm = (&(&a0 * &a1) - &(&a1 * &a0)).scaled(c(0.0, 0.5));
            assert!(comm.max_abs_diff(&z.scaled(c(sin_theta(&g), 0.0))).unwrap() <= 1e-12);
            let anti = (&(&a0 * &a1) + &(&a1 * &a0)).scaled(c(0.5, 0.0));
            assert!(
                anti.max_abs_diff(&id.scaled(c(cos_theta(&g), 0.0)))
                    .unwrap()
                    <= 1e-12
            );
            let (s, co) = (sin_theta(&g), cos_theta(&g));
            assert!((s * s + co * co - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn geometry_size_checks() {
        assert!(Geometry::orthogonal(1).is_err());
        assert!(Geometry::aligned(17).is_err());
        assert_eq!(Geometry::orthogonal(3).unwrap().cos_thetas().len(), 3);
    }
}
