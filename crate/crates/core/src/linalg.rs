//! Dense complex linear algebra for the matrix oracle.
//!
//! Nothing here knows about Bell operators. The eigensolver is a cyclic
//! Jacobi method on the Hermitian matrix, so the matrix route shares no code
//! with the closed-form spectrum it is used to check.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::{Error, Result};

const MAX_DIM: usize = 1 << 16;
const HERMITIAN_TOL: f64 = 1e-10;
const NORMALIZED_TOL: f64 = 1e-10;
const JACOBI_REL_TOL: f64 = 1e-13;
const JACOBI_MAX_SWEEPS: usize = 100;

fn check_dim(dim: usize) -> Result<()> {
    if dim > MAX_DIM {
        Err(Error::DimensionOverflow(dim))
    } else if dim < 2 || !dim.is_power_of_two() {
        Err(Error::BadMatrixDimension(dim))
    } else {
        Ok(())
    }
}

/// Square complex matrix of power-of-two dimension, stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(ComplexMatrix {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for i in 0..dim {
            m.data[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        Ok(m)
    }

    pub fn from_vec(dim: usize, data: Vec<Complex64>) -> Result<Self> {
        check_dim(dim)?;
        if data.len() != dim * dim {
            return Err(Error::Dimension {
                expected: dim * dim,
                found: data.len(),
            });
        }
        Ok(ComplexMatrix { dim, data })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Result<Self> {
        check_dim(dim)?;
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Ok(ComplexMatrix { dim, data })
    }

    fn two_by_two(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        ComplexMatrix {
            dim: 2,
            data: vec![a, b, c, d],
        }
    }

    pub fn pauli_x() -> Self {
        let (o, l) = (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
        Self::two_by_two(o, l, l, o)
    }

    pub fn pauli_y() -> Self {
        let o = Complex64::new(0.0, 0.0);
        Self::two_by_two(o, Complex64::new(0.0, -1.0), Complex64::new(0.0, 1.0), o)
    }

    pub fn pauli_z() -> Self {
        let o = Complex64::new(0.0, 0.0);
        Self::two_by_two(Complex64::new(1.0, 0.0), o, o, Complex64::new(-1.0, 0.0))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.data[row * self.dim + col] = value;
    }

    pub fn column(&self, col: usize) -> StateVector {
        StateVector {
            amps: (0..self.dim).map(|i| self.get(i, col)).collect(),
        }
    }

    pub fn adjoint(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.dim, |i, j| self.get(j, i).conj()).expect("same dim")
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn scaled(&self, factor: Complex64) -> ComplexMatrix {
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, factor: Complex64, other: &ComplexMatrix) -> Result<()> {
        self.same_dim(other)?;
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += factor * b;
        }
        Ok(())
    }

    pub fn matmul(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.same_dim(other)?;
        let d = self.dim;
        let mut out = vec![Complex64::new(0.0, 0.0); d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.data[i * d + k];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let row = &other.data[k * d..(k + 1) * d];
                for (o, b) in out[i * d..(i + 1) * d].iter_mut().zip(row) {
                    *o += a * b;
                }
            }
        }
        Ok(ComplexMatrix { dim: d, data: out })
    }

    pub fn frobenius_norm(&self) -> f64 {
        libm::sqrt(self.data.iter().map(|z| z.norm_sqr()).sum())
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> Result<f64> {
        self.same_dim(other)?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// `max |m - m^dagger|` over entries.
    pub fn hermitian_deviation(&self) -> f64 {
        let d = self.dim;
        let mut worst: f64 = 0.0;
        for i in 0..d {
            for j in i..d {
                worst = worst.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_deviation() <= tol
    }

    /// True when every off-diagonal entry is at most `tol` in modulus.
    pub fn is_diagonal(&self, tol: f64) -> bool {
        let d = self.dim;
        (0..d).all(|i| (0..d).all(|j| i == j || self.get(i, j).norm() <= tol))
    }

    fn same_dim(&self, other: &ComplexMatrix) -> Result<()> {
        crate::check_same_n(self.dim, other.dim)
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        let mut out = self.clone();
        out.add_scaled(Complex64::new(1.0, 0.0), rhs)
            .expect("matrix dimensions differ");
        out
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        let mut out = self.clone();
        out.add_scaled(Complex64::new(-1.0, 0.0), rhs)
            .expect("matrix dimensions differ");
        out
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.matmul(rhs).expect("matrix dimensions differ")
    }
}

/// Tensor product `a ⊗ b`; the left factor indexes the high-order bits.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    let dim = a
        .dim
        .checked_mul(b.dim)
        .ok_or(Error::DimensionOverflow(usize::MAX))?;
    check_dim(dim)?;
    let mut data = vec![Complex64::new(0.0, 0.0); dim * dim];
    for ai in 0..a.dim {
        for aj in 0..a.dim {
            let x = a.get(ai, aj);
            if x == Complex64::new(0.0, 0.0) {
                continue;
            }
            for bi in 0..b.dim {
                let row = (ai * b.dim + bi) * dim + aj * b.dim;
                for bj in 0..b.dim {
                    data[row + bj] = x * b.get(bi, bj);
                }
            }
        }
    }
    Ok(ComplexMatrix { dim, data })
}

/// Pure state amplitudes in a power-of-two dimensional space.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    amps: Vec<Complex64>,
}

impl StateVector {
    pub fn new(amps: Vec<Complex64>) -> Result<Self> {
        check_dim(amps.len())?;
        if amps.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NotNormalized { norm: f64::NAN });
        }
        Ok(StateVector { amps })
    }

    /// Computational basis vector `|index>`.
    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        check_dim(dim)?;
        if index >= dim {
            return Err(Error::Dimension {
                expected: dim,
                found: index,
            });
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); dim];
        amps[index] = Complex64::new(1.0, 0.0);
        Ok(StateVector { amps })
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn get(&self, index: usize) -> Complex64 {
        self.amps[index]
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.amps.iter().map(|z| z.norm_sqr()).sum())
    }

    pub fn is_normalized(&self) -> bool {
        (self.norm() - 1.0).abs() <= NORMALIZED_TOL
    }

    pub fn normalized(&self) -> Result<StateVector> {
        let norm = self.norm();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::NotNormalized { norm });
        }
        Ok(self.scaled(Complex64::new(1.0 / norm, 0.0)))
    }

    pub fn scaled(&self, factor: Complex64) -> StateVector {
        StateVector {
            amps: self.amps.iter().map(|z| z * factor).collect(),
        }
    }

    /// `self + factor * other`.
    pub fn plus_scaled(&self, factor: Complex64, other: &StateVector) -> Result<StateVector> {
        crate::check_same_n(self.dim(), other.dim())?;
        Ok(StateVector {
            amps: self
                .amps
                .iter()
                .zip(&other.amps)
                .map(|(a, b)| a + factor * b)
                .collect(),
        })
    }

    /// `<self|other>`, antilinear in `self`.
    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        crate::check_same_n(self.dim(), other.dim())?;
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    pub fn kron(&self, other: &StateVector) -> Result<StateVector> {
        let dim = self.dim() * other.dim();
        check_dim(dim)?;
        let mut amps = Vec::with_capacity(dim);
        for a in &self.amps {
            for b in &other.amps {
                amps.push(a * b);
            }
        }
        Ok(StateVector { amps })
    }

    /// Euclidean distance to `other`.
    pub fn distance(&self, other: &StateVector) -> Result<f64> {
        crate::check_same_n(self.dim(), other.dim())?;
        Ok(libm::sqrt(
            self.amps
                .iter()
                .zip(&other.amps)
                .map(|(a, b)| (a - b).norm_sqr())
                .sum(),
        ))
    }
}

/// Matrix–vector product.
pub fn apply(m: &ComplexMatrix, v: &StateVector) -> Result<StateVector> {
    crate::check_same_n(m.dim, v.dim())?;
    let d = m.dim;
    let amps = (0..d)
        .map(|i| {
            m.data[i * d..(i + 1) * d]
                .iter()
                .zip(&v.amps)
                .map(|(a, b)| a * b)
                .sum()
        })
        .collect();
    Ok(StateVector { amps })
}

/// `<v|m|v>` for a Hermitian `m` and normalized `v`.
pub fn expectation(m: &ComplexMatrix, v: &StateVector) -> Result<f64> {
    let deviation = m.hermitian_deviation();
    if deviation > HERMITIAN_TOL {
        return Err(Error::NotHermitian { deviation });
    }
    if !v.is_normalized() {
        return Err(Error::NotNormalized { norm: v.norm() });
    }
    let value = v.inner(&apply(m, v)?)?;
    if value.im.abs() > HERMITIAN_TOL * m.max_abs().max(1.0) {
        return Err(Error::NonRealExpectation(value.im));
    }
    Ok(value.re)
}

/// Eigenvalues in ascending order with matching orthonormal eigenvectors.
#[derive(Clone, Debug)]
pub struct Eigensystem {
    pub values: Vec<f64>,
    pub vectors: Vec<StateVector>,
}

impl Eigensystem {
    /// `sum_i lambda_i v_i v_i^dagger`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let d = self.values.len();
        ComplexMatrix::from_fn(d, |i, j| {
            self.values
                .iter()
                .zip(&self.vectors)
                .map(|(&l, v)| v.get(i) * v.get(j).conj() * l)
                .sum()
        })
        .expect("eigensystem dimension")
    }
}

/// Diagonalizes a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// Each rotation first removes the phase of the pivot `a_pq` and then applies
/// the real symmetric Jacobi rotation to the resulting real 2x2 block.
/// Iteration stops once the off-diagonal Frobenius mass falls below
/// `1e-13 * ||m||_F`.
pub fn hermitian_eigensystem(m: &ComplexMatrix) -> Result<Eigensystem> {
    let deviation = m.hermitian_deviation();
    if deviation > HERMITIAN_TOL {
        return Err(Error::NotHermitian { deviation });
    }
    let d = m.dim;
    // Work on the exactly Hermitian part.
    let mut a = ComplexMatrix::from_fn(d, |i, j| (m.get(i, j) + m.get(j, i).conj()) * 0.5)?;
    let mut v = ComplexMatrix::identity(d)?;
    let threshold = JACOBI_REL_TOL * m.frobenius_norm();

    let off_diagonal = |a: &ComplexMatrix| -> f64 {
        let mut sum = 0.0;
        for i in 0..d {
            for j in 0..d {
                if i != j {
                    sum += a.get(i, j).norm_sqr();
                }
            }
        }
        libm::sqrt(sum)
    };

    let mut converged = false;
    for _ in 0..JACOBI_MAX_SWEEPS {
        if off_diagonal(&a) <= threshold {
            converged = true;
            break;
        }
        for p in 0..d - 1 {
            for q in p + 1..d {
                let apq = a.get(p, q);
                let r = apq.norm();
                if r == 0.0 {
                    continue;
                }
                let phase = apq / r;
                let app = a.get(p, p).re;
                let aqq = a.get(q, q).re;
                let theta = (aqq - app) / (2.0 * r);
                let t = if theta == 0.0 {
                    1.0
                } else {
                    let t = 1.0 / (theta.abs() + libm::sqrt(theta * theta + 1.0));
                    if theta < 0.0 {
                        -t
                    } else {
                        t
                    }
                };
                let c = 1.0 / libm::sqrt(1.0 + t * t);
                let s = t * c;
                // U = diag(1, conj(phase)) * [[c, s], [-s, c]]
                let u_pp = Complex64::new(c, 0.0);
                let u_pq = Complex64::new(s, 0.0);
                let u_qp = phase.conj() * -s;
                let u_qq = phase.conj() * c;

                for k in 0..d {
                    let akp = a.get(k, p);
                    let akq = a.get(k, q);
                    a.set(k, p, akp * u_pp + akq * u_qp);
                    a.set(k, q, akp * u_pq + akq * u_qq);
                }
                for k in 0..d {
                    let apk = a.get(p, k);
                    let aqk = a.get(q, k);
                    a.set(p, k, u_pp.conj() * apk + u_qp.conj() * aqk);
                    a.set(q, k, u_pq.conj() * apk + u_qq.conj() * aqk);
                }
                a.set(p, q, Complex64::new(0.0, 0.0));
                a.set(q, p, Complex64::new(0.0, 0.0));
                a.set(p, p, Complex64::new(a.get(p, p).re, 0.0));
                a.set(q, q, Complex64::new(a.get(q, q).re, 0.0));

                for k in 0..d {
                    let vkp = v.get(k, p);
                    let vkq = v.get(k, q);
                    v.set(k, p, vkp * u_pp + vkq * u_qp);
                    v.set(k, q, vkp * u_pq + vkq * u_qq);
                }
            }
        }
    }
    if !converged && off_diagonal(&a) > threshold {
        return Err(Error::NoConvergence {
            sweeps: JACOBI_MAX_SWEEPS,
        });
    }

    let mut order: Vec<usize> = (0..d).collect();
    // Stable sort keeps the original index order among ties.
    order.sort_by(|&i, &j| a.get(i, i).re.total_cmp(&a.get(j, j).re));
    Ok(Eigensystem {
        values: order.iter().map(|&i| a.get(i, i).re).collect(),
        vectors: order.iter().map(|&i| v.column(i)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_hermitian(rng: &mut ChaCha8Rng, dim: usize) -> ComplexMatrix {
        let raw = ComplexMatrix::from_fn(dim, |_, _| {
            c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        })
        .unwrap();
        &raw + &raw.adjoint()
    }

    fn random_matrix(rng: &mut ChaCha8Rng, dim: usize) -> ComplexMatrix {
        ComplexMatrix::from_fn(dim, |_, _| {
            c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        })
        .unwrap()
    }

    #[test]
    fn kron_examples() {
        let i2 = ComplexMatrix::identity(2).unwrap();
        assert_eq!(kron(&i2, &i2).unwrap(), ComplexMatrix::identity(4).unwrap());

        let zz = kron(&ComplexMatrix::pauli_z(), &ComplexMatrix::pauli_z()).unwrap();
        for (i, d) in [1.0, -1.0, -1.0, 1.0].into_iter().enumerate() {
            assert_eq!(zz.get(i, i), c(d, 0.0));
        }
        assert!(zz.is_diagonal(0.0));

        // x ⊗ y: row 0 of x is (0, 1), row 0 of y is (0, -i), so entry (0, 3) = 1 * -i.
        let xy = kron(&ComplexMatrix::pauli_x(), &ComplexMatrix::pauli_y()).unwrap();
        assert_eq!(xy.get(0, 3), c(0.0, -1.0));
        assert_eq!(xy.get(0, 0), c(0.0, 0.0));
    }

    #[test]
    fn kron_rejects_oversized_products() {
        let big = ComplexMatrix::identity(256).unwrap();
        let small = ComplexMatrix::identity(512).unwrap();
        assert_eq!(
            kron(&big, &small).unwrap_err(),
            Error::DimensionOverflow(1 << 17)
        );
    }

    #[test]
    fn kron_associativity_and_trace() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let a = random_matrix(&mut rng, 2);
            let b = random_matrix(&mut rng, 4);
            let m = random_matrix(&mut rng, 2);
            let left = kron(&kron(&a, &b).unwrap(), &m).unwrap();
            let right = kron(&a, &kron(&b, &m).unwrap()).unwrap();
            assert!(left.max_abs_diff(&right).unwrap() <= 1e-12);
            let ab = kron(&a, &b).unwrap();
            assert!((ab.trace() - a.trace() * b.trace()).norm() <= 1e-10);
        }
        let x = ComplexMatrix::pauli_x();
        let y = ComplexMatrix::pauli_y();
        let z = ComplexMatrix::pauli_z();
        let l = kron(&kron(&x, &y).unwrap(), &z).unwrap();
        let r = kron(&x, &kron(&y, &z).unwrap()).unwrap();
        assert_eq!(l, r);
    }

    #[test]
    fn pauli_z_spectrum() {
        let es = hermitian_eigensystem(&ComplexMatrix::pauli_z()).unwrap();
        assert_eq!(es.values, [-1.0, 1.0]);
    }

    #[test]
    fn pauli_x_spectrum_and_vectors() {
        let es = hermitian_eigensystem(&ComplexMatrix::pauli_x()).unwrap();
        assert!((es.values[0] + 1.0).abs() < 1e-14);
        assert!((es.values[1] - 1.0).abs() < 1e-14);
        let h = core::f64::consts::FRAC_1_SQRT_2;
        let minus = StateVector::new(alloc::vec![c(h, 0.0), c(-h, 0.0)]).unwrap();
        let plus = StateVector::new(alloc::vec![c(h, 0.0), c(h, 0.0)]).unwrap();
        assert!((es.vectors[0].inner(&minus).unwrap().norm() - 1.0).abs() < 1e-12);
        assert!((es.vectors[1].inner(&plus).unwrap().norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn eigensystem_rejects_non_hermitian() {
        let mut m = ComplexMatrix::pauli_x();
        m.set(0, 1, c(2.0, 0.0));
        assert!(matches!(
            hermitian_eigensystem(&m),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn eigensystem_reconstructs_random_hermitian() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for &dim in &[2usize, 4, 8, 16, 32, 64] {
            let m = random_hermitian(&mut rng, dim);
            let es = hermitian_eigensystem(&m).unwrap();
            assert!(es.values.windows(2).all(|w| w[0] <= w[1]));
            assert!(
                es.reconstruct().max_abs_diff(&m).unwrap() <= 1e-8,
                "dim {dim}"
            );
            let scale = m.frobenius_norm();
            for (l, v) in es.values.iter().zip(&es.vectors) {
                let residual = apply(&m, v)
                    .unwrap()
                    .plus_scaled(c(-l, 0.0), v)
                    .unwrap()
                    .norm();
                assert!(residual <= 1e-9 * scale);
            }
            for i in 0..dim {
                for j in 0..dim {
                    let ip = es.vectors[i].inner(&es.vectors[j]).unwrap();
                    let expected = if i == j { 1.0 } else { 0.0 };
                    assert!((ip - c(expected, 0.0)).norm() <= 1e-9);
                }
            }
        }
    }

    #[test]
    fn eigensystem_handles_degenerate_and_zero() {
        let zero = ComplexMatrix::zeros(4).unwrap();
        assert_eq!(hermitian_eigensystem(&zero).unwrap().values, [0.0; 4]);
        let id = ComplexMatrix::identity(8).unwrap();
        assert_eq!(hermitian_eigensystem(&id).unwrap().values, [1.0; 8]);
    }

    #[test]
    fn apply_examples() {
        let v = StateVector::new(alloc::vec![c(0.3, 0.1), c(-0.2, 0.5)]).unwrap();
        assert_eq!(apply(&ComplexMatrix::identity(2).unwrap(), &v).unwrap(), v);
        let e0 = StateVector::basis(2, 0).unwrap();
        assert_eq!(
            apply(&ComplexMatrix::pauli_x(), &e0).unwrap(),
            StateVector::basis(2, 1).unwrap()
        );
        assert!(apply(&ComplexMatrix::identity(4).unwrap(), &v).is_err());
    }

    #[test]
    fn expectation_examples() {
        let z = ComplexMatrix::pauli_z();
        let e0 = StateVector::basis(2, 0).unwrap();
        assert_eq!(expectation(&z, &e0).unwrap(), 1.0);
        let h = core::f64::consts::FRAC_1_SQRT_2;
        let plus = StateVector::new(alloc::vec![c(h, 0.0), c(h, 0.0)]).unwrap();
        assert!(expectation(&z, &plus).unwrap().abs() < 1e-15);
        let unnormalized = StateVector::new(alloc::vec![c(1.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert!(matches!(
            expectation(&z, &unnormalized),
            Err(Error::NotNormalized { .. })
        ));
        assert!((unnormalized.normalized().unwrap().norm() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn dimension_validation() {
        assert!(ComplexMatrix::zeros(3).is_err());
        assert!(ComplexMatrix::zeros(1).is_err());
        assert!(StateVector::new(alloc::vec![c(1.0, 0.0)]).is_err());
        assert!(StateVector::basis(4, 4).is_err());
    }
}
