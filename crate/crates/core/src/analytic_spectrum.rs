//! Closed-form spectrum of `B_f^2`.
//!
//! `B_f^2 = 1 + sum_p C_p(f) ⊗_{k in p} sin(theta_k) Z_k`, the sum running
//! over non-empty even subsets `p` of particles. Every product state `|w>`
//! is therefore an eigenvector of `B_f^2` with eigenvalue
//!
//! ```text
//! lambda_f^2(w) = 1 + sum_p C_p(f) prod_{k in p} w_k sin(theta_k)
//! ```
//!
//! and the coefficients only need `f` and the `cos theta_k`:
//!
//! ```text
//! C_p(f) = (-1)^{#p/2} 2^-n sum_{q ⊆ p^c} prod_{k in q} (1 + a_k) prod_{k in p^c \ q} (1 - a_k)
//!              * sum_{r ⊆ p} (-1)^{#r} f(Q + (p \ r)) f(Q + r),      Q = p^c \ q
//! ```
//!
//! with `a_k = cos theta_k`. Nothing in this module builds a matrix.

use alloc::vec;
use alloc::vec::Vec;

use crate::bell_operator::Configuration;
use crate::boolean_group::{
    characters, even_subsets, full_mask, parity, particle_bit, walsh_hadamard, SetupVector,
    SignVector,
};
use crate::geometry::Geometry;
use crate::{check_particles, check_same_n, Error, Result};

/// Negative `lambda^2` down to `-NEGATIVE_FAIL` is roundoff and clamped to 0;
/// anything lower is a hard failure.
pub const NEGATIVE_FAIL: f64 = 1e-6;
/// Slack allowed when comparing the spectral radius with its aligned bound.
pub const RADIUS_TOL: f64 = 1e-9;
const COEFF_BOUND_TOL: f64 = 1e-12;

/// Iterates all submasks of `mask`, including `mask` itself and 0.
fn submasks(mask: u32) -> impl Iterator<Item = u32> {
    let mut next = Some(mask);
    core::iter::from_fn(move || {
        let current = next?;
        next = if current == 0 {
            None
        } else {
            Some((current - 1) & mask)
        };
        Some(current)
    })
}

/// `prod_{k in q} (1 + a_k) prod_{k in within \ q} (1 - a_k)`.
fn subset_weight(n: usize, a: &[f64], within: u32, q: u32) -> f64 {
    (0..n)
        .filter(|&k| within & particle_bit(n, k) != 0)
        .map(|k| {
            if q & particle_bit(n, k) != 0 {
                1.0 + a[k]
            } else {
                1.0 - a[k]
            }
        })
        .product()
}

/// `sum_{q ⊆ K} prod_{k in q} (1 + a_k) prod_{k in K \ q} (1 - a_k)` over the
/// full index set `K = {0, .., a.len() - 1}`; always `2^{|K|}`.
pub fn partition_weight_sum(a: &[f64]) -> f64 {
    let n = a.len();
    assert!(n <= 30, "index set too large");
    if n == 0 {
        return 1.0;
    }
    let all = ((1u64 << n) - 1) as u32;
    submasks(all).map(|q| subset_weight(n, a, all, q)).sum()
}

fn check_even_subset(p: SetupVector) -> Result<()> {
    if p.is_zero() || !p.is_even() {
        Err(Error::NotEvenSubset { p: p.bits() })
    } else {
        Ok(())
    }
}

fn half_weight_sign(p: u32) -> f64 {
    if (p.count_ones() / 2).is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// `C_p(f)` for a geometry, by direct enumeration over `q ⊆ p^c` and `r ⊆ p`.
pub fn coefficient(f: &SignVector, g: &Geometry, p: SetupVector) -> Result<f64> {
    let n = f.n();
    check_same_n(n, g.n())?;
    check_same_n(n, p.n())?;
    check_even_subset(p)?;
    let a = g.cos_thetas();
    Ok(coefficient_with(f, &a, p.bits()))
}

fn coefficient_with(f: &SignVector, a: &[f64], p: u32) -> f64 {
    let n = f.n();
    let outside = full_mask(n) ^ p;
    let mut total = 0.0;
    for q in submasks(outside) {
        let weight = subset_weight(n, a, outside, q);
        // Sites of p^c that carry the (-1)^{s_k + s'_k} factor.
        let signed = outside ^ q;
        let mut inner: i64 = 0;
        for r in submasks(p) {
            let g = f.get((signed | (p ^ r)) as usize) as i64 * f.get((signed | r) as usize) as i64;
            inner += if parity(r) == 0 { g } else { -g };
        }
        total += weight * inner as f64;
    }
    half_weight_sign(p) * total / (1u64 << n) as f64
}

/// `C_p(f)` at `cos theta_k = 0`:
/// `(-1)^{#p/2} 2^-n sum_s (-1)^<p,s> f(s) f(s+p)`.
///
/// The sum is exact integer arithmetic, so the result is an exact dyadic.
pub fn coefficient_bar(f: &SignVector, p: SetupVector) -> Result<f64> {
    check_same_n(f.n(), p.n())?;
    check_even_subset(p)?;
    Ok(coefficient_bar_exact(f, p.bits()) as f64 / (1u64 << f.n()) as f64)
}

/// `2^n * C̄_p(f)` as an integer.
pub(crate) fn coefficient_bar_exact(f: &SignVector, p: u32) -> i64 {
    let values = f.values();
    let chi = characters(p, f.n());
    let sum: i64 = chi
        .iter()
        .zip(values)
        .enumerate()
        .map(|(s, (&c, &v))| (c * v * values[s ^ p as usize]) as i64)
        .sum();
    if (p.count_ones() / 2).is_multiple_of(2) {
        sum
    } else {
        -sum
    }
}

/// `C_p(f)` for every non-empty even subset `p`, in ascending order of `p`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientTable {
    n: usize,
    subsets: Vec<SetupVector>,
    values: Vec<f64>,
}

impl CoefficientTable {
    /// Wraps precomputed coefficients listed in the order of
    /// [`even_subsets`]. Each value must satisfy `|C_p| <= 1`.
    pub fn from_values(n: usize, values: Vec<f64>) -> Result<Self> {
        let subsets = even_subsets(n)?;
        check_same_n(subsets.len(), values.len())?;
        if let Some(&v) = values
            .iter()
            .find(|v| v.is_nan() || v.abs() > 1.0 + COEFF_BOUND_TOL)
        {
            return Err(Error::CoefficientBound { value: v });
        }
        Ok(CoefficientTable { n, subsets, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn subsets(&self) -> &[SetupVector] {
        &self.subsets
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn get(&self, p: SetupVector) -> Option<f64> {
        self.subsets.binary_search(&p).ok().map(|i| self.values[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (SetupVector, f64)> + '_ {
        self.subsets
            .iter()
            .copied()
            .zip(self.values.iter().copied())
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.abs()).fold(0.0, f64::max)
    }
}

pub fn coefficient_table(f: &SignVector, g: &Geometry) -> Result<CoefficientTable> {
    check_same_n(f.n(), g.n())?;
    let a = g.cos_thetas();
    let subsets = even_subsets(f.n())?;
    let values = subsets
        .iter()
        .map(|p| coefficient_with(f, &a, p.bits()))
        .collect();
    CoefficientTable::from_values(f.n(), values)
}

/// Table of `C̄_p(f)`, the coefficients at `cos theta_k = 0`.
pub fn coefficient_bar_table(f: &SignVector) -> Result<CoefficientTable> {
    let scale = (1u64 << f.n()) as f64;
    let values = even_subsets(f.n())?
        .iter()
        .map(|p| coefficient_bar_exact(f, p.bits()) as f64 / scale)
        .collect();
    CoefficientTable::from_values(f.n(), values)
}

fn clamp_lambda_sq(value: f64) -> Result<f64> {
    if value >= 0.0 {
        Ok(value)
    } else if value >= -NEGATIVE_FAIL {
        Ok(0.0)
    } else {
        Err(Error::NegativeEigenvalue { value })
    }
}

/// `lambda_f^2(w) = 1 + sum_p C_p prod_{k in p} w_k sin theta_k`.
pub fn eigenvalue_sq(table: &CoefficientTable, g: &Geometry, w: &Configuration) -> Result<f64> {
    check_same_n(table.n(), g.n())?;
    check_same_n(table.n(), w.n())?;
    let n = table.n();
    let sines = g.sin_thetas();
    let mut total = 1.0;
    for (p, c) in table.iter() {
        let factor: f64 = (0..n)
            .filter(|&k| p.get(k))
            .map(|k| w.sign(k) as f64 * sines[k])
            .product();
        total += c * factor;
    }
    clamp_lambda_sq(total)
}

/// `lambda_f^2(w)` for every configuration, indexed by basis index.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumTable {
    n: usize,
    values: Vec<f64>,
}

impl SpectrumTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn get(&self, w: &Configuration) -> f64 {
        self.values[w.index()]
    }

    pub fn iter(&self) -> impl Iterator<Item = (Configuration, f64)> + '_ {
        Configuration::all(self.n)
            .expect("valid n")
            .zip(self.values.iter().copied())
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn max(&self) -> f64 {
        self.values.iter().copied().fold(0.0, f64::max)
    }

    /// `sum_w lambda^2(w) - 2^n`.
    pub fn sum_rule_residual(&self) -> f64 {
        self.sum() - (1u64 << self.n) as f64
    }

    /// Values sorted ascending.
    pub fn sorted(&self) -> Vec<f64> {
        let mut v = self.values.clone();
        v.sort_by(f64::total_cmp);
        v
    }
}

/// Evaluates `lambda^2` on all configurations at once.
///
/// With `c(p) = C_p prod_{k in p} sin theta_k` (and `c(0) = 1`), the
/// eigenvalue at basis index `b` is `sum_p c(p) (-1)^<p,b>`, one
/// Walsh–Hadamard transform. Antipodal entries are copied from the
/// canonical half so `lambda^2(w) = lambda^2(w~)` holds exactly.
pub fn spectrum_from_table(table: &CoefficientTable, g: &Geometry) -> Result<SpectrumTable> {
    check_same_n(table.n(), g.n())?;
    let n = table.n();
    check_particles(n)?;
    let sines = g.sin_thetas();
    let mut c = vec![0.0f64; 1 << n];
    c[0] = 1.0;
    for (p, value) in table.iter() {
        let factor: f64 = (0..n).filter(|&k| p.get(k)).map(|k| sines[k]).product();
        c[p.index()] = value * factor;
    }
    walsh_hadamard(&mut c);
    let mask = full_mask(n) as usize;
    let half = 1usize << (n - 1);
    for b in 0..half {
        c[b] = clamp_lambda_sq(c[b])?;
        c[b ^ mask] = c[b];
    }
    Ok(SpectrumTable { n, values: c })
}

pub fn spectrum(f: &SignVector, g: &Geometry) -> Result<SpectrumTable> {
    spectrum_from_table(&coefficient_table(f, g)?, g)
}

/// `sqrt(1 + sum_p |C_p| prod_{k in p} |sin theta_k|)`.
///
/// This equals the spectral radius whenever one configuration makes every
/// term of `lambda^2(w)` non-negative, and bounds it from above otherwise.
pub fn aligned_radius_bound(table: &CoefficientTable, g: &Geometry) -> Result<f64> {
    check_same_n(table.n(), g.n())?;
    let n = table.n();
    let sines = g.sin_thetas();
    let total: f64 = 1.0
        + table
            .iter()
            .map(|(p, c)| {
                c.abs()
                    * (0..n)
                        .filter(|&k| p.get(k))
                        .map(|k| sines[k].abs())
                        .product::<f64>()
            })
            .sum::<f64>();
    Ok(libm::sqrt(total))
}

/// Everything the closed form says about one `(f, geometry)`.
#[derive(Clone, Debug)]
pub struct SpectralAnalysis {
    pub coefficients: CoefficientTable,
    pub spectrum: SpectrumTable,
    /// `max_w lambda_f(w)`.
    pub spectral_radius: f64,
    /// [`aligned_radius_bound`] of the same table.
    pub aligned_bound: f64,
    pub sum_rule_residual: f64,
}

impl SpectralAnalysis {
    pub fn from_table(coefficients: CoefficientTable, g: &Geometry) -> Result<Self> {
        let spectrum = spectrum_from_table(&coefficients, g)?;
        let spectral_radius = libm::sqrt(spectrum.max());
        let aligned_bound = aligned_radius_bound(&coefficients, g)?;
        if spectral_radius > aligned_bound + RADIUS_TOL {
            return Err(Error::FormulaInconsistency {
                radius: spectral_radius,
                bound: aligned_bound,
            });
        }
        let sum_rule_residual = spectrum.sum_rule_residual();
        Ok(SpectralAnalysis {
            coefficients,
            spectrum,
            spectral_radius,
            aligned_bound,
            sum_rule_residual,
        })
    }

    /// True when some configuration aligns every term, so the aligned
    /// formula gives the radius exactly.
    pub fn is_aligned(&self) -> bool {
        (self.aligned_bound - self.spectral_radius).abs() <= RADIUS_TOL
    }
}

pub fn analyze(f: &SignVector, g: &Geometry) -> Result<SpectralAnalysis> {
    SpectralAnalysis::from_table(coefficient_table(f, g)?, g)
}

/// `Lambda_f = max_w lambda_f(w)`, cross-checked against
/// [`aligned_radius_bound`].
pub fn spectral_radius(f: &SignVector, g: &Geometry) -> Result<f64> {
    analyze(f, g).map(|a| a.spectral_radius)
}
