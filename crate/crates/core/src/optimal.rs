//! Optimal sign vectors.
//!
//! `f` reaches the largest possible spectral radius `2^{(n-1)/2}` exactly
//! when `C̄_p(f) = 1` for every non-empty even `p`, which is equivalent to
//!
//! ```text
//! f(s) f(s + p) = (-1)^{<p,s> + #p/2}    for all s, all p in P_n.
//! ```
//!
//! `P_n` acts on the setups with two orbits (even and odd weight), so the
//! values `f(0…0)` and `f(0…01)` determine `f`, giving four solutions in two
//! pairs `{f, -f}`.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::analytic_spectrum::{
    analyze, coefficient_bar_table, coefficient_table, spectrum_from_table, CoefficientTable,
};
use crate::boolean_group::{characters, even_subgroup, full_mask, parity, SetupVector, SignVector};
use crate::geometry::Geometry;
use crate::{check_particles, Error, Result};

const CBAR_TOL: f64 = 1e-12;
const RADIUS_TOL: f64 = 1e-9;

/// Largest spectral radius any `(n,2,2)` Bell operator can reach.
pub fn max_radius(n: usize) -> f64 {
    libm::pow(2.0, (n as f64 - 1.0) / 2.0)
}

/// `(-1)^{<p,s> + #p/2}` as `±1`.
fn constraint_sign(s: u32, p: u32) -> i8 {
    let exponent = parity(p & s) + (p.count_ones() / 2) % 2;
    if exponent.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `{seed + p : p in P_n}`, in the order of [`even_subgroup`].
pub fn orbit(seed: SetupVector) -> Result<Vec<SetupVector>> {
    Ok(even_subgroup(seed.n())?
        .into_iter()
        .map(|p| seed + p)
        .collect())
}

fn check_orbit_coverage(n: usize) -> Result<()> {
    for (seed_bits, want_parity) in [(0u32, 0u32), (1, 1)] {
        let seed = SetupVector::new(seed_bits, n)?;
        let mut members: Vec<u32> = orbit(seed)?.iter().map(|s| s.bits()).collect();
        members.sort_unstable();
        let class: Vec<u32> = (0..=full_mask(n))
            .filter(|&s| parity(s) == want_parity)
            .collect();
        if members != class {
            return Err(Error::OrbitCoverage { seed: seed_bits });
        }
    }
    Ok(())
}

fn check_constraints(values: &[i8], n: usize, subsets: &[SetupVector]) -> Result<()> {
    for p in subsets.iter().map(|p| p.bits()).filter(|&p| p != 0) {
        let half = constraint_sign(0, p);
        let chi = characters(p, n);
        let bad = (0..values.len()).find(|&s| values[s] * values[s ^ p as usize] != half * chi[s]);
        if let Some(s) = bad {
            return Err(Error::PropagationInconsistency { setup: s as u32, p });
        }
    }
    Ok(())
}

/// The four optimal sign vectors, by propagating the constraints from the
/// seeds `0…0` and `0…01`.
///
/// Order: `f(0…01) = +1`, `f(0…01) = -1` (both with `f(0…0) = +1`), then the
/// negations of those two.
pub fn optimal_vectors(n: usize) -> Result<Vec<SignVector>> {
    check_particles(n)?;
    check_orbit_coverage(n)?;
    let group = even_subgroup(n)?;
    let mut found = Vec::with_capacity(4);
    for odd_seed in [1i8, -1] {
        let mut values = vec![0i8; 1 << n];
        values[0] = 1;
        values[1] = odd_seed;
        for seed in [0u32, 1] {
            for p in group.iter().map(|p| p.bits()).filter(|&p| p != 0) {
                values[(seed ^ p) as usize] = values[seed as usize] * constraint_sign(seed, p);
            }
        }
        check_constraints(&values, n, &group)?;
        found.push(SignVector::new(values)?);
    }
    let negated: Vec<SignVector> = found.iter().map(|f| -f).collect();
    found.extend(negated);
    Ok(found)
}

/// Evidence that `f` is optimal.
#[derive(Clone, Debug)]
pub struct OptimalCertificate {
    pub f: SignVector,
    /// `C̄_p(f)` for every non-empty even `p`; all equal to 1.
    pub cbar: CoefficientTable,
    /// Spectral radius at the orthogonal geometry.
    pub lambda_max: f64,
}

/// `Some(certificate)` iff `C̄_p(f) = 1` for every non-empty even `p`.
pub fn is_optimal(f: &SignVector) -> Option<OptimalCertificate> {
    let cbar = coefficient_bar_table(f).ok()?;
    if cbar.values().iter().any(|&c| (c - 1.0).abs() > CBAR_TOL) {
        return None;
    }
    let g = Geometry::orthogonal(f.n()).ok()?;
    let spectrum = spectrum_from_table(&cbar, &g).ok()?;
    Some(OptimalCertificate {
        f: f.clone(),
        lambda_max: libm::sqrt(spectrum.max()),
        cbar,
    })
}

/// Counts optimal vectors among the sign vectors whose masks lie in
/// `masks` (entry `s` is `-1` iff bit `s` is set). Lets callers split the
/// search across threads.
pub fn exhaustive_count_range(n: usize, masks: Range<u64>) -> Result<usize> {
    if !(2..=4).contains(&n) {
        return Err(Error::ExhaustiveRange(n));
    }
    let limit = 1u64 << (1 << n);
    let masks = masks.start.min(limit)..masks.end.min(limit);
    let mut count = 0;
    for mask in masks {
        if is_optimal(&SignVector::from_mask(n, mask)?).is_some() {
            count += 1;
        }
    }
    Ok(count)
}

/// Brute-force count of optimal vectors over all `2^{2^n}` sign vectors.
pub fn exhaustive_count(n: usize) -> Result<usize> {
    if !(2..=4).contains(&n) {
        return Err(Error::ExhaustiveRange(n));
    }
    exhaustive_count_range(n, 0..1u64 << (1 << n))
}

#[derive(Clone, Debug)]
pub struct MerminEntry {
    pub f: SignVector,
    pub min_abs_coefficient: f64,
    pub max_abs_coefficient: f64,
    pub spectral_radius: f64,
    pub passed: bool,
}

#[derive(Clone, Debug)]
pub struct MerminReport {
    pub n: usize,
    pub expected_radius: f64,
    pub entries: Vec<MerminEntry>,
}

impl MerminReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }
}

/// Checks that every optimal vector saturates `|C_p| = 1` at the orthogonal
/// geometry through the general coefficient formula, and that its spectral
/// radius is `2^{(n-1)/2}`.
pub fn mermin_check(n: usize) -> Result<MerminReport> {
    if !(2..=6).contains(&n) {
        return Err(Error::MerminRange(n));
    }
    let g = Geometry::orthogonal(n)?;
    let expected_radius = max_radius(n);
    let entries = optimal_vectors(n)?
        .into_iter()
        .map(|f| {
            let table = coefficient_table(&f, &g)?;
            let analysis = analyze(&f, &g)?;
            let abs: Vec<f64> = table.values().iter().map(|c| c.abs()).collect();
            let min_abs_coefficient = abs.iter().copied().fold(f64::INFINITY, f64::min);
            let max_abs_coefficient = abs.iter().copied().fold(0.0, f64::max);
            let passed = abs.iter().all(|c| (c - 1.0).abs() <= CBAR_TOL)
                && (analysis.spectral_radius - expected_radius).abs() <= RADIUS_TOL;
            Ok(MerminEntry {
                f,
                min_abs_coefficient,
                max_abs_coefficient,
                spectral_radius: analysis.spectral_radius,
                passed,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MerminReport {
        n,
        expected_radius,
        entries,
    })
}
