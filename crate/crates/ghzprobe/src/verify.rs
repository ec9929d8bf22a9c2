//! Randomized cross-checks of the closed-form spectrum against dense
//! matrices.

use ghzprobe_core::{
    analyze, expectation, hermitian_eigensystem, BellOperator, Configuration, Geometry, SignVector,
    SpectralAnalysis,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{AppError, AppResult};
use crate::geometry_file::GeometryJson;
use crate::rng::TrialRng;

pub const MAX_VERIFY_PARTICLES: usize = 5;
pub const SPECTRUM_TOL: f64 = 1e-9;
pub const PAIRING_TOL: f64 = 1e-9;
pub const SUM_RULE_TOL: f64 = 1e-9;
pub const COEFFICIENT_TOL: f64 = 1e-12;
pub const PERMUTATION_TOL: f64 = 1e-10;
pub const PROJECTION_TOL: f64 = 1e-9;
pub const SEPARABLE_TOL: f64 = 1e-9;
pub const DEFAULT_PRODUCT_STATES: usize = 8;

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub n: usize,
    pub trials: u64,
    pub seed: u64,
    /// Replaces the random geometry of every trial.
    pub geometry: Option<Geometry>,
    pub product_states: usize,
}

impl VerifyOptions {
    pub fn new(n: usize, trials: u64, seed: u64) -> Self {
        VerifyOptions {
            n,
            trials,
            seed,
            geometry: None,
            product_states: DEFAULT_PRODUCT_STATES,
        }
    }

    fn validate(&self) -> AppResult<()> {
        if !(2..=MAX_VERIFY_PARTICLES).contains(&self.n) {
            return Err(AppError::Usage(format!(
                "verify needs 2 <= n <= {MAX_VERIFY_PARTICLES}, got {}",
                self.n
            )));
        }
        if self.trials == 0 {
            return Err(AppError::Usage("verify needs at least one trial".into()));
        }
        if let Some(g) = &self.geometry {
            if g.n() != self.n {
                return Err(AppError::Usage(format!(
                    "geometry has {} sites but n = {}",
                    g.n(),
                    self.n
                )));
            }
        }
        Ok(())
    }
}

/// Residuals of one random `(f, geometry)`. Checks that could not run are
/// `NaN` (serialized as `null`).
#[derive(Clone, Debug, Serialize)]
pub struct TrialReport {
    pub trial: u64,
    pub f: String,
    pub geometry: GeometryJson,
    /// Max difference between sorted analytic `lambda^2` and eigenvalues of `B^2`.
    pub spectrum_residual: f64,
    /// Max `|mu_i + mu_{d-1-i}|` over the sorted eigenvalues of `B`.
    pub pairing_residual: f64,
    pub sum_rule_residual: f64,
    pub max_abs_coefficient: f64,
    /// Largest entry of `B` outside the antipodal positions.
    pub permutation_residual: f64,
    /// Max difference between `C_p prod sin theta_k` and the matching
    /// projection of `diag(B^2)`.
    pub projection_residual: f64,
    /// Largest `|<psi|B|psi>|` over the sampled product states.
    pub separable_max: f64,
    pub failure: Option<String>,
}

impl TrialReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

fn max_of(values: impl IntoIterator<Item = f64>) -> f64 {
    values.into_iter().fold(0.0, f64::max)
}

fn exceeds(value: f64, tol: f64) -> bool {
    value.is_nan() || value > tol
}

struct Checks {
    spectrum_residual: f64,
    pairing_residual: f64,
    sum_rule_residual: f64,
    max_abs_coefficient: f64,
    permutation_residual: f64,
    projection_residual: f64,
    separable_max: f64,
}

impl Checks {
    fn unset() -> Self {
        Checks {
            spectrum_residual: f64::NAN,
            pairing_residual: f64::NAN,
            sum_rule_residual: f64::NAN,
            max_abs_coefficient: f64::NAN,
            permutation_residual: f64::NAN,
            projection_residual: f64::NAN,
            separable_max: f64::NAN,
        }
    }

    fn first_failure(&self) -> Option<String> {
        let limits = [
            ("spectrum", self.spectrum_residual, SPECTRUM_TOL),
            ("pairing", self.pairing_residual, PAIRING_TOL),
            ("sum rule", self.sum_rule_residual.abs(), SUM_RULE_TOL),
            (
                "coefficient bound",
                self.max_abs_coefficient,
                1.0 + COEFFICIENT_TOL,
            ),
            ("permutation", self.permutation_residual, PERMUTATION_TOL),
            ("projection", self.projection_residual, PROJECTION_TOL),
            ("separable bound", self.separable_max, 1.0 + SEPARABLE_TOL),
        ];
        limits
            .iter()
            .find(|(_, v, tol)| exceeds(*v, *tol))
            .map(|(name, v, tol)| format!("{name}: {v:e} exceeds {tol:e}"))
    }
}

fn projection_residual(op: &BellOperator, analysis: &SpectralAnalysis, diag: &[f64]) -> f64 {
    let n = op.n();
    let sines = op.geometry().sin_thetas();
    let scale = 1.0 / diag.len() as f64;
    max_of(analysis.coefficients.iter().map(|(p, c)| {
        let predicted: f64 = c
            * (0..n)
                .filter(|&k| p.get(k))
                .map(|k| sines[k])
                .product::<f64>();
        let projected: f64 = diag
            .iter()
            .enumerate()
            .map(|(b, &d)| {
                if (p.bits() & b as u32).count_ones().is_multiple_of(2) {
                    d
                } else {
                    -d
                }
            })
            .sum::<f64>()
            * scale;
        (predicted - projected).abs()
    }))
}

fn permutation_residual(op: &BellOperator) -> f64 {
    let m = op.matrix();
    let mask = m.dim() - 1;
    max_of((0..m.dim()).flat_map(|col| {
        (0..m.dim())
            .filter(move |&row| row != col ^ mask)
            .map(move |row| m.get(row, col).norm())
    }))
}

fn run_checks(
    f: &SignVector,
    g: &Geometry,
    rng: &mut TrialRng,
    product_states: usize,
    checks: &mut Checks,
) -> ghzprobe_core::Result<()> {
    let n = f.n();
    let analysis = analyze(f, g)?;
    checks.sum_rule_residual = analysis.sum_rule_residual;
    checks.max_abs_coefficient = analysis.coefficients.max_abs();

    let op = BellOperator::new(f, g)?;
    checks.permutation_residual = permutation_residual(&op);

    let squared = op.matrix().matmul(op.matrix())?;
    let eig_sq = hermitian_eigensystem(&squared)?;
    let analytic = analysis.spectrum.sorted();
    checks.spectrum_residual = max_of(
        analytic
            .iter()
            .zip(&eig_sq.values)
            .map(|(a, b)| (a - b).abs()),
    );
    let diag: Vec<f64> = (0..squared.dim()).map(|i| squared.get(i, i).re).collect();
    checks.projection_residual = projection_residual(&op, &analysis, &diag);

    let eig = hermitian_eigensystem(op.matrix())?;
    let d = eig.values.len();
    checks.pairing_residual = max_of((0..d).map(|i| (eig.values[i] + eig.values[d - 1 - i]).abs()));

    // beta scans each column and the GHZ pairs check their own eigen-relations.
    for w in Configuration::all(n)? {
        op.beta(&w)?;
    }
    op.full_eigensystem()?;

    checks.separable_max = 0.0;
    for _ in 0..product_states {
        let psi = rng.product_state(n);
        checks.separable_max = checks
            .separable_max
            .max(expectation(op.matrix(), &psi)?.abs());
    }
    Ok(())
}

pub fn run_trial(options: &VerifyOptions, trial: u64) -> TrialReport {
    let n = options.n;
    let mut rng = TrialRng::new(options.seed, trial);
    let f = rng.sign_vector(n);
    let random_geometry = rng.geometry(n);
    let g = options.geometry.clone().unwrap_or(random_geometry);
    let mut checks = Checks::unset();
    let failure = match run_checks(&f, &g, &mut rng, options.product_states, &mut checks) {
        Ok(()) => checks.first_failure(),
        Err(e) => Some(format!("error: {e}")),
    };
    TrialReport {
        trial,
        f: f.to_string(),
        geometry: GeometryJson::from(&g),
        spectrum_residual: checks.spectrum_residual,
        pairing_residual: checks.pairing_residual,
        sum_rule_residual: checks.sum_rule_residual,
        max_abs_coefficient: checks.max_abs_coefficient,
        permutation_residual: checks.permutation_residual,
        projection_residual: checks.projection_residual,
        separable_max: checks.separable_max,
        failure,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifySummary {
    pub spectrum_residual: f64,
    pub pairing_residual: f64,
    pub sum_rule_residual: f64,
    pub max_abs_coefficient: f64,
    pub permutation_residual: f64,
    pub projection_residual: f64,
    pub separable_max: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub trials: u64,
    pub seed: u64,
    pub passed: bool,
    pub failures: usize,
    pub max: VerifySummary,
    pub first_failure: Option<TrialReport>,
    pub results: Vec<TrialReport>,
}

/// Runs every trial, in parallel, reporting in trial order.
pub fn run_verify(options: &VerifyOptions) -> AppResult<VerifyReport> {
    options.validate()?;
    let results: Vec<TrialReport> = (0..options.trials)
        .into_par_iter()
        .map(|t| run_trial(options, t))
        .collect();
    let agg = |get: fn(&TrialReport) -> f64| max_of(results.iter().map(get));
    let max = VerifySummary {
        spectrum_residual: agg(|r| r.spectrum_residual),
        pairing_residual: agg(|r| r.pairing_residual),
        sum_rule_residual: agg(|r| r.sum_rule_residual.abs()),
        max_abs_coefficient: agg(|r| r.max_abs_coefficient),
        permutation_residual: agg(|r| r.permutation_residual),
        projection_residual: agg(|r| r.projection_residual),
        separable_max: agg(|r| r.separable_max),
    };
    let failures = results.iter().filter(|r| !r.passed()).count();
    Ok(VerifyReport {
        n: options.n,
        trials: options.trials,
        seed: options.seed,
        passed: failures == 0,
        failures,
        max,
        first_failure: results.iter().find(|r| !r.passed()).cloned(),
        results,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_pass() {
        for n in 2..=4 {
            let report = run_verify(&VerifyOptions::new(n, 10, 7)).unwrap();
            assert!(report.passed, "{:?}", report.first_failure);
            assert!(report.max.spectrum_residual < SPECTRUM_TOL);
            assert!(report.max.separable_max <= 1.0 + SEPARABLE_TOL);
        }
    }

    #[test]
    fn aligned_override_gives_unit_spectrum() {
        let mut options = VerifyOptions::new(2, 1, 0);
        options.geometry = Some(Geometry::aligned(2).unwrap());
        let report = run_verify(&options).unwrap();
        assert!(report.passed);
        let f: SignVector = report.results[0].f.parse().unwrap();
        let s = ghzprobe_core::spectrum(&f, &Geometry::aligned(2).unwrap()).unwrap();
        assert!(s.values().iter().all(|&v| v == 1.0));
    }

    #[test]
    fn trials_are_deterministic_and_ordered() {
        let options = VerifyOptions::new(3, 6, 11);
        let a = run_verify(&options).unwrap();
        let b = run_verify(&options).unwrap();
        let order: Vec<u64> = a.results.iter().map(|r| r.trial).collect();
        assert_eq!(order, [0, 1, 2, 3, 4, 5]);
        for (x, y) in a.results.iter().zip(&b.results) {
            assert_eq!(x.f, y.f);
            assert_eq!(x.spectrum_residual.to_bits(), y.spectrum_residual.to_bits());
        }
        assert_eq!(run_trial(&options, 4).f, a.results[4].f);
    }

    #[test]
    fn rejects_bad_options() {
        assert!(matches!(
            run_verify(&VerifyOptions::new(6, 1, 0)),
            Err(AppError::Usage(_))
        ));
        assert!(matches!(
            run_verify(&VerifyOptions::new(3, 0, 0)),
            Err(AppError::Usage(_))
        ));
        let mut options = VerifyOptions::new(3, 1, 0);
        options.geometry = Some(Geometry::aligned(2).unwrap());
        assert!(run_verify(&options).is_err());
    }

    #[test]
    fn failures_are_reported() {
        let mut checks = Checks::unset();
        assert!(checks.first_failure().unwrap().starts_with("spectrum"));
        checks.spectrum_residual = 0.0;
        checks.pairing_residual = 0.0;
        checks.sum_rule_residual = -1e-14;
        checks.max_abs_coefficient = 1.0;
        checks.permutation_residual = 0.0;
        checks.projection_residual = 0.0;
        checks.separable_max = 1.5;
        assert!(checks
            .first_failure()
            .unwrap()
            .starts_with("separable bound"));
        checks.separable_max = 0.5;
        assert_eq!(checks.first_failure(), None);
    }
}
