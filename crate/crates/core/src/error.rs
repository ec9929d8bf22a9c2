use alloc::string::String;

/// Errors raised by the core crate.
///
/// The variants split into two families: input errors (bad sizes, malformed
/// literals, violated preconditions) and consistency errors, which signal
/// that a computed quantity contradicts a structural theorem the code relies
/// on. Callers can tell them apart with [`Error::is_internal_consistency`].
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("particle count {n} outside supported range {min}..={max}")]
    ParticleCount { n: usize, min: usize, max: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("setup bits {bits:#b} do not fit in {n} particles")]
    SetupOutOfRange { bits: u32, n: usize },

    #[error("invalid sign vector literal: {0}")]
    SignVectorParse(String),

    #[error("invalid configuration literal: {0}")]
    ConfigurationParse(String),

    #[error("invalid setup literal: {0}")]
    SetupParse(String),

    #[error("angle {0} is not finite")]
    NonFiniteAngle(f64),

    #[error("subset {p:#b} must be non-empty with even cardinality")]
    NotEvenSubset { p: u32 },

    #[error("matrix dimension {0} is not a power of two >= 2")]
    BadMatrixDimension(usize),

    #[error("matrix dimension {0} exceeds 2^16")]
    DimensionOverflow(usize),

    #[error("matrix is not Hermitian (max deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("state is not normalized (norm {norm})")]
    NotNormalized { norm: f64 },

    #[error("expectation value has imaginary part {0:e}")]
    NonRealExpectation(f64),

    #[error("Jacobi iteration did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("B_f|w> has amplitude {amplitude:e} off the antipodal component (w index {config}, component {component})")]
    StructuralViolation {
        config: usize,
        component: usize,
        amplitude: f64,
    },

    #[error("GHZ eigen-relation residual {residual:e} exceeds tolerance")]
    EigenRelation { residual: f64 },

    #[error("lambda_f(w) = {lambda:e} is in the kernel; phase undefined")]
    DegenerateKernel { lambda: f64 },

    #[error("lambda^2 = {value:e} is negative beyond roundoff")]
    NegativeEigenvalue { value: f64 },

    #[error("coefficient {value} lies outside [-1, 1]")]
    CoefficientBound { value: f64 },

    #[error("spectral radius {radius} exceeds aligned bound {bound}")]
    FormulaInconsistency { radius: f64, bound: f64 },

    #[error("optimality constraints inconsistent at setup {setup:#b}, subset {p:#b}")]
    PropagationInconsistency { setup: u32, p: u32 },

    #[error("orbit of seed {seed:#b} does not match its parity class")]
    OrbitCoverage { seed: u32 },

    #[error("exhaustive search supports n in 2..=4, got {0}")]
    ExhaustiveRange(usize),

    #[error("Mermin check supports n in 2..=6, got {0}")]
    MerminRange(usize),
}

impl Error {
    /// True for errors that falsify a theorem or a formula rather than
    /// reject an input.
    pub fn is_internal_consistency(&self) -> bool {
        matches!(
            self,
            Error::NoConvergence { .. }
                | Error::StructuralViolation { .. }
                | Error::EigenRelation { .. }
                | Error::NegativeEigenvalue { .. }
                | Error::FormulaInconsistency { .. }
                | Error::CoefficientBound { .. }
                | Error::PropagationInconsistency { .. }
                | Error::OrbitCoverage { .. }
        )
    }
}

pub type Result<T> = core::result::Result<T, Error>;
