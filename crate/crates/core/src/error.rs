use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParamError {
    #[error("parameters must be finite")]
    NonFinite,
    #[error("{0} must be > 0, got {1}")]
    NonPositive(&'static str, f64),
    #[error("{0} must be >= 0, got {1}")]
    Negative(&'static str, f64),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VacuaError {
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error("invalid scan window [{lo}, {hi}] with grid_n = {grid_n}")]
    InvalidWindow { lo: f64, hi: f64, grid_n: usize },
    #[error("root refinement did not converge within {iterations} iterations near phi = {phi}")]
    FailedConvergence { phi: f64, iterations: usize },
    #[error("need at least two minima to classify vacua, found {found}")]
    InsufficientMinima { found: usize },
    #[error("Bogomil'nyi gap {gap} is not positive; length scale undefined")]
    NonPositiveGap { gap: f64 },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum InflationError {
    #[error("negative energy density {0}")]
    NegativeEnergy(f64),
    #[error("potential vanishes at phi = {0}; slow-roll ratios undefined")]
    ZeroPotential(f64),
    #[error("flatness threshold must be > 0, got {0}")]
    InvalidThreshold(f64),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NucleationError {
    #[error("{name} out of domain: {value}")]
    DomainError { name: &'static str, value: f64 },
    #[error("quadrature did not reach tolerance {tolerance:e} (estimate {estimate:e}) within {subdivisions} subdivisions")]
    QuadratureFailure {
        tolerance: f64,
        estimate: f64,
        subdivisions: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FieldError {
    #[error("grid needs at least two points, got {0}")]
    TooShort(usize),
    #[error("positions and values differ in length ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("positions must be strictly increasing (index {0})")]
    NotIncreasing(usize),
    #[error("functional center and field are on different grids")]
    GridMismatch,
    #[error("{name} out of domain: {value}")]
    DomainError { name: &'static str, value: f64 },
    #[error(transparent)]
    Vacua(#[from] VacuaError),
    #[error(transparent)]
    Nucleation(#[from] NucleationError),
}
