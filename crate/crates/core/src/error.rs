use thiserror::Error;

/// Every failure the library can report. Each variant maps to a stable
/// machine-readable code (see [`Error::code`]) used in CLI reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("exponent at byte {offset} exceeds 2^31-1")]
    ExponentOverflow { offset: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("variable mismatch: {0}")]
    VariableMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("truncation window underflow: result valid to {valid} coefficients")]
    WindowUnderflow { valid: i64 },

    #[error("invalid symplectic form: {0}")]
    InvalidForm(String),
    #[error("not a Lagrangian subspace: {0}")]
    NotLagrangian(String),
    #[error("subspaces {first} and {second} are not transverse")]
    NonTransverse { first: usize, second: usize },
    #[error("chain map is not self-dual")]
    NotSelfDual,
    #[error("invalid split index {0}: must be odd and within the chain")]
    InvalidSplit(usize),

    #[error("quadratic form is degenerate")]
    Degenerate,
    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("automorphism is not quasi-unipotent within order bound {bound}")]
    NotQuasiUnipotent { bound: u32 },
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("no admissible lattice: {0}")]
    NoAdmissibleLattice(String),
    #[error("exponent {0} lies outside -1 < r <= 0")]
    ExponentOutsideSection(String),

    #[error("singularity at the origin is not isolated (no stable quotient below degree {bound})")]
    NotIsolated { bound: usize },
    #[error("origin is not a critical point")]
    NotSingular,
    #[error("potential does not vanish at the origin")]
    NonzeroAtOrigin,
    #[error("polynomial is not quasi-homogeneous")]
    NotQuasiHomogeneous,

    #[error("Hessian in the eliminated variables is singular")]
    SingularHessian,
    #[error("elimination failed: {0}")]
    EliminationFailed(String),
    #[error("sequence is not exact: {0}")]
    NotExact(String),
    #[error("loop is not composable: {0}")]
    NonComposable(String),
    #[error("torsor mismatch: {0}")]
    TorsorMismatch(String),
    #[error("volume form vanishes")]
    ZeroVolume,

    #[error("schema violation at {pointer}: {message}")]
    Schema { pointer: String, message: String },
}

impl Error {
    /// Stable identifier reported as `error.code`.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "SyntaxError",
            Error::ExponentOverflow { .. } => "ExponentOverflow",
            Error::DivisionByZero => "DivisionByZero",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::VariableMismatch(_) => "VariableMismatch",
            Error::Singular => "Singular",
            Error::WindowUnderflow { .. } => "WindowUnderflow",
            Error::InvalidForm(_) => "InvalidForm",
            Error::NotLagrangian(_) => "NotLagrangian",
            Error::NonTransverse { .. } => "NonTransverse",
            Error::NotSelfDual => "NotSelfDual",
            Error::InvalidSplit(_) => "InvalidSplit",
            Error::Degenerate => "Degenerate",
            Error::NotSymmetric => "NotSymmetric",
            Error::NotQuasiUnipotent { .. } => "NotQuasiUnipotent",
            Error::NotInvertible => "NotInvertible",
            Error::NoAdmissibleLattice(_) => "NoAdmissibleLattice",
            Error::ExponentOutsideSection(_) => "ExponentOutsideSection",
            Error::NotIsolated { .. } => "NotIsolated",
            Error::NotSingular => "NotSingular",
            Error::NonzeroAtOrigin => "NonzeroAtOrigin",
            Error::NotQuasiHomogeneous => "NotQuasiHomogeneous",
            Error::SingularHessian => "SingularHessian",
            Error::EliminationFailed(_) => "EliminationFailed",
            Error::NotExact(_) => "NotExact",
            Error::NonComposable(_) => "NonComposable",
            Error::TorsorMismatch(_) => "TorsorMismatch",
            Error::ZeroVolume => "ZeroVolume",
            Error::Schema { .. } => "SchemaError",
        }
    }

    /// Usage-level failures (bad input text or files) as opposed to
    /// mathematical domain errors.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. } | Error::ExponentOverflow { .. } | Error::Schema { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
