//! Crate-wide error type.
//!
//! Errors split into two families, visible through
//! [`Error::hypothesis_name`]:
//!
//! * **usage errors** — malformed input (parse errors, dimension mismatches,
//!   invalid weights or cones);
//! * **hypothesis failures** — the input is well formed but a mathematical
//!   precondition of the requested computation does not hold (or could not be
//!   certified). These carry the name of the failed hypothesis so callers can
//!   report *which* assumption broke.

use thiserror::Error;

/// Convenient result alias used throughout the crate.
pub type Result<T, E = Error> = std::result::Result<T, E>;

/// All errors produced by this crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Syntax error while parsing a polynomial.
    #[error("parse error at byte {pos}: {msg}")]
    Parse {
        /// Byte offset in the input string.
        pos: usize,
        /// Human-readable description.
        msg: String,
    },

    /// A variable index outside `1..=nvars`.
    #[error("variable z{index} out of range (polynomial has {nvars} variables)")]
    VarIndex {
        /// Offending 1-based index.
        index: usize,
        /// Declared number of variables.
        nvars: usize,
    },

    /// A negative exponent appeared where only ordinary monomials are allowed.
    #[error("negative exponent: {context}")]
    NegativeExponent {
        /// Where the negative exponent came from.
        context: String,
    },

    /// Mismatched lengths (exponent vectors, weight vectors, matrices, …).
    #[error("dimension mismatch: {context}")]
    Dimension {
        /// Description of the mismatch.
        context: String,
    },

    /// An operation that requires a nonzero polynomial received zero.
    #[error("zero polynomial not allowed: {context}")]
    ZeroPolynomial {
        /// Operation that rejected the zero polynomial.
        context: String,
    },

    /// Ambient dimension outside the supported range.
    #[error("{what} supported for {max} variables at most, got {nvars}")]
    UnsupportedDimension {
        /// Operation concerned.
        what: String,
        /// Requested number of variables.
        nvars: usize,
        /// Maximum supported.
        max: usize,
    },

    /// A weight vector that must be positive/nonnegative is not.
    #[error("invalid weight vector {w:?}: {msg}")]
    InvalidWeight {
        /// Offending weights.
        w: Vec<i64>,
        /// Reason.
        msg: String,
    },

    /// A cone that does not satisfy the structural requirements of an operation.
    #[error("invalid cone: {msg}")]
    InvalidCone {
        /// Reason.
        msg: String,
    },

    /// A chart operation received a non-regular cone.
    #[error("cone with generators {generators:?} is not regular (unimodular)")]
    NotRegular {
        /// Generators of the offending cone.
        generators: Vec<Vec<i64>>,
    },

    /// Final exponents of a zeta-function failed to be integers.
    #[error("non-integral exponent {exponent} for period {period} in zeta-function assembly")]
    NonIntegralExponent {
        /// Period `d` of the factor `(1 - t^d)`.
        period: u64,
        /// The offending rational exponent, printed exactly.
        exponent: String,
    },

    /// Multiplicity/factor query on the empty zeta-function (no factors).
    #[error("zeta-function has no factors; {context}")]
    EmptyZeta {
        /// Operation that needed a factor.
        context: String,
    },

    /// `milnor_from_zeta` produced a value that cannot be a Milnor number.
    #[error("zeta degree {degree} gives inadmissible Milnor number {value}")]
    BadMilnorFromZeta {
        /// Degree of the zeta-function.
        degree: i64,
        /// The computed `(-1)^n (deg ζ + 1)`.
        value: i64,
    },

    /// Truncated Milnor numbers kept changing up to the truncation budget.
    #[error(
        "truncated Milnor number did not stabilize up to truncation {budget} \
         (values {history:?}); probable non-isolated singularity"
    )]
    NotStabilized {
        /// Largest truncation order tried.
        budget: usize,
        /// Sequence of truncated values observed.
        history: Vec<usize>,
    },

    /// A search or subdivision exceeded its iteration budget.
    #[error("budget exceeded in {what} (limit {budget})")]
    BudgetExceeded {
        /// Description of the budgeted process.
        what: String,
        /// The limit that was hit.
        budget: usize,
    },

    /// Singular-point solving hit a point with non-rational coordinates.
    #[error(
        "singular point with non-rational (algebraic) coordinates detected: {detail}; \
         supply local data for it manually"
    )]
    IrrationalPoint {
        /// Which eliminant/root is algebraic.
        detail: String,
    },

    /// The exact solver could not certify completeness of its answer.
    #[error("cannot certify {what}")]
    CannotCertify {
        /// What resisted certification.
        what: String,
    },

    /// A named mathematical hypothesis of a pipeline failed.
    #[error("hypothesis '{name}' failed: {detail}")]
    Hypothesis {
        /// Stable name of the hypothesis (also used in report JSON).
        name: String,
        /// Explanation, with a witness where available.
        detail: String,
    },

    /// Local data was required for a singular point but not supplied.
    #[error("no local data supplied for singular point {point}; cannot certify pre-nondegeneracy")]
    MissingLocalData {
        /// Printed coordinates of the point.
        point: String,
    },

    /// Supplied local data does not match the computed singular points.
    #[error("local data mismatch: {detail}")]
    LocalDataMismatch {
        /// Explanation.
        detail: String,
    },

    /// A coordinate change that must be a local isomorphism is not.
    #[error("coordinate change is not invertible at the origin: {detail}")]
    NotInvertible {
        /// Explanation (e.g. vanishing Jacobian determinant).
        detail: String,
    },

    /// Generic-section trials disagreed too often to certify a value.
    #[error("generic-section trials failed to certify a stable value: {detail}")]
    InconsistentTrials {
        /// Explanation with the observed values.
        detail: String,
    },

    /// Invalid JSON in an input file (fans, local data).
    #[error("invalid JSON input: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// For hypothesis-style failures, the stable hypothesis name; `None` for
    /// plain usage errors. Drives the CLI exit-code split.
    pub fn hypothesis_name(&self) -> Option<String> {
        match self {
            Error::Hypothesis { name, .. } => Some(name.clone()),
            Error::NotStabilized { .. } => Some("isolated-singularity".into()),
            Error::IrrationalPoint { .. } => Some("rational-singular-points".into()),
            Error::CannotCertify { what } => Some(format!("certified:{what}")),
            Error::MissingLocalData { .. } | Error::LocalDataMismatch { .. } => {
                Some("pre-nondegeneracy-local-data".into())
            }
            Error::BadMilnorFromZeta { .. } => Some("zeta-degree-consistency".into()),
            Error::NonIntegralExponent { .. } => Some("integral-zeta-exponents".into()),
            Error::InconsistentTrials { .. } => Some("generic-section-agreement".into()),
            Error::BudgetExceeded { .. } => Some("search-budget".into()),
            _ => None,
        }
    }
}
