//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by the polynomial engine, the family definitions, the
/// charts, the transitions and the verification harness.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum AskeyError {
    /// A recurrence coefficient evaluated to NaN or ±∞; the parameters are
    /// outside the domain where the closed form is defined.
    #[error("non-finite recurrence coefficient {which}_{n}")]
    NonFiniteCoefficient {
        /// `"B"` or `"C"`.
        which: &'static str,
        /// Degree index at which the coefficient failed.
        n: usize,
    },

    /// A leading Hankel determinant vanished; the moment sequence is not
    /// positive definite up to the requested order.
    #[error("singular Hankel matrix of order {n}")]
    SingularHankel {
        /// Order of the vanishing leading principal minor.
        n: usize,
    },

    /// A point, parameter record or face lies outside the domain of the
    /// requested map; the message names the first violated condition.
    #[error("out of domain: {0}")]
    OutOfDomain(String),

    /// A lower Pochhammer symbol of a terminating hypergeometric sum vanished
    /// before termination.
    #[error("pole in lower parameter {index} at summation index {k}")]
    PoleInLowerParameter {
        /// Position of the offending lower parameter.
        index: usize,
        /// Summation index at which `(λ)_k` vanished.
        k: usize,
    },

    /// The normalising Pochhammer of a monic hypergeometric representation
    /// vanished.
    #[error("normalisation pole: {0}")]
    NormalizationPole(String),

    /// A polynomial degree beyond the family's last defined index was
    /// requested.
    #[error("degree {requested} exceeds the last valid index {valid}")]
    DegreeOutOfRange {
        /// Requested maximal degree.
        requested: usize,
        /// Last index for which the recurrence is defined.
        valid: usize,
    },

    /// Malformed input: wrong parameter names, wrong arity, unparsable value.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The named verification suite does not exist.
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    /// `identify` needs more sample triples.
    #[error("insufficient samples: got {got}, need at least {need} with distinct n")]
    InsufficientSamples {
        /// Distinct degrees supplied.
        got: usize,
        /// Minimal number required.
        need: usize,
    },

    /// The rejection sampler gave up.
    #[error("sampling exhausted after {rejections} rejections ({what})")]
    SamplingExhausted {
        /// What was being sampled.
        what: String,
        /// Number of rejected draws.
        rejections: usize,
    },
}

/// Crate-wide result alias.
pub type Result<T, E = AskeyError> = std::result::Result<T, E>;
