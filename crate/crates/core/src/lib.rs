//! The Askey scheme of hypergeometric orthogonal polynomials as a family of
//! charted four-manifolds with corners.
//!
//! * [`polyrec`] — monic three-term recurrences, affine rescaling, moment
//!   determinants.
//! * [`families`] — the thirteen families: parameters, recurrence
//!   coefficients, hypergeometric representations, positivity.
//! * [`charts`] — the Racah, Wilson and Jacobi charts: closed-form
//!   coefficients valid up to the boundary and the face registry.
//! * [`transitions`] — coordinate changes between the three Racah charts.
//! * [`harness`] — verification suites, samplers, tables and the
//!   recurrence-to-family identifier.
//!
//! Every numerical routine is generic over [`scalar::Real`], implemented for
//! `f64` and for the 256-bit [`scalar::HighPrec`].

#![warn(missing_docs)]
// Domain checks are written as `!(x < bound)` so that NaN is rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// Dense elimination loops read more clearly with explicit indices.
#![allow(clippy::needless_range_loop)]

pub mod charts;
pub mod error;
pub mod families;
pub mod harness;
pub mod polyrec;
pub mod scalar;
pub mod transitions;

pub use error::{AskeyError, Result};
