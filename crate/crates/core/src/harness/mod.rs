//! Verification harness: seeded samplers, the named invariant suites with
//! machine-readable reports, coefficient tables and the recurrence-to-family
//! identifier.
//!
//! Every suite is a pure function of its [`SuiteConfig`]; two runs with the
//! same configuration produce identical [`SuiteReport`]s.
//!
//! ```
//! use askey_core::harness::{run_suite, SuiteConfig};
//! use askey_core::scalar::Backend;
//!
//! let cfg = SuiteConfig::new(Backend::Binary64).with_samples(3);
//! let report = run_suite("chart-consistency", &cfg).unwrap();
//! assert!(report.pass);
//! assert_eq!(report.schema, 1);
//! ```

mod identify;
mod sample;
mod suites;
mod table;

use serde::Serialize;

use crate::error::{AskeyError, Result};
use crate::scalar::Backend;

pub use identify::{
    identify, identify_with, Candidate, IdentifyOptions, IdentifyResult, Model, Sample,
    MATCH_RESIDUAL,
};
pub use sample::{sample_face, sample_interior, InteriorSampler, LOG_RANGE, MAX_REJECTIONS};
pub use table::{emit_table, TableFormat};

/// Names of the verification suites, in canonical order.
pub const SUITES: [&str; 10] = [
    "chart-consistency",
    "boundary-faces",
    "continuity",
    "transitions",
    "moments-oracle",
    "hyp-oracle",
    "wilson-reality",
    "limits",
    "favard-scan",
    "jacobi2d",
];

/// Version of the [`SuiteReport`] layout.
pub const REPORT_SCHEMA: u32 = 1;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 42;

/// Configuration of a suite run. `None` fields take the suite's defaults
/// (see [`SuiteDefaults::of`]).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteConfig {
    /// Master seed; every sampler in the suite derives its stream from it.
    pub seed: u64,
    /// Samples per case (meaning depends on the suite).
    pub samples: Option<usize>,
    /// Highest degree checked.
    pub n_max: Option<usize>,
    /// Tolerance on the suite's error measure.
    pub tol: Option<f64>,
    /// Scalar backend of the evaluated quantities.
    pub backend: Backend,
}

impl SuiteConfig {
    /// Defaults on the given backend with [`DEFAULT_SEED`].
    pub fn new(backend: Backend) -> Self {
        SuiteConfig {
            seed: DEFAULT_SEED,
            samples: None,
            n_max: None,
            tol: None,
            backend,
        }
    }

    /// Replace the seed.
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    /// Replace the sample count.
    pub fn with_samples(mut self, samples: usize) -> Self {
        self.samples = Some(samples);
        self
    }

    /// Replace the maximal degree.
    pub fn with_n_max(mut self, n_max: usize) -> Self {
        self.n_max = Some(n_max);
        self
    }

    /// Replace the tolerance.
    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = Some(tol);
        self
    }
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig::new(Backend::Binary64)
    }
}

/// Per-suite default sample count, degree and tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteDefaults {
    /// Samples per case.
    pub samples: usize,
    /// Highest degree.
    pub n_max: usize,
    /// Tolerance.
    pub tol: f64,
}

impl SuiteDefaults {
    /// Defaults of the named suite on a backend.
    ///
    /// Identity suites use `1e−8`/`1e−10`/`1e−9` in binary64 and `1e−30` in
    /// high precision. Continuity (`1e−6` final gap) and limits (`1e−4` final
    /// error) measure convergence, not rounding, and keep their thresholds on
    /// both backends. The Favard scan is exact (tolerance 0).
    ///
    /// # Errors
    ///
    /// [`AskeyError::UnknownSuite`] for other names.
    pub fn of(name: &str, backend: Backend) -> Result<Self> {
        let hp = backend == Backend::HighPrec;
        let id = |f64_tol: f64| if hp { 1e-30 } else { f64_tol };
        let d = |samples, n_max, tol| SuiteDefaults {
            samples,
            n_max,
            tol,
        };
        Ok(match name {
            "chart-consistency" => d(100, 8, id(1e-8)),
            "boundary-faces" => d(10, 6, id(1e-10)),
            "continuity" => d(3, 8, 1e-6),
            "transitions" => d(50, 6, id(1e-10)),
            "moments-oracle" => d(5, 6, id(1e-9)),
            "hyp-oracle" => d(20, 6, id(1e-9)),
            "wilson-reality" => d(20, 32, id(1e-10)),
            "limits" => d(1, 5, 1e-4),
            "favard-scan" => d(50, 8, 0.0),
            "jacobi2d" => d(100, 8, id(1e-10)),
            other => return Err(AskeyError::UnknownSuite(other.to_string())),
        })
    }
}

/// One case of a suite.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CaseRecord {
    /// Case name, e.g. `racah1 {1,3}`.
    pub name: String,
    /// Error measure of the case (relative convention unless noted).
    pub max_rel_err: f64,
    /// Tolerance the case is judged against (the suite tolerance unless the
    /// check has its own threshold).
    pub tol: f64,
    /// Whether the case passed on its own.
    pub pass: bool,
    /// Whether the case counts towards the suite verdict.
    pub gating: bool,
    /// A non-tolerance failure (monotonicity, sample count, domain error, …).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Free-form context (point counts, rates, …).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
    /// Judged against its own threshold; excluded from the suite maximum.
    #[serde(skip)]
    pub own_tol: bool,
}

/// Machine-readable outcome of a suite.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    /// Layout version, currently [`REPORT_SCHEMA`].
    pub schema: u32,
    /// Suite name.
    pub suite: String,
    /// Samples per case actually used.
    pub samples: usize,
    /// Maximum error over the gating cases.
    pub max_rel_err: f64,
    /// Tolerance applied.
    pub tol: f64,
    /// `max_rel_err ≤ tol` and no gating case reported an error.
    pub pass: bool,
    /// Master seed.
    pub seed: u64,
    /// Backend of the evaluated quantities.
    pub backend: Backend,
    /// Per-case records, in deterministic order.
    pub details: Vec<CaseRecord>,
}

impl SuiteReport {
    /// The gating cases that failed.
    pub fn failures(&self) -> impl Iterator<Item = &CaseRecord> {
        self.details.iter().filter(|c| c.gating && !c.pass)
    }
}

/// Resolved parameters handed to a suite body.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Resolved {
    pub seed: u64,
    pub samples: usize,
    pub n_max: usize,
    pub tol: f64,
}

/// Collects case records for a suite.
#[derive(Debug, Default)]
pub(crate) struct Cases {
    tol: f64,
    items: Vec<CaseRecord>,
}

impl Cases {
    pub fn new(tol: f64) -> Self {
        Cases {
            tol,
            items: Vec::new(),
        }
    }

    /// A gating case measured against the suite tolerance.
    pub fn measured(
        &mut self,
        name: impl Into<String>,
        err: f64,
        error: Option<String>,
        notes: Option<String>,
    ) {
        let pass = err <= self.tol && error.is_none();
        self.items.push(CaseRecord {
            name: name.into(),
            max_rel_err: err,
            tol: self.tol,
            pass,
            gating: true,
            error,
            notes,
            own_tol: false,
        });
    }

    /// A gating case with its own threshold `tol`; exceeding it is recorded
    /// as an error and the measure stays out of the suite maximum.
    pub fn checked(
        &mut self,
        name: impl Into<String>,
        err: f64,
        tol: f64,
        mut error: Option<String>,
        notes: Option<String>,
    ) {
        if error.is_none() && !(err <= tol) {
            error = Some(format!("{err:.3e} exceeds {tol:e}"));
        }
        self.items.push(CaseRecord {
            name: name.into(),
            max_rel_err: err,
            tol,
            pass: error.is_none(),
            gating: true,
            error,
            notes,
            own_tol: true,
        });
    }

    /// A gating case that could not be evaluated.
    pub fn failed(&mut self, name: impl Into<String>, error: impl ToString) {
        self.items.push(CaseRecord {
            name: name.into(),
            max_rel_err: f64::INFINITY,
            tol: self.tol,
            pass: false,
            gating: true,
            error: Some(error.to_string()),
            notes: None,
            own_tol: false,
        });
    }

    /// An exploratory case reported but not counted.
    pub fn note(
        &mut self,
        name: impl Into<String>,
        err: f64,
        tol: f64,
        error: Option<String>,
        notes: Option<String>,
    ) {
        let pass = err <= tol && error.is_none();
        self.items.push(CaseRecord {
            name: name.into(),
            max_rel_err: err,
            tol,
            pass,
            gating: false,
            error,
            notes,
            own_tol: true,
        });
    }

    pub fn finish(self, suite: &str, r: &Resolved, backend: Backend) -> SuiteReport {
        let gating = || self.items.iter().filter(|c| c.gating);
        let max_rel_err = gating()
            .filter(|c| !c.own_tol && c.error.is_none())
            .map(|c| c.max_rel_err)
            .fold(0.0, f64::max);
        let errored = gating().any(|c| c.error.is_some());
        let pass = max_rel_err <= r.tol && !errored;
        SuiteReport {
            schema: REPORT_SCHEMA,
            suite: suite.to_string(),
            samples: r.samples,
            max_rel_err,
            tol: r.tol,
            pass,
            seed: r.seed,
            backend,
            details: self.items,
        }
    }
}

/// Run a named suite.
///
/// # Errors
///
/// [`AskeyError::UnknownSuite`] if `name` is not in [`SUITES`].
pub fn run_suite(name: &str, config: &SuiteConfig) -> Result<SuiteReport> {
    let d = SuiteDefaults::of(name, config.backend)?;
    let r = Resolved {
        seed: config.seed,
        samples: config.samples.unwrap_or(d.samples),
        n_max: config.n_max.unwrap_or(d.n_max),
        tol: config.tol.unwrap_or(d.tol),
    };
    let cases = match config.backend {
        Backend::Binary64 => suites::dispatch::<f64>(name, &r)?,
        Backend::HighPrec => suites::dispatch::<crate::scalar::HighPrec>(name, &r)?,
    };
    Ok(cases.finish(name, &r, config.backend))
}

/// Derive an independent sub-seed for a labelled stream.
pub(crate) fn subseed(seed: u64, label: &str) -> u64 {
    // FNV-1a over the label, mixed with the master seed (splitmix64 finaliser).
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in label.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    let mut z = seed ^ h;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_rejected() {
        let e = run_suite("no-such-suite", &SuiteConfig::default()).unwrap_err();
        assert_eq!(e, AskeyError::UnknownSuite("no-such-suite".into()));
    }

    #[test]
    fn pass_rule() {
        let r = Resolved {
            seed: 1,
            samples: 1,
            n_max: 1,
            tol: 1e-8,
        };
        let mut c = Cases::new(1e-8);
        c.measured("a", 1e-9, None, None);
        c.note("b", 1.0, 0.5, None, None);
        let rep = c.finish("x", &r, Backend::Binary64);
        assert!(rep.pass);
        assert_eq!(rep.max_rel_err, 1e-9);

        let mut c = Cases::new(1e-8);
        c.measured("a", 1e-9, None, None);
        c.checked("m", 0.0, 1e-6, Some("not monotone".into()), None);
        let rep = c.finish("x", &r, Backend::Binary64);
        assert!(!rep.pass);

        let mut c = Cases::new(1e-8);
        c.checked("gap", 1e-7, 1e-6, None, None);
        let rep = c.finish("x", &r, Backend::Binary64);
        assert!(rep.pass);
        assert_eq!(rep.max_rel_err, 0.0);
    }

    #[test]
    fn subseeds_differ_by_label() {
        assert_ne!(subseed(42, "racah1"), subseed(42, "racah2"));
        assert_eq!(subseed(42, "racah1"), subseed(42, "racah1"));
    }
}
