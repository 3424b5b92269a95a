//! Recover a family (or chart point) from samples of its recurrence.
//!
//! Each model is fitted by Levenberg–Marquardt least squares on the scaled
//! residuals
//!
//! ```text
//! (B_model(n) − Bₙ) / max(1, |Bₙ|),   (C_model(n) − Cₙ) / max(1, |Cₙ|)  (n ≥ 1)
//! ```
//!
//! with a forward-difference Jacobian, from 32 seeded starts drawn from the
//! chart's interior sampler (the unit box). Chart coordinates are fitted
//! both directly and as `exp(θ)` (then polished directly), keeping the
//! better fit. Direct families use similar unconstrained reparametrisations
//! (`α = e^θ − 1`, `c = 1/(1+e^{−θ})`, …). A candidate's residual is the
//! largest scaled residual.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize, Serializer};

use crate::charts::{chart_coeffs_unchecked, ChartId, ChartPoint};
use crate::error::{AskeyError, Result};
use crate::families::{recurrence_coeffs, FamilyId, FamilyInstance};
use crate::harness::sample::InteriorSampler;
use crate::harness::subseed;
use crate::scalar::Complex;

/// Residual below which a candidate is declared a match.
pub const MATCH_RESIDUAL: f64 = 1e-8;

/// Minimal number of distinct degrees in the input.
const MIN_DISTINCT: usize = 6;

/// Families fitted directly, without an affine freedom.
const DIRECT: [FamilyId; 6] = [
    FamilyId::Hermite,
    FamilyId::Laguerre,
    FamilyId::Jacobi,
    FamilyId::Charlier,
    FamilyId::Meixner,
    FamilyId::Krawtchouk,
];

/// One `(n, Bₙ, Cₙ)` sample. `C₀` is ignored.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Sample {
    /// Degree index.
    pub n: usize,
    /// `Bₙ`.
    #[serde(rename = "B")]
    pub b: f64,
    /// `Cₙ`.
    #[serde(rename = "C")]
    pub c: f64,
}

/// A fitted model: a chart (with its coordinates as parameters) or a family
/// (with its own parameters).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Model {
    /// A chart; the fitted parameters are its coordinates.
    Chart(ChartId),
    /// A family fitted without rescaling.
    Family(FamilyId),
}

impl Model {
    /// Lowercase name (`racah1`, `laguerre`, …; chart and family names are
    /// disjoint).
    pub fn name(self) -> &'static str {
        match self {
            Model::Chart(c) => c.name(),
            Model::Family(f) => f.name(),
        }
    }

    /// Parameter names in fit order.
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            Model::Chart(c) => c.coord_names(),
            Model::Family(f) => f.param_names(),
        }
    }

    fn dim(self) -> usize {
        self.param_names().len()
    }
}

impl std::fmt::Display for Model {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for Model {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// A ranked candidate.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Candidate {
    /// The model.
    pub model: Model,
    /// Fitted parameters (chart coordinates or family parameters).
    pub params: Vec<f64>,
    /// Largest scaled residual at the fit.
    pub residual: f64,
}

/// Outcome of [`identify`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentifyResult {
    /// All models, ordered by nondecreasing residual.
    pub candidates: Vec<Candidate>,
    /// The best candidate, if its residual is below [`MATCH_RESIDUAL`].
    pub matched: Option<Model>,
    /// Further candidates also below [`MATCH_RESIDUAL`] (the data do not
    /// single out one model).
    pub ties: Vec<Model>,
}

impl IdentifyResult {
    /// The top-ranked candidate.
    pub fn best(&self) -> &Candidate {
        &self.candidates[0]
    }
}

/// Knobs of the optimiser.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentifyOptions {
    /// Seed of the starting points.
    pub seed: u64,
    /// Starting points per model.
    pub starts: usize,
    /// Iteration cap per start.
    pub max_iter: usize,
}

impl Default for IdentifyOptions {
    fn default() -> Self {
        IdentifyOptions {
            seed: 0,
            starts: 32,
            max_iter: 2000,
        }
    }
}

/// Fit every chart and the six direct families to the samples and rank them.
///
/// ```
/// use askey_core::harness::{identify, Model, Sample};
/// use askey_core::families::FamilyId;
///
/// let s: Vec<Sample> = (0..8)
///     .map(|n| Sample { n, b: (2 * n + 1) as f64, c: (n * n) as f64 })
///     .collect();
/// let r = identify(&s).unwrap();
/// assert_eq!(r.matched, Some(Model::Family(FamilyId::Laguerre)));
/// assert!(r.best().params[0].abs() < 1e-8);
/// ```
///
/// # Errors
///
/// [`AskeyError::InsufficientSamples`] with fewer than six distinct `n`;
/// [`AskeyError::InvalidInput`] on non-finite values.
pub fn identify(samples: &[Sample]) -> Result<IdentifyResult> {
    identify_with(samples, IdentifyOptions::default())
}

/// [`identify`] with explicit optimiser options.
///
/// # Errors
///
/// As [`identify`].
pub fn identify_with(samples: &[Sample], opts: IdentifyOptions) -> Result<IdentifyResult> {
    let mut ns: Vec<usize> = samples.iter().map(|s| s.n).collect();
    ns.sort_unstable();
    ns.dedup();
    if ns.len() < MIN_DISTINCT {
        return Err(AskeyError::InsufficientSamples {
            got: ns.len(),
            need: MIN_DISTINCT,
        });
    }
    if let Some(s) = samples
        .iter()
        .find(|s| !s.b.is_finite() || !s.c.is_finite())
    {
        return Err(AskeyError::InvalidInput(format!(
            "non-finite sample at n = {}",
            s.n
        )));
    }
    let models = DIRECT
        .iter()
        .map(|&f| Model::Family(f))
        .chain(ChartId::ALL.iter().map(|&c| Model::Chart(c)));
    let mut candidates: Vec<Candidate> = models.map(|m| fit(m, samples, opts)).collect();
    // Stable: on exact ties the direct families (listed first) stay ahead.
    candidates.sort_by(|a, b| a.residual.total_cmp(&b.residual));
    let below: Vec<Model> = candidates
        .iter()
        .filter(|c| c.residual < MATCH_RESIDUAL)
        .map(|c| c.model)
        .collect();
    let matched = below.first().copied();
    let ties = below.into_iter().skip(1).collect();
    Ok(IdentifyResult {
        candidates,
        matched,
        ties,
    })
}

/// Model parameters from the unconstrained fit variables, or `None` outside
/// the model's domain.
fn decode(model: Model, theta: &[f64], linear: bool) -> Option<Vec<f64>> {
    let e = |v: f64| v.exp();
    let logistic = |v: f64| 1.0 / (1.0 + (-v).exp());
    let p = match model {
        Model::Chart(chart) => {
            let x = if linear {
                theta.to_vec()
            } else {
                theta.iter().map(|v| v.exp()).collect()
            };
            ChartPoint::new(chart, x.clone()).ok()?;
            x
        }
        Model::Family(FamilyId::Hermite) => vec![],
        Model::Family(FamilyId::Laguerre) => vec![e(theta[0]) - 1.0],
        Model::Family(FamilyId::Jacobi) => vec![e(theta[0]) - 1.0, e(theta[1]) - 1.0],
        Model::Family(FamilyId::Charlier) => vec![e(theta[0])],
        Model::Family(FamilyId::Meixner) => vec![1.0 + e(theta[0]), logistic(theta[1])],
        Model::Family(FamilyId::Krawtchouk) => vec![logistic(theta[0]), 1.0 + e(theta[1])],
        Model::Family(_) => return None,
    };
    p.iter().all(|v| v.is_finite()).then_some(p)
}

/// Scaled residual vector, or `None` if the model cannot be evaluated.
fn residuals(model: Model, theta: &[f64], samples: &[Sample], linear: bool) -> Option<Vec<f64>> {
    let params = decode(model, theta, linear)?;
    let coeff: Box<dyn Fn(usize) -> (f64, f64)> = match model {
        Model::Chart(chart) => Box::new(move |n| chart_coeffs_unchecked(chart, &params, n)),
        Model::Family(id) => {
            let p: Vec<Complex<f64>> = params.iter().map(|&v| Complex::from_real(v)).collect();
            let inst = FamilyInstance::from_params(id, &p).ok()?;
            let rc = recurrence_coeffs(&inst).ok()?;
            Box::new(move |n| rc.pair(n))
        }
    };
    let mut r = Vec::with_capacity(2 * samples.len());
    for s in samples {
        let (b, c) = coeff(s.n);
        r.push((b - s.b) / s.b.abs().max(1.0));
        if s.n > 0 {
            r.push((c - s.c) / s.c.abs().max(1.0));
        }
    }
    r.iter().all(|v| v.is_finite()).then_some(r)
}

fn sq(r: &[f64]) -> f64 {
    r.iter().map(|v| v * v).sum()
}

fn sup(r: &[f64]) -> f64 {
    r.iter().fold(0.0, |m, v| m.max(v.abs()))
}

fn fit(model: Model, samples: &[Sample], opts: IdentifyOptions) -> Candidate {
    let dim = model.dim();
    if dim == 0 {
        let residual = residuals(model, &[], samples, false).map_or(f64::INFINITY, |r| sup(&r));
        return Candidate {
            model,
            params: vec![],
            residual,
        };
    }
    let seed = subseed(opts.seed, model.name());
    let starts: Vec<Vec<f64>> = match model {
        Model::Chart(chart) => {
            let mut s = InteriorSampler::new(chart, seed);
            (0..opts.starts)
                .filter_map(|_| s.next_point::<f64>().ok())
                .map(|p| p.coords)
                .collect()
        }
        Model::Family(_) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..opts.starts)
                .map(|_| (0..dim).map(|_| rng.gen_range(-3.0..3.0)).collect())
                .collect()
        }
    };
    let mut best: Best = None;
    for start in starts {
        match model {
            Model::Chart(_) => {
                // Logarithmic coordinates move freely across scales but
                // flatten out towards a face; linear ones reach faces but
                // crawl across scales. Try both, then polish the logarithmic
                // fit linearly.
                let lin = levenberg_marquardt(model, start.clone(), samples, opts.max_iter, true);
                offer(&mut best, model, samples, lin, true);
                let log_start = start.iter().map(|v| v.ln()).collect();
                if let Some((_, theta)) =
                    levenberg_marquardt(model, log_start, samples, opts.max_iter, false)
                {
                    let x = theta.iter().map(|v| v.exp()).collect();
                    offer(
                        &mut best,
                        model,
                        samples,
                        levenberg_marquardt(model, x, samples, opts.max_iter, true),
                        true,
                    );
                }
            }
            Model::Family(_) => {
                let fit = levenberg_marquardt(model, start, samples, opts.max_iter, false);
                offer(&mut best, model, samples, fit, false);
            }
        }
        // An exact fit cannot be improved on.
        if best.as_ref().is_some_and(|(c, _, _)| *c < 1e-30) {
            break;
        }
    }
    match best {
        Some((_, params, residual)) => Candidate {
            model,
            params,
            residual,
        },
        None => Candidate {
            model,
            params: vec![f64::NAN; dim],
            residual: f64::INFINITY,
        },
    }
}

/// Best fit so far: `(cost, model parameters, largest scaled residual)`.
type Best = Option<(f64, Vec<f64>, f64)>;

/// Keep `fit` (fit variables in the given mode) if it beats `best`.
fn offer(
    best: &mut Best,
    model: Model,
    samples: &[Sample],
    fit: Option<(f64, Vec<f64>)>,
    linear: bool,
) {
    let Some((cost, theta)) = fit else { return };
    if best.as_ref().is_some_and(|(c, _, _)| cost >= *c) {
        return;
    }
    let p = decode(model, &theta, linear);
    let r = residuals(model, &theta, samples, linear);
    if let (Some(p), Some(r)) = (p, r) {
        *best = Some((cost, p, sup(&r)));
    }
}

/// Minimise the squared scaled residuals from `theta`; returns the final cost
/// and variables, or `None` if the start is not evaluable.
fn levenberg_marquardt(
    model: Model,
    mut theta: Vec<f64>,
    samples: &[Sample],
    max_iter: usize,
    linear: bool,
) -> Option<(f64, Vec<f64>)> {
    let dim = theta.len();
    let res = |t: &[f64]| residuals(model, t, samples, linear);
    let mut r = res(&theta)?;
    let mut cost = sq(&r);
    let mut lambda = 1e-3;
    for _ in 0..max_iter {
        if cost < 1e-30 {
            break;
        }
        // Forward-difference Jacobian (backward if the forward step leaves
        // the domain).
        let m = r.len();
        let mut jac = vec![vec![0.0; dim]; m];
        for j in 0..dim {
            let h = if linear {
                1e-7 * theta[j].abs().max(1e-12)
            } else {
                1e-7 * theta[j].abs().max(1.0)
            };
            let mut tp = theta.clone();
            tp[j] += h;
            let (rp, hh) = match res(&tp) {
                Some(rp) => (rp, h),
                None => {
                    tp[j] = theta[j] - h;
                    (res(&tp)?, -h)
                }
            };
            for i in 0..m {
                jac[i][j] = (rp[i] - r[i]) / hh;
            }
        }
        let mut a = vec![vec![0.0; dim]; dim];
        let mut g = vec![0.0; dim];
        for i in 0..m {
            for j in 0..dim {
                g[j] += jac[i][j] * r[i];
                for k in 0..dim {
                    a[j][k] += jac[i][j] * jac[i][k];
                }
            }
        }
        let mut improved = false;
        while lambda < 1e16 {
            let mut damped = a.clone();
            for j in 0..dim {
                damped[j][j] += lambda * a[j][j].max(1e-12);
            }
            let rhs: Vec<f64> = g.iter().map(|v| -v).collect();
            if let Some(step) = solve(damped, rhs) {
                let trial: Vec<f64> = theta.iter().zip(&step).map(|(t, d)| t + d).collect();
                if let Some(rt) = res(&trial) {
                    let ct = sq(&rt);
                    if ct < cost {
                        let rel = (cost - ct) / cost;
                        let small = step.iter().all(|d| d.abs() < 1e-15);
                        theta = trial;
                        r = rt;
                        cost = ct;
                        lambda = (lambda / 3.0).max(1e-12);
                        improved = !(small || rel < 1e-16);
                        break;
                    }
                }
            }
            lambda *= 4.0;
        }
        if !improved {
            break;
        }
    }
    Some((cost, theta))
}

/// Solve a small dense system by Gaussian elimination with partial
/// pivoting.
fn solve(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[piv][col] == 0.0 || !a[piv][col].is_finite() {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            for k in col..n {
                a[row][k] -= f * a[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let s: f64 = (i + 1..n).map(|k| a[i][k] * x[k]).sum();
        x[i] = (b[i] - s) / a[i][i];
    }
    x.iter().all(|v| v.is_finite()).then_some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_chart(chart: ChartId, x: &[f64], n_max: usize) -> Vec<Sample> {
        (0..=n_max)
            .map(|n| {
                let (b, c) = chart_coeffs_unchecked(chart, x, n);
                Sample { n, b, c }
            })
            .collect()
    }

    #[test]
    fn hermite_exact() {
        let s: Vec<Sample> = (0..7)
            .map(|n| Sample {
                n,
                b: 0.0,
                c: n as f64 / 2.0,
            })
            .collect();
        let r = identify(&s).unwrap();
        assert_eq!(r.best().model, Model::Family(FamilyId::Hermite));
        assert_eq!(r.best().residual, 0.0);
        assert_eq!(r.matched, Some(Model::Family(FamilyId::Hermite)));
    }

    #[test]
    fn racah1_round_trip() {
        let x = [0.5, 0.5, 0.5, 0.5];
        let r = identify(&from_chart(ChartId::Racah1, &x, 9)).unwrap();
        assert_eq!(r.best().model, Model::Chart(ChartId::Racah1));
        for (a, b) in r.best().params.iter().zip(&x) {
            assert!((a - b).abs() <= 1e-6 * b, "{:?}", r.best());
        }
    }

    #[test]
    fn ranking_is_nondecreasing() {
        let s = from_chart(ChartId::Wilson2, &[0.3, 0.2, 0.7, 0.4], 8);
        let r = identify(&s).unwrap();
        assert!(r
            .candidates
            .windows(2)
            .all(|w| w[0].residual <= w[1].residual));
        assert_eq!(r.candidates.len(), 12);
    }

    #[test]
    fn too_few_samples() {
        let s: Vec<Sample> = (0..5).map(|n| Sample { n, b: 0.0, c: 1.0 }).collect();
        assert_eq!(
            identify(&s).unwrap_err(),
            AskeyError::InsufficientSamples { got: 5, need: 6 }
        );
    }

    #[test]
    fn solve_small_system() {
        let x = solve(vec![vec![2.0, 1.0], vec![1.0, 3.0]], vec![3.0, 5.0]).unwrap();
        assert!((x[0] - 0.8).abs() < 1e-15 && (x[1] - 1.4).abs() < 1e-15);
    }
}
