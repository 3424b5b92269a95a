//! The charted Askey scheme: three four-dimensional Racah charts, two
//! four-dimensional Wilson charts and the two-dimensional Jacobi chart.
//!
//! A chart point is a vector of nonnegative coordinates. On the open interior
//! (all coordinates positive) the point corresponds to a top-family instance
//! (Racah, Wilson or Jacobi) together with an affine scale `(ρ, σ)`; the chart
//! polynomials are `ρⁿ pₙ(ρ⁻¹x − σ)`. The closed-form chart recurrence
//! coefficients extend continuously to every boundary face, where they become
//! rescaled coefficients of a lower family; [`face_restriction`] returns the
//! registry entry describing that lower family.
//!
//! ```
//! use askey_core::charts::{chart_coeffs, ChartId, ChartPoint};
//!
//! // The Racah chart 1 corner is a rescaled Hermite recurrence: Bₙ = 0, Cₙ = n.
//! let p = ChartPoint::new(ChartId::Racah1, vec![0.0_f64; 4]).unwrap();
//! assert_eq!(chart_coeffs(&p, 3).unwrap(), (0.0, 3.0));
//! ```

mod formulas;
mod registry;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{AskeyError, Result};
use crate::families::{self, hyp, FamilyId, FamilyInstance};
use crate::polyrec::{rescale_coeffs, AffineScale, RecurrenceCoeffs};
use crate::scalar::{convert, rel_err, HighPrec, Real};

pub use registry::{face_restriction, AliasIdentity, ParamFn, PointFn, RestrictionRecord, ScaleFn};

/// Identifier of a chart.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ChartId {
    /// First Racah chart, coordinates `(t₁, t₂, t₃, t₄)`.
    Racah1,
    /// Second Racah chart, coordinates `(s₁, s₂, s₃, s₄)`.
    Racah2,
    /// Third Racah chart, coordinates `(u₁, u₂, u₃, u₄)`.
    Racah3,
    /// First Wilson chart (conjugate pairs), coordinates `(a₁, a₂, a₃, a₄)`.
    Wilson1,
    /// Second Wilson chart (one conjugate pair), coordinates `(b₁, b₂, b₃, b₄)`.
    Wilson2,
    /// Two-dimensional Jacobi chart, coordinates `(α⁻¹, β⁻¹)`.
    Jacobi2D,
}

impl ChartId {
    /// All charts, four-dimensional ones first.
    pub const ALL: [ChartId; 6] = [
        ChartId::Racah1,
        ChartId::Racah2,
        ChartId::Racah3,
        ChartId::Wilson1,
        ChartId::Wilson2,
        ChartId::Jacobi2D,
    ];

    /// The five four-dimensional charts.
    pub const FOUR_D: [ChartId; 5] = [
        ChartId::Racah1,
        ChartId::Racah2,
        ChartId::Racah3,
        ChartId::Wilson1,
        ChartId::Wilson2,
    ];

    /// Number of coordinates.
    pub fn dim(self) -> usize {
        match self {
            ChartId::Jacobi2D => 2,
            _ => 4,
        }
    }

    /// Kebab-case name used on the command line and in reports.
    pub fn name(self) -> &'static str {
        match self {
            ChartId::Racah1 => "racah1",
            ChartId::Racah2 => "racah2",
            ChartId::Racah3 => "racah3",
            ChartId::Wilson1 => "wilson1",
            ChartId::Wilson2 => "wilson2",
            ChartId::Jacobi2D => "jacobi2d",
        }
    }

    /// Coordinate names, in order.
    pub fn coord_names(self) -> &'static [&'static str] {
        match self {
            ChartId::Racah1 => &["t1", "t2", "t3", "t4"],
            ChartId::Racah2 => &["s1", "s2", "s3", "s4"],
            ChartId::Racah3 => &["u1", "u2", "u3", "u4"],
            ChartId::Wilson1 => &["a1", "a2", "a3", "a4"],
            ChartId::Wilson2 => &["b1", "b2", "b3", "b4"],
            ChartId::Jacobi2D => &["inv_alpha", "inv_beta"],
        }
    }

    /// The top family of the chart interior.
    pub fn top_family(self) -> FamilyId {
        match self {
            ChartId::Racah1 | ChartId::Racah2 | ChartId::Racah3 => FamilyId::Racah,
            ChartId::Wilson1 | ChartId::Wilson2 => FamilyId::Wilson,
            ChartId::Jacobi2D => FamilyId::Jacobi,
        }
    }

    /// Every face of the chart, the interior (empty face) first, ordered by
    /// bitmask.
    pub fn faces(self) -> Vec<BoundaryFace> {
        (0u8..(1u8 << self.dim())).map(BoundaryFace).collect()
    }

    /// Interior constraint check on nonnegative coordinates; returns the
    /// first violated condition.
    fn constraint_violation<T: Real>(self, x: &[T]) -> Option<&'static str> {
        let one = T::one();
        match self {
            ChartId::Racah1 => {
                if !(x[0] * x[2] < one) {
                    Some("t1*t3 < 1")
                } else if !(x[1] * x[3] < one) {
                    Some("t2*t4 < 1")
                } else {
                    None
                }
            }
            ChartId::Racah2 => (!(x[1] * x[1] * x[3] < one)).then_some("s2^2*s4 < 1"),
            ChartId::Racah3 => {
                if !(x[1] * x[1] * x[2] * x[3] < one) {
                    Some("u2^2*u3*u4 < 1")
                } else if !(x[1] * x[2] * (x[0] - x[1]) < one) {
                    Some("u2*u3*(u1-u2) < 1")
                } else {
                    None
                }
            }
            ChartId::Wilson1 => {
                (!(one + x[1] - x[0] * x[1] > T::zero())).then_some("1+a2-a1*a2 > 0")
            }
            ChartId::Wilson2 | ChartId::Jacobi2D => None,
        }
    }
}

impl fmt::Display for ChartId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ChartId {
    type Err = AskeyError;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect::<String>()
            .to_ascii_lowercase();
        ChartId::ALL
            .into_iter()
            .find(|c| c.name() == key)
            .ok_or_else(|| AskeyError::InvalidInput(format!("unknown chart `{s}`")))
    }
}

/// A boundary face, given by the set of coordinates (1-based) that vanish.
/// The empty set is the interior.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BoundaryFace(u8);

impl BoundaryFace {
    /// The interior.
    pub const EMPTY: BoundaryFace = BoundaryFace(0);

    /// Face from 1-based coordinate indices. Indices outside `1..=4` are
    /// kept so that [`face_restriction`] can reject them.
    pub fn from_indices(indices: &[usize]) -> Self {
        BoundaryFace(
            indices
                .iter()
                .filter(|&&i| (1..=8).contains(&i))
                .fold(0u8, |m, &i| m | (1 << (i - 1))),
        )
    }

    /// Raw bitmask (bit `i−1` set iff coordinate `i` vanishes).
    pub fn bits(self) -> u8 {
        self.0
    }

    /// Does the face set coordinate `i` (1-based) to zero?
    pub fn contains(self, i: usize) -> bool {
        (1..=8).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    /// The 1-based indices in increasing order.
    pub fn indices(self) -> Vec<usize> {
        (1..=8).filter(|&i| self.contains(i)).collect()
    }

    /// Number of vanishing coordinates (codimension).
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// True for the interior.
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Is `self ⊆ other`?
    pub fn is_subset(self, other: BoundaryFace) -> bool {
        self.0 & !other.0 == 0
    }

    /// Project a point onto the face (set the face coordinates to zero).
    pub fn project<T: Real>(self, coords: &[T]) -> Vec<T> {
        coords
            .iter()
            .enumerate()
            .map(|(i, &v)| if self.contains(i + 1) { T::zero() } else { v })
            .collect()
    }
}

impl fmt::Display for BoundaryFace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices().iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl FromStr for BoundaryFace {
    type Err = AskeyError;

    /// Parses `{1,3}`, `1,3`, `13` or `{}`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
        let mut idx = Vec::new();
        for ch in inner.chars() {
            match ch {
                '1'..='4' => idx.push(ch as usize - '0' as usize),
                ',' | ' ' => {}
                _ => return Err(AskeyError::InvalidInput(format!("malformed face `{s}`"))),
            }
        }
        Ok(BoundaryFace::from_indices(&idx))
    }
}

impl Serialize for BoundaryFace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for BoundaryFace {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A validated point of a chart: nonnegative, finite coordinates satisfying
/// the chart's interior constraints.
#[derive(Debug, Clone, PartialEq)]
pub struct ChartPoint<T> {
    /// The chart.
    pub chart: ChartId,
    /// Coordinates (length [`ChartId::dim`]).
    pub coords: Vec<T>,
}

impl<T: Real> ChartPoint<T> {
    /// Validate and build a chart point.
    ///
    /// # Errors
    ///
    /// [`AskeyError::InvalidInput`] for a wrong number of coordinates;
    /// [`AskeyError::OutOfDomain`] for a negative or non-finite coordinate or
    /// a violated interior constraint.
    pub fn new(chart: ChartId, coords: Vec<T>) -> Result<Self> {
        if coords.len() != chart.dim() {
            return Err(AskeyError::InvalidInput(format!(
                "chart {chart} takes {} coordinates, got {}",
                chart.dim(),
                coords.len()
            )));
        }
        for (name, &v) in chart.coord_names().iter().zip(&coords) {
            if !v.is_finite() {
                return Err(AskeyError::OutOfDomain(format!("{name} is not finite")));
            }
            if v < T::zero() {
                return Err(AskeyError::OutOfDomain(format!("{name} = {v} is negative")));
            }
        }
        if let Some(c) = chart.constraint_violation(&coords) {
            return Err(AskeyError::OutOfDomain(format!(
                "chart {chart} requires {c}"
            )));
        }
        Ok(ChartPoint { chart, coords })
    }

    /// The set of vanishing coordinates.
    pub fn zero_set(&self) -> BoundaryFace {
        let idx: Vec<usize> = (1..=self.coords.len())
            .filter(|&i| self.coords[i - 1].is_zero())
            .collect();
        BoundaryFace::from_indices(&idx)
    }

    /// True if every coordinate is positive.
    pub fn is_interior(&self) -> bool {
        self.zero_set().is_empty()
    }

    /// Convert the coordinates to another backend.
    pub fn convert<U: Real>(&self) -> ChartPoint<U> {
        ChartPoint {
            chart: self.chart,
            coords: self.coords.iter().map(|&v| convert(v)).collect(),
        }
    }

    /// Coordinates as `f64` (for reports).
    pub fn coords_f64(&self) -> Vec<f64> {
        self.coords.iter().map(|v| v.to_f64()).collect()
    }
}

impl<T: Real> fmt::Display for ChartPoint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coords
            .iter()
            .map(|v| format!("{}", v.to_f64()))
            .collect();
        write!(f, "{}({})", self.chart, parts.join(","))
    }
}

/// Top-family instance and affine scale of an interior chart point.
///
/// # Errors
///
/// [`AskeyError::OutOfDomain`] unless the point is strictly interior.
pub fn chart_to_family<T: Real>(p: &ChartPoint<T>) -> Result<(FamilyInstance<T>, AffineScale<T>)> {
    if !p.is_interior() {
        return Err(AskeyError::OutOfDomain(format!(
            "{p} lies on the boundary face {}; chart_to_family needs an interior point",
            p.zero_set()
        )));
    }
    let x = &p.coords;
    let (fam, (rho, sigma)) = match p.chart {
        ChartId::Racah1 => (formulas::racah1_family(x), formulas::racah1_scale(x)),
        ChartId::Racah2 => (formulas::racah2_family(x), formulas::racah2_scale(x)),
        ChartId::Racah3 => (formulas::racah3_family(x), formulas::racah3_scale(x)),
        ChartId::Wilson1 => (formulas::wilson1_family(x), formulas::wilson1_scale(x)),
        ChartId::Wilson2 => (formulas::wilson2_family(x), formulas::wilson2_scale(x)),
        ChartId::Jacobi2D => (formulas::jacobi2d_family(x), formulas::jacobi2d_scale(x)),
    };
    Ok((fam, AffineScale::new(rho, sigma)?))
}

/// Closed-form chart coefficients `(Bₙ, Cₙ)` without domain validation.
/// `C₀` is 0. Callers must pass `chart.dim()` coordinates.
pub fn chart_coeffs_unchecked<T: Real>(chart: ChartId, coords: &[T], n: usize) -> (T, T) {
    let (b, c) = match chart {
        ChartId::Racah1 => formulas::racah1_coeffs(coords, n),
        ChartId::Racah2 => formulas::racah2_coeffs(coords, n),
        ChartId::Racah3 => formulas::racah3_coeffs(coords, n),
        ChartId::Wilson1 => formulas::wilson1_coeffs(coords, n),
        ChartId::Wilson2 => formulas::wilson2_coeffs(coords, n),
        ChartId::Jacobi2D => formulas::jacobi2d_coeffs(coords, n),
    };
    if n == 0 {
        (b, T::zero())
    } else {
        (b, c)
    }
}

/// Closed-form chart coefficients `(Bₙ, Cₙ)` at a validated point, including
/// boundary points.
///
/// # Errors
///
/// [`AskeyError::NonFiniteCoefficient`] if a formula evaluates to NaN or ±∞.
pub fn chart_coeffs<T: Real>(p: &ChartPoint<T>, n: usize) -> Result<(T, T)> {
    let (b, c) = chart_coeffs_unchecked(p.chart, &p.coords, n);
    if !b.is_finite() {
        return Err(AskeyError::NonFiniteCoefficient { which: "B", n });
    }
    if !c.is_finite() {
        return Err(AskeyError::NonFiniteCoefficient { which: "C", n });
    }
    Ok((b, c))
}

/// The chart recurrence at `p` as a coefficient source. The last valid index
/// is that of the family the point's face restricts to (finite for Racah,
/// Hahn, dual Hahn and Krawtchouk records).
///
/// # Errors
///
/// Propagates registry errors.
pub fn chart_recurrence<T: Real>(p: &ChartPoint<T>) -> Result<RecurrenceCoeffs<T>> {
    let rec = face_restriction::<T>(p.chart, p.zero_set())?;
    let n_valid = (rec.params)(&p.coords).n_valid();
    let chart = p.chart;
    let coords = p.coords.clone();
    Ok(RecurrenceCoeffs::new(
        move |n| chart_coeffs_unchecked(chart, &coords, n),
        n_valid,
    ))
}

/// Outcome of one alias identity check inside [`verify_face`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AliasCheck {
    /// Printed form of the target point.
    pub label: String,
    /// Max relative error over `n ≤ n_max`.
    pub max_rel_err: f64,
}

/// Report of [`verify_face`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FaceReport {
    /// Chart.
    pub chart: ChartId,
    /// Face requested.
    pub face: BoundaryFace,
    /// Family of the registry record.
    pub target: FamilyId,
    /// The point (as `f64`).
    pub point: Vec<f64>,
    /// Max relative error of chart coefficients against the rescaled target
    /// recurrence.
    pub coeff_err: f64,
    /// Alias identities of the record.
    pub aliases: Vec<AliasCheck>,
    /// Max relative error of the chart polynomials against the target's
    /// hypergeometric representation (rescaled), at a few sample abscissae.
    pub hyp_err: f64,
    /// Max of all errors above.
    pub max_rel_err: f64,
    /// Tolerance used.
    pub tol: f64,
    /// `max_rel_err ≤ tol`.
    pub pass: bool,
}

/// Abscissae (in the target family's variable, after undoing the scale) used
/// for the hypergeometric cross-check.
pub const HYP_SAMPLE_X: [f64; 4] = [0.37, -1.3, 2.9, 5.1];

/// Verify that the chart coefficients at a face point are the registry's
/// rescaled target recurrence.
///
/// The chart coefficients are evaluated in `T`; the reference quantities
/// (target recurrence, alias points, hypergeometric values) are evaluated in
/// high precision from the same coordinates. Three checks are made for
/// `n ≤ n_max`:
///
/// 1. `chart_coeffs(p, n)` against `rescale(recurrence_coeffs(target), ρ, σ)`;
/// 2. every alias identity of the record;
/// 3. the chart polynomial `Pₙ(x)` (from the chart recurrence) against
///    `ρⁿ pₙ(ρ⁻¹x − σ)` with `pₙ` from the target's hypergeometric
///    representation, at `x = ρ(ξ + σ)` for `ξ` in [`HYP_SAMPLE_X`]. This keeps
///    the check independent of how derived families obtain their
///    coefficients.
///
/// # Errors
///
/// [`AskeyError::OutOfDomain`] if `p` is not on `face` (its zero set must
/// contain `face`) or not in the chart's domain; propagates evaluation
/// errors.
pub fn verify_face<T: Real>(
    chart: ChartId,
    face: BoundaryFace,
    p: &ChartPoint<T>,
    n_max: usize,
    tol: f64,
) -> Result<FaceReport> {
    if p.chart != chart {
        return Err(AskeyError::InvalidInput(format!(
            "point belongs to chart {}, not {chart}",
            p.chart
        )));
    }
    let zs = p.zero_set();
    if !face.is_subset(zs) {
        return Err(AskeyError::OutOfDomain(format!(
            "{p} is not on face {face} (zero set {zs})"
        )));
    }
    // The record that actually governs the point is that of its zero set.
    let rec = face_restriction::<HighPrec>(chart, zs)?;
    let hp: ChartPoint<HighPrec> = p.convert();
    let x = &hp.coords;
    let target = (rec.params)(x);
    let (rho, sigma) = (rec.scale)(x);
    let scale = AffineScale::new(rho, sigma)?;
    let reference = rescale_coeffs(&families::recurrence_coeffs(&target)?, scale);
    let n_top = match target.n_valid() {
        Some(nv) => n_max.min(nv),
        None => n_max,
    };

    let mut coeff_err = 0.0_f64;
    let mut subject = Vec::with_capacity(n_top + 1);
    for n in 0..=n_top {
        let (b, c) = chart_coeffs(p, n)?;
        subject.push((b, c));
        let (rb, rc) = reference.pair(n);
        coeff_err = coeff_err.max(rel_err(b.to_highprec(), rb)).max(if n > 0 {
            rel_err(c.to_highprec(), rc)
        } else {
            0.0
        });
    }

    let mut aliases = Vec::with_capacity(rec.aliases.len());
    for al in &rec.aliases {
        let q = (al.point)(x);
        let (r0, s0) = (al.scale)(x);
        let s = AffineScale::new(r0, s0)?;
        let mut e = 0.0_f64;
        for (n, &(b, c)) in subject.iter().enumerate() {
            let (qb, qc) = chart_coeffs_unchecked(chart, &q, n);
            let (rb, rc) = s.apply(qb, qc);
            e = e.max(rel_err(b.to_highprec(), rb));
            if n > 0 {
                e = e.max(rel_err(c.to_highprec(), rc));
            }
        }
        aliases.push(AliasCheck {
            label: al.label.to_string(),
            max_rel_err: e,
        });
    }

    let mut hyp_err = 0.0_f64;
    for &xi in &HYP_SAMPLE_X {
        let xi_h = HighPrec::from_f64(xi);
        let xc = rho * (xi_h + sigma);
        let xs: T = convert(xc);
        let vals = evaluate_chart_polys(&subject, xs);
        let mut rho_n = HighPrec::one();
        for (n, v) in vals.iter().enumerate() {
            let h = hyp::monic_hyp_eval(&target, xi_h, n)?;
            hyp_err = hyp_err.max(rel_err(v.to_highprec(), rho_n * h));
            rho_n *= rho;
        }
    }

    let max_rel_err = aliases
        .iter()
        .map(|a| a.max_rel_err)
        .fold(coeff_err.max(hyp_err), f64::max);
    Ok(FaceReport {
        chart,
        face,
        target: target.id(),
        point: p.coords_f64(),
        coeff_err,
        aliases,
        hyp_err,
        max_rel_err,
        tol,
        pass: max_rel_err <= tol,
    })
}

/// Values `P₀(x), …, P_{m}(x)` of the monic polynomials built from the given
/// coefficient pairs.
fn evaluate_chart_polys<T: Real>(pairs: &[(T, T)], x: T) -> Vec<T> {
    let mut out = Vec::with_capacity(pairs.len());
    let mut prev = T::zero();
    let mut cur = T::one();
    out.push(cur);
    for &(b, c) in pairs.iter().take(pairs.len().saturating_sub(1)) {
        let next = (x - b) * cur - c * prev;
        prev = cur;
        cur = next;
        out.push(cur);
    }
    out
}

/// Report of [`continuity_probe`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContinuityReport {
    /// Chart.
    pub chart: ChartId,
    /// Face approached.
    pub face: BoundaryFace,
    /// Interior base point (as `f64`).
    pub base: Vec<f64>,
    /// Sup-norm gaps (relative convention) for `k = 1..steps`.
    pub gaps: Vec<f64>,
    /// Last gap.
    pub final_gap: f64,
    /// Gaps nonincreasing over the last five steps.
    pub monotone_tail: bool,
}

/// Approach `face` from the interior point `base`: the face coordinates are
/// scaled by `2^{−k}` for `k = 1..=steps` and the sup-norm (over
/// `n = 0..=n_max`) of `|Δ| / max(1, |limit|)` between chart coefficients at
/// the scaled point and at the face limit is recorded.
///
/// # Errors
///
/// [`AskeyError::OutOfDomain`] if `base` is not interior or a scaled point
/// leaves the domain; propagates [`AskeyError::NonFiniteCoefficient`].
pub fn continuity_probe<T: Real>(
    chart: ChartId,
    face: BoundaryFace,
    base: &ChartPoint<T>,
    steps: usize,
    n_max: usize,
) -> Result<ContinuityReport> {
    if base.chart != chart {
        return Err(AskeyError::InvalidInput(format!(
            "base point belongs to chart {}, not {chart}",
            base.chart
        )));
    }
    if !base.is_interior() {
        return Err(AskeyError::OutOfDomain(format!("{base} is not interior")));
    }
    let limit = ChartPoint::new(chart, face.project(&base.coords))?;
    let lim: Vec<(T, T)> = (0..=n_max)
        .map(|n| chart_coeffs(&limit, n))
        .collect::<Result<_>>()?;
    let half = T::from_f64(0.5);
    let mut factor = T::one();
    let mut gaps = Vec::with_capacity(steps);
    for _ in 0..steps {
        factor *= half;
        let coords: Vec<T> = base
            .coords
            .iter()
            .enumerate()
            .map(|(i, &v)| if face.contains(i + 1) { v * factor } else { v })
            .collect();
        let q = ChartPoint::new(chart, coords)?;
        let mut g = 0.0_f64;
        for (n, &(lb, lc)) in lim.iter().enumerate() {
            let (b, c) = chart_coeffs(&q, n)?;
            g = g.max(rel_err(b, lb)).max(rel_err(c, lc));
        }
        gaps.push(g);
    }
    let final_gap = gaps.last().copied().unwrap_or(f64::NAN);
    let tail = &gaps[gaps.len().saturating_sub(5)..];
    let monotone_tail = tail.windows(2).all(|w| w[1] <= w[0]);
    Ok(ContinuityReport {
        chart,
        face,
        base: base.coords_f64(),
        gaps,
        final_gap,
        monotone_tail,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hp(v: &[f64]) -> Vec<HighPrec> {
        v.iter().map(|&x| HighPrec::from_f64(x)).collect()
    }

    #[test]
    fn face_parse_and_display_round_trip() {
        let f: BoundaryFace = "{1,3}".parse().unwrap();
        assert_eq!(f, BoundaryFace::from_indices(&[3, 1]));
        assert_eq!(f.to_string(), "{1,3}");
        assert_eq!(BoundaryFace::EMPTY.to_string(), "{}");
        assert!("{1,x}".parse::<BoundaryFace>().is_err());
    }

    #[test]
    fn every_face_has_a_record() {
        for chart in ChartId::ALL {
            for face in chart.faces() {
                let r = face_restriction::<f64>(chart, face).unwrap();
                assert!(
                    r.faces.contains(&face),
                    "{chart} {face} not listed in its record"
                );
            }
        }
        assert!(
            face_restriction::<f64>(ChartId::Jacobi2D, BoundaryFace::from_indices(&[3])).is_err()
        );
    }

    #[test]
    fn constraints_are_enforced() {
        assert!(ChartPoint::new(ChartId::Racah1, vec![2.0, 0.1, 0.6, 0.1]).is_err());
        assert!(ChartPoint::new(ChartId::Racah2, vec![1.0, 2.0, 1.0, 0.5]).is_err());
        assert!(ChartPoint::new(ChartId::Racah1, vec![-0.1, 0.1, 0.1, 0.1]).is_err());
        assert!(ChartPoint::new(ChartId::Racah1, vec![0.1; 3]).is_err());
        assert!(ChartPoint::new(ChartId::Wilson1, vec![3.0, 1.0, 1.0, 1.0]).is_err());
    }

    #[test]
    fn racah1_half_point_parameters() {
        let p = ChartPoint::new(ChartId::Racah1, hp(&[0.5; 4])).unwrap();
        let (f, _) = chart_to_family(&p).unwrap();
        match f {
            FamilyInstance::Racah {
                alpha,
                beta,
                n,
                delta,
            } => {
                assert!(rel_err(alpha, HighPrec::from_f64(2.0)) < 1e-60);
                assert!(rel_err(beta, HighPrec::from_f64(4.0)) < 1e-60);
                assert!(rel_err(n, HighPrec::from_f64(4.0)) < 1e-60);
                assert!(rel_err(delta, HighPrec::from_f64(18.0)) < 1e-60);
            }
            other => panic!("unexpected family {other}"),
        }
    }

    #[test]
    fn racah2_point_parameters() {
        let p = ChartPoint::new(ChartId::Racah2, hp(&[1.0, 1.0, 1.0, 0.5])).unwrap();
        let (f, _) = chart_to_family(&p).unwrap();
        let got: Vec<f64> = f.params().iter().map(|c| c.re.to_f64()).collect();
        let want = [2.0, 4.0, 2.0, 7.0];
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() < 1e-12, "{got:?}");
        }
    }

    #[test]
    fn wilson1_unit_point_parameters() {
        let p = ChartPoint::new(ChartId::Wilson1, vec![1.0_f64; 4]).unwrap();
        let (f, _) = chart_to_family(&p).unwrap();
        let ps = f.params();
        let want = [(1.0, 0.0), (1.0, -1.0), (1.0, 0.0), (1.0, 1.0)];
        for (g, (re, im)) in ps.iter().zip(want) {
            assert!(
                (g.re - re).abs() < 1e-14 && (g.im - im).abs() < 1e-14,
                "{ps:?}"
            );
        }
    }

    #[test]
    fn racah1_corner_is_hermite() {
        let p = ChartPoint::new(ChartId::Racah1, vec![0.0_f64; 4]).unwrap();
        for n in 0..8 {
            assert_eq!(chart_coeffs(&p, n).unwrap(), (0.0, n as f64));
        }
    }

    #[test]
    fn hahn_face_verifies() {
        let p = ChartPoint::new(ChartId::Racah1, vec![0.5, 0.5, 0.0, 0.5]).unwrap();
        let r = verify_face(
            ChartId::Racah1,
            BoundaryFace::from_indices(&[3]),
            &p,
            4,
            1e-10,
        )
        .unwrap();
        assert_eq!(r.target, FamilyId::Hahn);
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn wilson1_jacobi_face_verifies() {
        let p = ChartPoint::new(ChartId::Wilson1, vec![1.0, 1.0, 0.0, 1.0]).unwrap();
        let r = verify_face(
            ChartId::Wilson1,
            BoundaryFace::from_indices(&[3]),
            &p,
            6,
            1e-10,
        )
        .unwrap();
        assert_eq!(r.target, FamilyId::Jacobi);
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn verify_face_rejects_off_face_points() {
        let p = ChartPoint::new(ChartId::Racah1, vec![0.5; 4]).unwrap();
        assert!(verify_face(
            ChartId::Racah1,
            BoundaryFace::from_indices(&[3]),
            &p,
            4,
            1e-10
        )
        .is_err());
    }

    #[test]
    fn jacobi2d_corner_probe_tends_to_hermite() {
        let base = ChartPoint::new(ChartId::Jacobi2D, vec![1.0_f64, 1.0]).unwrap();
        let r = continuity_probe(
            ChartId::Jacobi2D,
            BoundaryFace::from_indices(&[1, 2]),
            &base,
            20,
            6,
        )
        .unwrap();
        let lim = ChartPoint::new(ChartId::Jacobi2D, vec![0.0_f64, 0.0]).unwrap();
        for n in 1..6 {
            let (b, c) = chart_coeffs(&lim, n).unwrap();
            // Rescaled Hermite with ρ = 2^{3/2}: Cₙ = ρ²·n/2 = 4n.
            assert_eq!(b, 0.0);
            assert!((c - 4.0 * n as f64).abs() < 1e-13);
        }
        assert!(r.gaps.first().unwrap() > r.gaps.last().unwrap());
    }
}
