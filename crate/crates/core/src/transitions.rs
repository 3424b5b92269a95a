//! Coordinate changes between the three Racah charts.
//!
//! | Pair | Forward | Backward |
//! |------|---------|----------|
//! | [`TransitionKind::T12`] | `t → s` | `s → t` |
//! | [`TransitionKind::T23`] | `s → u` | `u → s` |
//! | [`TransitionKind::T13`] | `t → u` | `u → t` |
//!
//! Each map is a homeomorphism between explicitly described subsets of the
//! two charts; [`transition_domain`] evaluates every defining inequality and
//! [`transition`] refuses points outside it. The two maps into the third
//! chart involve the square roots of the discriminants
//!
//! ```text
//! S = s₄²(1+2s₁+s₁²−s₁²s₂s₃)² − 4s₁²s₃s₄(1+s₁),
//! T = t₂²t₃²(t₄−t₁²)² − 4t₁²t₂t₃(1−t₁t₃(1+t₂t₄)).
//! ```
//!
//! In their directly displayed form these two maps subtract nearly equal
//! quantities and lose all accuracy in binary64 on parts of the domain.
//! [`transition`] therefore evaluates algebraically equivalent rationalised
//! forms (no subtraction of `√S` or `√T`); [`transition_printed`] keeps the
//! displayed forms for cross-checking in high precision.
//!
//! A transition is a reparametrisation of one Racah family: both sides map to
//! the same `(α, β, N, δ)` and their monic recurrences agree after undoing
//! each chart's affine scale. [`verify_transition`] checks exactly this.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::charts::{chart_coeffs_unchecked, face_restriction, ChartId, ChartPoint};
use crate::error::{AskeyError, Result};
use crate::polyrec::AffineScale;
use crate::scalar::{convert, rel_err, HighPrec, Real};

/// Which pair of Racah charts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TransitionKind {
    /// First ↔ second chart.
    T12,
    /// Second ↔ third chart.
    T23,
    /// First ↔ third chart.
    T13,
}

impl TransitionKind {
    /// All three pairs.
    pub const ALL: [TransitionKind; 3] = [
        TransitionKind::T12,
        TransitionKind::T23,
        TransitionKind::T13,
    ];

    /// `(forward source, forward target)`.
    pub fn charts(self) -> (ChartId, ChartId) {
        match self {
            TransitionKind::T12 => (ChartId::Racah1, ChartId::Racah2),
            TransitionKind::T23 => (ChartId::Racah2, ChartId::Racah3),
            TransitionKind::T13 => (ChartId::Racah1, ChartId::Racah3),
        }
    }
}

impl fmt::Display for TransitionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TransitionKind::T12 => "T12",
            TransitionKind::T23 => "T23",
            TransitionKind::T13 => "T13",
        })
    }
}

impl FromStr for TransitionKind {
    type Err = AskeyError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "T12" => Ok(TransitionKind::T12),
            "T23" => Ok(TransitionKind::T23),
            "T13" => Ok(TransitionKind::T13),
            _ => Err(AskeyError::InvalidInput(format!(
                "unknown transition `{s}`"
            ))),
        }
    }
}

/// Direction of a transition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// Lower-numbered chart to higher-numbered chart.
    Forward,
    /// Higher-numbered chart to lower-numbered chart.
    Backward,
}

/// A transition with a direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TransitionPair {
    /// Which charts.
    pub kind: TransitionKind,
    /// Which way.
    pub direction: Direction,
}

impl TransitionPair {
    /// Forward transition of `kind`.
    pub fn forward(kind: TransitionKind) -> Self {
        TransitionPair {
            kind,
            direction: Direction::Forward,
        }
    }

    /// Backward transition of `kind`.
    pub fn backward(kind: TransitionKind) -> Self {
        TransitionPair {
            kind,
            direction: Direction::Backward,
        }
    }

    /// The opposite direction.
    pub fn inverse(self) -> Self {
        TransitionPair {
            kind: self.kind,
            direction: match self.direction {
                Direction::Forward => Direction::Backward,
                Direction::Backward => Direction::Forward,
            },
        }
    }

    /// Chart of the input point.
    pub fn source(self) -> ChartId {
        let (a, b) = self.kind.charts();
        match self.direction {
            Direction::Forward => a,
            Direction::Backward => b,
        }
    }

    /// Chart of the image point.
    pub fn target(self) -> ChartId {
        self.inverse().source()
    }
}

impl fmt::Display for TransitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}->{}", self.kind, self.source(), self.target())
    }
}

/// Which discriminant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DiscriminantKind {
    /// `S(s)`, governing `s ↔ u`.
    S,
    /// `T(t)`, governing `t ↔ u`.
    T,
}

/// A discriminant value together with the magnitude of its terms (used to
/// snap rounding-level negatives to zero).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Discriminant<T> {
    /// Which discriminant.
    pub kind: DiscriminantKind,
    /// Its value.
    pub value: T,
    /// Sum of the absolute values of its two terms.
    pub scale: T,
}

impl<T: Real> Discriminant<T> {
    /// Value with rounding-level negatives replaced by zero.
    pub fn snapped(&self) -> T {
        let tol = T::from_f64(90.0 * T::unit_roundoff()) * self.scale;
        if self.value < T::zero() && -self.value <= tol {
            T::zero()
        } else {
            self.value
        }
    }

    /// `S ≥ 0` (resp. `T ≥ 0`) after snapping.
    pub fn is_admissible(&self) -> bool {
        self.snapped() >= T::zero()
    }
}

/// `S(s) = s₄²P² − 4s₁²s₃s₄(1+s₁)` with `P = 1+2s₁+s₁²−s₁²s₂s₃`.
pub fn discriminant_s<T: Real>(s: &[T]) -> Discriminant<T> {
    let (s1, s2, s3, s4) = (s[0], s[1], s[2], s[3]);
    let one = T::one();
    let p = one + T::from_f64(2.0) * s1 + s1 * s1 - s1 * s1 * s2 * s3;
    let a = s4 * s4 * p * p;
    let b = T::from_f64(4.0) * s1 * s1 * s3 * s4 * (one + s1);
    Discriminant {
        kind: DiscriminantKind::S,
        value: a - b,
        scale: a.abs() + b.abs(),
    }
}

/// `T(t) = t₂²t₃²(t₄−t₁²)² − 4t₁²t₂t₃k` with `k = 1−t₁t₃(1+t₂t₄)`.
pub fn discriminant_t<T: Real>(t: &[T]) -> Discriminant<T> {
    let (t1, t2, t3, t4) = (t[0], t[1], t[2], t[3]);
    let k = T::one() - t1 * t3 * (T::one() + t2 * t4);
    let d = t4 - t1 * t1;
    let a = t2 * t2 * t3 * t3 * d * d;
    let b = T::from_f64(4.0) * t1 * t1 * t2 * t3 * k;
    Discriminant {
        kind: DiscriminantKind::T,
        value: a - b,
        scale: a.abs() + b.abs(),
    }
}

/// Result of [`transition_domain`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DomainCheck {
    /// Conjunction of all clauses.
    pub ok: bool,
    /// The failed clauses, in printed order.
    pub failed: Vec<String>,
}

/// Evaluate every inequality describing the source set of `pair`.
///
/// ```
/// use askey_core::charts::{ChartId, ChartPoint};
/// use askey_core::transitions::{transition_domain, TransitionKind, TransitionPair};
///
/// let t = ChartPoint::new(ChartId::Racah1, vec![0.5, 0.5, 0.8, 1.0]).unwrap();
/// assert!(transition_domain(TransitionPair::forward(TransitionKind::T12), &t).ok);
/// ```
pub fn transition_domain<T: Real>(pair: TransitionPair, p: &ChartPoint<T>) -> DomainCheck {
    if p.chart != pair.source() {
        return DomainCheck {
            ok: false,
            failed: vec![format!("point must lie in chart {}", pair.source())],
        };
    }
    transition_domain_coords(pair, &p.coords)
}

/// [`transition_domain`] on raw source coordinates, which need not form a
/// valid chart point (wrong length is reported as a failed clause).
///
/// ```
/// use askey_core::transitions::{transition_domain_coords, TransitionKind, TransitionPair};
///
/// let d = transition_domain_coords(TransitionPair::forward(TransitionKind::T12), &[1.0, 0.0, 1.0, 1.0]);
/// assert!(!d.ok);
/// ```
pub fn transition_domain_coords<T: Real>(pair: TransitionPair, x: &[T]) -> DomainCheck {
    let mut failed: Vec<String> = Vec::new();
    if x.len() != 4 {
        failed.push("four coordinates".to_string());
        return DomainCheck { ok: false, failed };
    }
    if x.iter().any(|v| !v.is_finite()) {
        failed.push("finite coordinates".to_string());
        return DomainCheck { ok: false, failed };
    }
    let zero = T::zero();
    let one = T::one();
    let mut clause = |ok: bool, text: &str| {
        if !ok {
            failed.push(text.to_string());
        }
    };
    let names = pair.source().coord_names();
    let mut sign = |strict: &[usize]| {
        for i in 0..4 {
            if strict.contains(&i) {
                clause(x[i] > zero, &format!("{}>0", names[i]));
            } else {
                clause(x[i] >= zero, &format!("{}>=0", names[i]));
            }
        }
    };
    match (pair.kind, pair.direction) {
        (TransitionKind::T12, Direction::Forward) => {
            sign(&[2, 3]);
            let (t1, t2, t3, t4) = (x[0], x[1], x[2], x[3]);
            clause(t1 * t3 * (one + t2 * t4) < one, "t1*t3*(1+t2*t4)<1");
            clause(t2 * t4 < one, "t2*t4<1");
        }
        (TransitionKind::T12, Direction::Backward) => {
            sign(&[1, 2]);
            let (s2, s4) = (x[1], x[3]);
            clause(s2 * s2 * s4 < one, "s2^2*s4<1");
        }
        (TransitionKind::T23, Direction::Forward) => {
            sign(&[0, 2, 3]);
            let (s1, s2, s3, s4) = (x[0], x[1], x[2], x[3]);
            clause(s2 * s2 * s4 < one, "s2^2*s4<1");
            clause(discriminant_s(x).is_admissible(), "S>=0");
            let p = one + T::from_f64(2.0) * s1 + s1 * s1 - s1 * s1 * s2 * s3;
            clause(
                -T::from_f64(2.0) * s1 * s1 * s3 + s4 * (one + s1) * p >= zero,
                "-2*s1^2*s3+s4*(1+s1)*(1+2*s1+s1^2-s1^2*s2*s3)>=0",
            );
        }
        (TransitionKind::T23, Direction::Backward) => {
            sign(&[0, 2, 3]);
            u_side_clauses(x, &mut clause);
        }
        (TransitionKind::T13, Direction::Forward) => {
            sign(&[0, 1, 2, 3]);
            let (t1, t2, t3, t4) = (x[0], x[1], x[2], x[3]);
            let k = one - t1 * t3 * (one + t2 * t4);
            clause(t2 * t4 < one, "t2*t4<1");
            clause(discriminant_t(x).is_admissible(), "T>=0");
            clause(
                t2 * t3 * t4 * (t4 - t1 * t1) >= T::from_f64(2.0) * t1 * t1 * k,
                "t2*t3*t4*(t4-t1^2)>=2*t1^2*(1-t1*t3*(1+t2*t4))",
            );
            clause(k > zero, "1-t1*t3*(1+t2*t4)>0");
        }
        (TransitionKind::T13, Direction::Backward) => {
            sign(&[0, 1, 2, 3]);
            u_side_clauses(x, &mut clause);
        }
    }
    DomainCheck {
        ok: failed.is_empty(),
        failed,
    }
}

fn u_side_clauses<T: Real>(x: &[T], clause: &mut impl FnMut(bool, &str)) {
    let one = T::one();
    let (u1, u2, u3, u4) = (x[0], x[1], x[2], x[3]);
    clause(u2 * u2 * u3 * u4 < one, "u2^2*u3*u4<1");
    clause(u2 * u3 * (u1 - u2) < one, "u2*u3*(u1-u2)<1");
    clause(u1 * (one + u2 * u3) <= one, "u1*(1+u2*u3)<=1");
}

fn check<T: Real>(pair: TransitionPair, p: &ChartPoint<T>) -> Result<()> {
    let d = transition_domain(pair, p);
    if d.ok {
        Ok(())
    } else {
        Err(AskeyError::OutOfDomain(format!(
            "{pair}: {p} violates {}",
            d.failed.first().map(String::as_str).unwrap_or("the domain")
        )))
    }
}

/// Apply a transition, using the numerically stable forms.
///
/// ```
/// use askey_core::charts::{ChartId, ChartPoint};
/// use askey_core::transitions::{transition, TransitionKind, TransitionPair};
///
/// let s = ChartPoint::new(ChartId::Racah2, vec![1.0, 1.0, 1.0, 0.5]).unwrap();
/// let t = transition(TransitionPair::backward(TransitionKind::T12), &s).unwrap();
/// assert_eq!(t.coords, vec![0.5, 0.5, 0.8, 1.0]);
/// ```
///
/// # Errors
///
/// [`AskeyError::OutOfDomain`] naming the first violated inequality.
pub fn transition<T: Real>(pair: TransitionPair, p: &ChartPoint<T>) -> Result<ChartPoint<T>> {
    check(pair, p)?;
    let x = &p.coords;
    let y = match (pair.kind, pair.direction) {
        (TransitionKind::T12, Direction::Forward) => t_to_s(x),
        (TransitionKind::T12, Direction::Backward) => s_to_t(x),
        (TransitionKind::T23, Direction::Forward) => s_to_u_stable(x),
        (TransitionKind::T23, Direction::Backward) => u_to_s(x),
        (TransitionKind::T13, Direction::Forward) => t_to_u_stable(x),
        (TransitionKind::T13, Direction::Backward) => u_to_t(x),
    };
    ChartPoint::new(pair.target(), y)
}

/// Apply a transition using the displayed closed forms (with `√S`, `√T`
/// subtracted). Ill-conditioned in binary64; intended for high-precision
/// cross-checks of [`transition`].
///
/// The third coordinate of `t → u` carries the factor `t₄` in its
/// denominator, `u₃ = (… + t₄√T)/(2t₁t₄(1−t₁t₃(1+t₂t₄)))`; without it the
/// map is not inverse to `u → t`.
///
/// # Errors
///
/// As [`transition`].
pub fn transition_printed<T: Real>(
    pair: TransitionPair,
    p: &ChartPoint<T>,
) -> Result<ChartPoint<T>> {
    check(pair, p)?;
    let x = &p.coords;
    let y = match (pair.kind, pair.direction) {
        (TransitionKind::T23, Direction::Forward) => s_to_u_printed(x),
        (TransitionKind::T13, Direction::Forward) => t_to_u_printed(x),
        _ => return transition(pair, p),
    };
    ChartPoint::new(pair.target(), y)
}

fn k<T: Real>(v: f64) -> T {
    T::from_f64(v)
}

fn t_to_s<T: Real>(t: &[T]) -> Vec<T> {
    let (t1, t2, t3, t4) = (t[0], t[1], t[2], t[3]);
    let one = T::one();
    let q = one - t1 * t2 * t3 * t4;
    vec![
        t1 * t3 / (one - t1 * t3 - t1 * t2 * t3 * t4),
        q / t3,
        q / (t3 * t4),
        t2 * t3 * t3 * t4 / (q * q),
    ]
}

fn s_to_t<T: Real>(s: &[T]) -> Vec<T> {
    let (s1, s2, s3, s4) = (s[0], s[1], s[2], s[3]);
    let one = T::one();
    vec![
        s1 * s2 / (one + s1),
        s2 * s3 * s4,
        (one + s1) / (s2 * (one + s1 + s1 * s2 * s2 * s4)),
        s2 / s3,
    ]
}

fn u_to_s<T: Real>(u: &[T]) -> Vec<T> {
    let (u1, u2, u3, u4) = (u[0], u[1], u[2], u[3]);
    let one = T::one();
    let m = one - u1 * u2 * u3;
    let w = one + u4 * m;
    vec![
        one / (u4 * m),
        u2 * w / (one + u1),
        u1 * u3 * w,
        (one + u1) * (one + u1) * u3 * u4 / (w * w),
    ]
}

fn u_to_t<T: Real>(u: &[T]) -> Vec<T> {
    let (u1, u2, u3, u4) = (u[0], u[1], u[2], u[3]);
    let one = T::one();
    vec![
        u2 / (one + u1),
        u1 * u2 * u3 * u3 * u4 * (one + u1),
        (one + u1) / (u2 * (one + u4 * (one - u2 * u3 * (u1 - u2)))),
        u2 / (u1 * u3 * (one + u1)),
    ]
}

/// `s → u` without subtracting `√S`: with `P = 1+2s₁+s₁²−s₁²s₂s₃`,
/// `X = −2s₁²s₃ + s₄(1+s₁)P` and `Q = 1+s₂s₄+s₁s₂s₄`,
///
/// ```text
/// u₁ = 2s₁²s₃ / (X + (1+s₁)√S),
/// u₂ = s₁s₂²s₄/Q + 2s₁s₂s₄(1+s₁) / (Q(s₄P + √S)),
/// u₃ = (X + (1+s₁)√S) / (2s₁(1+s₁)),
/// u₄ = 1/s₁ + 2s₁s₂s₃s₄ / (s₄P + √S).
/// ```
fn s_to_u_stable<T: Real>(s: &[T]) -> Vec<T> {
    let (s1, s2, s3, s4) = (s[0], s[1], s[2], s[3]);
    let one = T::one();
    let two = k::<T>(2.0);
    let p = one + two * s1 + s1 * s1 - s1 * s1 * s2 * s3;
    let r = discriminant_s(s).snapped().sqrt();
    let x = -two * s1 * s1 * s3 + s4 * (one + s1) * p;
    let q = one + s2 * s4 + s1 * s2 * s4;
    let plus = x + (one + s1) * r;
    let sp = s4 * p + r;
    vec![
        two * s1 * s1 * s3 / plus,
        s1 * s2 * s2 * s4 / q + two * s1 * s2 * s4 * (one + s1) / (q * sp),
        plus / (two * s1 * (one + s1)),
        one / s1 + two * s1 * s2 * s3 * s4 / sp,
    ]
}

fn s_to_u_printed<T: Real>(s: &[T]) -> Vec<T> {
    let (s1, s2, s3, s4) = (s[0], s[1], s[2], s[3]);
    let one = T::one();
    let two = k::<T>(2.0);
    let p = one + two * s1 + s1 * s1 - s1 * s1 * s2 * s3;
    let r = discriminant_s(s).snapped().sqrt();
    let q = one + s2 * s4 + s1 * s2 * s4;
    let x = -two * s1 * s1 * s3 + s4 * (one + s1) * p;
    vec![
        (x - (one + s1) * r) / (two * s1 * s1 * s3 * q),
        s1 * s2 * s2 * s4 / q + s2 * (s4 * p - r) / (two * s1 * s3 * q),
        (x + (one + s1) * r) / (two * s1 * (one + s1)),
        one / s1 + s2 * (s4 * p - r) / (two * s1 * (one + s1)),
    ]
}

/// `t → u` without subtracting `√T`: with `k = 1−t₁t₃(1+t₂t₄)`,
/// `A′ = t₂t₃(t₄−t₁²)`, `A = t₄A′ − 2t₁²k` and `A″ = t₂t₃(t₁²+t₄)`,
///
/// ```text
/// u₁ = 2t₁²k / (A + t₄√T),
/// u₂ = 2t₁t₂t₃t₄ / (A″ + √T),
/// u₃ = (A + t₄√T) / (2t₁t₄k),
/// u₄ = (2k + 4t₁²t₂t₃k/(A′ + √T)) / (2t₁t₃).
/// ```
fn t_to_u_stable<T: Real>(t: &[T]) -> Vec<T> {
    let (t1, t2, t3, t4) = (t[0], t[1], t[2], t[3]);
    let one = T::one();
    let two = k::<T>(2.0);
    let kk = one - t1 * t3 * (one + t2 * t4);
    let r = discriminant_t(t).snapped().sqrt();
    let a1 = t2 * t3 * (t4 - t1 * t1);
    let a = t4 * a1 - two * t1 * t1 * kk;
    let a2 = t2 * t3 * (t1 * t1 + t4);
    let plus = a + t4 * r;
    vec![
        two * t1 * t1 * kk / plus,
        two * t1 * t2 * t3 * t4 / (a2 + r),
        plus / (two * t1 * t4 * kk),
        (two * kk + k::<T>(4.0) * t1 * t1 * t2 * t3 * kk / (a1 + r)) / (two * t1 * t3),
    ]
}

fn t_to_u_printed<T: Real>(t: &[T]) -> Vec<T> {
    let (t1, t2, t3, t4) = (t[0], t[1], t[2], t[3]);
    let one = T::one();
    let two = k::<T>(2.0);
    let kk = one - t1 * t3 * (one + t2 * t4);
    let r = discriminant_t(t).snapped().sqrt();
    let num = t2 * t3 * t4 * (t4 - t1 * t1) - two * t1 * t1 * kk;
    let den = kk + t2 * t3 * t4;
    vec![
        (num - t4 * r) / (two * t1 * t1 * den),
        (t2 * t3 * t4 * (t1 * t1 + t4) - t4 * r) / (two * t1 * den),
        (num + t4 * r) / (two * t1 * t4 * kk),
        (two * kk + t2 * t3 * (t4 - t1 * t1) - r) / (two * t1 * t3),
    ]
}

/// Report of [`verify_transition`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransitionReport {
    /// The transition.
    pub pair: TransitionPair,
    /// Source point (as `f64`).
    pub point: Vec<f64>,
    /// Image point (as `f64`).
    pub image: Vec<f64>,
    /// Round-trip error `|T⁻¹(T(p)) − p|` (relative convention, max over
    /// coordinates).
    pub round_trip_err: f64,
    /// Max relative deviation of the family parameters on the two sides.
    pub param_err: f64,
    /// Max relative deviation of the unrescaled recurrences on the two sides.
    pub coeff_err: f64,
    /// The families restricted to on the two sides agree.
    pub same_family: bool,
    /// Max of the three errors.
    pub max_rel_err: f64,
    /// Tolerance.
    pub tol: f64,
    /// `same_family && max_rel_err ≤ tol`.
    pub pass: bool,
}

/// Verify a transition at `p`:
///
/// 1. the round trip through the inverse map returns `p`;
/// 2. the family parameters of the registry record governing each side
///    (the Racah record in the interior, a lower family on a face) agree;
/// 3. undoing each side's own affine scale gives identical `(Bₙ, Cₙ)` for
///    `n ≤ n_max`.
///
/// The transition and its inverse are evaluated in `T`; the parameter and
/// coefficient comparisons are evaluated in high precision from the
/// `T`-valued points.
///
/// # Errors
///
/// [`AskeyError::OutOfDomain`] if `p` is outside the source set.
pub fn verify_transition<T: Real>(
    pair: TransitionPair,
    p: &ChartPoint<T>,
    n_max: usize,
    tol: f64,
) -> Result<TransitionReport> {
    let q = transition(pair, p)?;
    let back = transition(pair.inverse(), &q)?;
    let round_trip_err = back
        .coords
        .iter()
        .zip(&p.coords)
        .map(|(&a, &b)| rel_err(a, b))
        .fold(0.0, f64::max);

    let ph: ChartPoint<HighPrec> = p.convert();
    let qh: ChartPoint<HighPrec> = q.convert();
    let rp = face_restriction::<HighPrec>(ph.chart, ph.zero_set())?;
    let rq = face_restriction::<HighPrec>(qh.chart, qh.zero_set())?;
    let fp = (rp.params)(&ph.coords);
    let fq = (rq.params)(&qh.coords);
    let same_family = fp.id() == fq.id();
    let param_err = if same_family {
        fp.params()
            .iter()
            .zip(fq.params().iter())
            .map(|(a, b)| rel_err(a.re, b.re).max(rel_err(a.im, b.im)))
            .fold(0.0, f64::max)
    } else {
        f64::INFINITY
    };
    let sp = scale_of(&rp.scale, &ph.coords)?;
    let sq = scale_of(&rq.scale, &qh.coords)?;
    let mut coeff_err = 0.0_f64;
    for n in 0..=n_max {
        let (bp, cp) = chart_coeffs_unchecked(ph.chart, &ph.coords, n);
        let (bq, cq) = chart_coeffs_unchecked(qh.chart, &qh.coords, n);
        let (ub, uc) = sp.invert(bp, cp);
        let (vb, vc) = sq.invert(bq, cq);
        coeff_err = coeff_err.max(rel_err(vb, ub));
        if n > 0 {
            coeff_err = coeff_err.max(rel_err(vc, uc));
        }
    }
    let max_rel_err = round_trip_err.max(param_err).max(coeff_err);
    Ok(TransitionReport {
        pair,
        point: p.coords_f64(),
        image: q.coords_f64(),
        round_trip_err,
        param_err,
        coeff_err,
        same_family,
        max_rel_err,
        tol,
        pass: same_family && max_rel_err <= tol,
    })
}

fn scale_of(f: &crate::charts::ScaleFn<HighPrec>, x: &[HighPrec]) -> Result<AffineScale<HighPrec>> {
    let (rho, sigma) = f(x);
    AffineScale::new(rho, sigma)
}

/// Compare `T13(p)` with `T23(T12(p))` (relative convention, max over
/// coordinates). Coherence of the three maps is not asserted anywhere; this
/// is an exploratory diagnostic.
///
/// # Errors
///
/// [`AskeyError::OutOfDomain`] if `p` or `T12(p)` is outside the relevant
/// source set.
pub fn composition_gap<T: Real>(p: &ChartPoint<T>) -> Result<f64> {
    let direct = transition(TransitionPair::forward(TransitionKind::T13), p)?;
    let s = transition(TransitionPair::forward(TransitionKind::T12), p)?;
    let via = transition(TransitionPair::forward(TransitionKind::T23), &s)?;
    Ok(direct
        .coords
        .iter()
        .zip(&via.coords)
        .map(|(&a, &b)| rel_err(a, b))
        .fold(0.0, f64::max))
}

/// Compare [`transition`] with [`transition_printed`] in high precision.
///
/// # Errors
///
/// As [`transition`].
pub fn printed_form_gap<T: Real>(pair: TransitionPair, p: &ChartPoint<T>) -> Result<f64> {
    let ph: ChartPoint<HighPrec> = p.convert();
    let a = transition(pair, &ph)?;
    let b = transition_printed(pair, &ph)?;
    Ok(a.coords
        .iter()
        .zip(&b.coords)
        .map(|(&x, &y)| rel_err(x, y))
        .fold(0.0, f64::max))
}

/// Convert a point to another backend and re-validate it.
///
/// # Errors
///
/// [`AskeyError::OutOfDomain`] if rounding pushed it out of its chart.
pub fn revalidate<S: Real, T: Real>(p: &ChartPoint<S>) -> Result<ChartPoint<T>> {
    ChartPoint::new(p.chart, p.coords.iter().map(|&v| convert(v)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(chart: ChartId, c: &[f64]) -> ChartPoint<f64> {
        ChartPoint::new(chart, c.to_vec()).unwrap()
    }

    #[test]
    fn t12_hand_example() {
        let s = pt(ChartId::Racah2, &[1.0, 1.0, 1.0, 0.5]);
        let t = transition(TransitionPair::backward(TransitionKind::T12), &s).unwrap();
        assert_eq!(t.coords, vec![0.5, 0.5, 0.8, 1.0]);
        let s2 = transition(TransitionPair::forward(TransitionKind::T12), &t).unwrap();
        for (a, b) in s2.coords.iter().zip(&s.coords) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn t12_domain_examples() {
        let fwd = TransitionPair::forward(TransitionKind::T12);
        assert!(transition_domain(fwd, &pt(ChartId::Racah1, &[0.5, 0.5, 0.8, 1.0])).ok);
        let d = transition_domain_coords(fwd, &[1.0, 0.0, 1.0, 1.0]);
        assert!(!d.ok);
        assert_eq!(d.failed, vec!["t1*t3*(1+t2*t4)<1".to_string()]);
    }

    #[test]
    fn negative_discriminant_is_rejected() {
        // t₄ = t₁² makes the first term of T vanish; T = −4t₁²t₂t₃k < 0.
        let t = pt(ChartId::Racah1, &[0.5, 0.5, 0.5, 0.25]);
        let d = transition_domain(TransitionPair::forward(TransitionKind::T13), &t);
        assert!(d.failed.contains(&"T>=0".to_string()));
        assert!(matches!(
            transition(TransitionPair::forward(TransitionKind::T13), &t),
            Err(AskeyError::OutOfDomain(_))
        ));
        let s = pt(ChartId::Racah2, &[1.0, 0.1, 1.0, 0.01]);
        let d = transition_domain(TransitionPair::forward(TransitionKind::T23), &s);
        assert!(d.failed.contains(&"S>=0".to_string()));
    }

    #[test]
    fn t12_parameters_agree_at_hand_point() {
        let s = pt(ChartId::Racah2, &[1.0, 1.0, 1.0, 0.5]);
        let r =
            verify_transition(TransitionPair::backward(TransitionKind::T12), &s, 6, 1e-10).unwrap();
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn stable_and_printed_forms_agree_in_high_precision() {
        let u = ChartPoint::<HighPrec>::new(
            ChartId::Racah3,
            [0.3, 0.4, 0.5, 0.6]
                .iter()
                .map(|&v| HighPrec::from_f64(v))
                .collect(),
        )
        .unwrap();
        let s = transition(TransitionPair::backward(TransitionKind::T23), &u).unwrap();
        let t = transition(TransitionPair::backward(TransitionKind::T13), &u).unwrap();
        assert!(
            printed_form_gap(TransitionPair::forward(TransitionKind::T23), &s).unwrap() < 1e-50
        );
        assert!(
            printed_form_gap(TransitionPair::forward(TransitionKind::T13), &t).unwrap() < 1e-50
        );
    }
}
