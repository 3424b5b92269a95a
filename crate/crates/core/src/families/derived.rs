//! Recurrence coefficients of the families whose closed forms are obtained
//! from chart faces.
//!
//! Each derived family is placed on the boundary face of a chart that
//! restricts to it; its monic recurrence pair is the chart pair at that point
//! un-rescaled by the face's `(ρ, σ)`:
//!
//! | family | chart | face | coordinates |
//! |---|---|---|---|
//! | Hahn `(α, β, N)` | Racah1 | `{3}` | `t = (1/α, α/β, 0, β/(αN))` |
//! | Meixner `(β, c)` | Racah1 | `{2,3}` | `t₁ = 1/(β−1)`, `t₄ = t₁(1−c)/c` |
//! | Krawtchouk `(p, N)` | Racah1 | `{1,3}` | `t₂ = p/(1−p)`, `t₄ = 1/(t₂N)` |
//! | Charlier `(a)` | Racah1 | `{1,2,3}` | `t₄ = 1/a` |
//! | dual Hahn `(γ, δ, N)` | Racah2 | `{3}` | `s₁ = N/δ`, `s₂ = (1+s₁)/(s₁γ)`, `s₄ = 1/(s₂²N)` |
//! | continuous Hahn | Wilson1 | `{4}` | after a real translation, see below |
//! | continuous dual Hahn | Wilson2 | `{4}` | quadratic in `b₃`, see below |
//! | Meixner–Pollaczek `(λ, φ)` | Wilson1 | `{2,4}` | `a₁ = 1/λ`, `a₃ = tan φ` |
//!
//! Parameters outside the part of the family covered by the chart face are
//! rejected with [`AskeyError::OutOfDomain`].

use crate::charts::{self, BoundaryFace, ChartId, ChartPoint};
use crate::error::{AskeyError, Result};
use crate::families::FamilyInstance;
use crate::polyrec::{AffineScale, RecurrenceCoeffs};
use crate::scalar::{Complex, Real};

/// Coefficients of a derived family (see the module documentation).
pub(crate) fn derived_coeffs<T: Real>(f: &FamilyInstance<T>) -> Result<RecurrenceCoeffs<T>> {
    let one = T::one();
    let zero = T::zero();
    let n_valid = f.n_valid();
    match *f {
        FamilyInstance::Hahn { alpha, beta, n } => {
            positive("alpha", alpha)?;
            positive("beta", beta)?;
            greater_than_one("N", n)?;
            let t = vec![one / alpha, alpha / beta, zero, beta / (alpha * n)];
            face_coeffs(ChartId::Racah1, t, n_valid)
        }
        FamilyInstance::Meixner { beta, c } => {
            greater_than_one("beta", beta)?;
            open_unit("c", c)?;
            let t1 = one / (beta - one);
            let t = vec![t1, zero, zero, t1 * (one - c) / c];
            face_coeffs(ChartId::Racah1, t, n_valid)
        }
        FamilyInstance::Krawtchouk { p, n } => {
            open_unit("p", p)?;
            greater_than_one("N", n)?;
            let t2 = p / (one - p);
            let t = vec![zero, t2, zero, one / (t2 * n)];
            face_coeffs(ChartId::Racah1, t, n_valid)
        }
        FamilyInstance::Charlier { a } => {
            positive("a", a)?;
            face_coeffs(ChartId::Racah1, vec![zero, zero, zero, one / a], n_valid)
        }
        FamilyInstance::DualHahn { gamma, delta, n } => {
            positive("gamma", gamma)?;
            positive("delta", delta)?;
            greater_than_one("N", n)?;
            let s1 = n / delta;
            let s2 = (one + s1) / (s1 * gamma);
            let s = vec![s1, s2, zero, one / (s2 * s2 * n)];
            face_coeffs(ChartId::Racah2, s, n_valid)
        }
        FamilyInstance::ContinuousHahn { a, b, c, d } => continuous_hahn(a, b, c, d),
        FamilyInstance::ContinuousDualHahn { a, b, c } => continuous_dual_hahn(a, b, c),
        FamilyInstance::MeixnerPollaczek { lambda, phi } => {
            positive("lambda", lambda)?;
            let half_pi = T::pi() / T::from_f64(2.0);
            if !(phi > zero && phi < T::pi()) || phi == half_pi {
                return Err(AskeyError::OutOfDomain(
                    "Meixner–Pollaczek needs 0 < φ < π with φ ≠ π/2".into(),
                ));
            }
            if phi < half_pi {
                face_coeffs(
                    ChartId::Wilson1,
                    vec![one / lambda, zero, phi.tan(), zero],
                    None,
                )
            } else {
                // pₙ(x; λ, π−φ) = (−1)ⁿ pₙ(−x; λ, φ): Bₙ changes sign.
                let rc = face_coeffs(
                    ChartId::Wilson1,
                    vec![one / lambda, zero, (T::pi() - phi).tan(), zero],
                    None,
                )?;
                Ok(RecurrenceCoeffs::new(
                    move |n| {
                        let (bn, cn) = rc.pair(n);
                        (-bn, cn)
                    },
                    None,
                ))
            }
        }
        _ => Err(AskeyError::InvalidInput(format!(
            "{} has direct recurrence coefficients",
            f.id()
        ))),
    }
}

/// Chart coefficients at a face point, un-rescaled by the face's `(ρ, σ)`.
pub(crate) fn face_coeffs<T: Real>(
    chart: ChartId,
    coords: Vec<T>,
    n_valid: Option<usize>,
) -> Result<RecurrenceCoeffs<T>> {
    let p = ChartPoint::new(chart, coords)?;
    let face = p.zero_set();
    let rec = charts::face_restriction::<T>(chart, face)?;
    let (rho, sigma) = (rec.scale)(&p.coords);
    let scale = AffineScale::new(rho, sigma)?;
    Ok(RecurrenceCoeffs::new(
        move |n| {
            let (b, c) = charts::chart_coeffs_unchecked(chart, &p.coords, n);
            scale.invert(b, c)
        },
        n_valid,
    ))
}

/// Face used for each derived family (documentation and tests).
pub fn defining_face(id: crate::families::FamilyId) -> Option<(ChartId, BoundaryFace)> {
    use crate::families::FamilyId as F;
    let f = BoundaryFace::from_indices;
    Some(match id {
        F::Hahn => (ChartId::Racah1, f(&[3])),
        F::Meixner => (ChartId::Racah1, f(&[2, 3])),
        F::Krawtchouk => (ChartId::Racah1, f(&[1, 3])),
        F::Charlier => (ChartId::Racah1, f(&[1, 2, 3])),
        F::DualHahn => (ChartId::Racah2, f(&[3])),
        F::ContinuousHahn => (ChartId::Wilson1, f(&[4])),
        F::ContinuousDualHahn => (ChartId::Wilson2, f(&[4])),
        F::MeixnerPollaczek => (ChartId::Wilson1, f(&[2, 4])),
        _ => return None,
    })
}

fn positive<T: Real>(name: &str, v: T) -> Result<()> {
    if v > T::zero() && v.is_finite() {
        Ok(())
    } else {
        Err(AskeyError::OutOfDomain(format!(
            "{name} must be positive, got {v}"
        )))
    }
}

fn greater_than_one<T: Real>(name: &str, v: T) -> Result<()> {
    if v > T::one() && v.is_finite() {
        Ok(())
    } else {
        Err(AskeyError::OutOfDomain(format!(
            "{name} must exceed 1, got {v}"
        )))
    }
}

fn open_unit<T: Real>(name: &str, v: T) -> Result<()> {
    if v > T::zero() && v < T::one() {
        Ok(())
    } else {
        Err(AskeyError::OutOfDomain(format!(
            "{name} must lie in (0, 1), got {v}"
        )))
    }
}

fn close<T: Real>(u: Complex<T>, v: Complex<T>) -> bool {
    let scale = 1.0 + u.norm().to_f64().max(v.norm().to_f64());
    (u - v).norm().to_f64() <= 1e-12 * scale
}

/// Continuous Hahn with `c = ā`, `d = b̄`.
///
/// The Wilson1 face `{4}` realises exactly the records with
/// `Im a + Im b = 0`. A general record is reduced to that case by the
/// translation `x ↦ x + τ`, `τ = (Im a + Im b)/2`, which maps the parameters
/// to `a − iτ, b − iτ` and shifts `Bₙ` by `−τ`.
fn continuous_hahn<T: Real>(
    a: Complex<T>,
    b: Complex<T>,
    c: Complex<T>,
    d: Complex<T>,
) -> Result<RecurrenceCoeffs<T>> {
    if !(close(c, a.conj()) && close(d, b.conj())) {
        return Err(AskeyError::OutOfDomain(
            "continuous Hahn needs c = conj(a) and d = conj(b)".into(),
        ));
    }
    let two = T::from_f64(2.0);
    let tau = (a.im + b.im) / two;
    let mut h = (a.im - b.im) / two;
    let (mut ra, mut rb) = (a.re, b.re);
    if h < T::zero() {
        // The family is symmetric under (a, c) ↔ (b, d).
        std::mem::swap(&mut ra, &mut rb);
        h = -h;
    }
    positive("Re a", ra)?;
    positive("Re b", rb)?;
    if !(h > T::zero()) {
        return Err(AskeyError::OutOfDomain(
            "continuous Hahn with Im a = Im b lies outside the Wilson1 face".into(),
        ));
    }
    let a1 = T::one() / ra;
    let a2 = ra / rb;
    let a3 = rb / (two * h);
    let rc = face_coeffs(ChartId::Wilson1, vec![a1, a2, a3, T::zero()], None)?;
    Ok(RecurrenceCoeffs::new(
        move |n| {
            let (bn, cn) = rc.pair(n);
            (bn - tau, cn)
        },
        None,
    ))
}

/// Continuous dual Hahn: one conjugate pair `(a, b)` plus a real `c` on the
/// Wilson2 face `{4}`; all-real records use the closed form obtained as the
/// `d → ∞` limit of the Wilson coefficients.
fn continuous_dual_hahn<T: Real>(
    a: Complex<T>,
    b: Complex<T>,
    c: Complex<T>,
) -> Result<RecurrenceCoeffs<T>> {
    let is_real = |v: Complex<T>| v.im.to_f64().abs() <= 1e-14 * (1.0 + v.re.to_f64().abs());
    let p = [a, b, c];
    let reals: Vec<usize> = (0..3).filter(|&k| is_real(p[k])).collect();
    if reals.len() == 3 {
        let (a, b, c) = (a.re, b.re, c.re);
        return Ok(RecurrenceCoeffs::new(
            move |n| {
                let nn = T::from_usize(n);
                let one = T::one();
                let bn = (nn + a + b) * (nn + a + c) + nn * (nn + b + c - one) - a * a;
                let cn = nn * (nn - one + a + b) * (nn - one + a + c) * (nn + b + c - one);
                (bn, cn)
            },
            None,
        ));
    }
    if reals.len() != 1 {
        return Err(AskeyError::OutOfDomain(
            "continuous dual Hahn needs one conjugate pair and one real parameter".into(),
        ));
    }
    let k = reals[0];
    let pair: Vec<Complex<T>> = (0..3).filter(|&j| j != k).map(|j| p[j]).collect();
    if !close(pair[0], pair[1].conj()) {
        return Err(AskeyError::OutOfDomain(
            "the two complex continuous dual Hahn parameters must be conjugate".into(),
        ));
    }
    let (ar, ai, cr) = (pair[0].re, pair[0].im.abs(), p[k].re);
    let (b1, b2, b3) = solve_cdh_face(ar, ai, cr)?;
    face_coeffs(ChartId::Wilson2, vec![b1, b2, b3, T::zero()], None)
}

/// Invert the Wilson2 face `{4}` parameter map
///
/// ```text
/// a = (1+b₁)/(2b₁) + i(1+4b₁b₂)/(2b₁³b₂b₃),
/// c = −(2 + b₁b₃ + b₁³b₂b₃² + b₁⁴b₂b₃²)/(2b₁⁴b₂b₃²).
/// ```
///
/// `b₁` follows from `Re a`; eliminating `b₂` leaves a quadratic in `b₃`.
fn solve_cdh_face<T: Real>(ar: T, ai: T, c: T) -> Result<(T, T, T)> {
    let one = T::one();
    let two = T::from_f64(2.0);
    let four = T::from_f64(4.0);
    if !(ar > T::from_f64(0.5)) {
        return Err(AskeyError::OutOfDomain(
            "continuous dual Hahn face needs Re a > 1/2".into(),
        ));
    }
    let b1 = one / (two * ar - one);
    let b1_2 = b1 * b1;
    let b1_3 = b1_2 * b1;
    let b1_4 = b1_3 * b1;
    let k = -two * b1_4 * c - b1_3 * (one + b1);
    let q2 = k - two * b1_4 * ai;
    let q1 = -(four * b1_3 * ai - four * b1_2);
    let q0 = T::from_f64(8.0) * b1;
    let mut roots = Vec::new();
    if q2.is_zero() {
        if !q1.is_zero() {
            roots.push(-q0 / q1);
        }
    } else {
        let disc = q1 * q1 - four * q2 * q0;
        if disc >= T::zero() {
            let sq = disc.sqrt();
            let q = if q1 >= T::zero() {
                -(q1 + sq) / two
            } else {
                -(q1 - sq) / two
            };
            if !q.is_zero() {
                roots.push(q / q2);
                roots.push(q0 / q);
            }
        }
    }
    for b3 in roots {
        if !(b3 > T::zero() && b3.is_finite()) {
            continue;
        }
        let b2 = one / (two * b1_3 * ai * b3 - four * b1);
        if !(b2 > T::zero() && b2.is_finite()) {
            continue;
        }
        let im = (one + four * b1 * b2) / (two * b1_3 * b2 * b3);
        let cc = -(two + b1 * b3 + b1_3 * b2 * b3 * b3 + b1_4 * b2 * b3 * b3)
            / (two * b1_4 * b2 * b3 * b3);
        let ok = |u: T, v: T| (u - v).abs().to_f64() <= 1e-8 * (1.0 + v.abs().to_f64());
        if ok(im, ai) && ok(cc, c) {
            return Ok((b1, b2, b3));
        }
    }
    Err(AskeyError::OutOfDomain(
        "continuous dual Hahn parameters are not covered by the Wilson2 face".into(),
    ))
}
