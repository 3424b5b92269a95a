//! Monic orthogonal polynomials from three-term recurrences.
//!
//! A sequence of monic polynomials is fixed by its recurrence coefficients
//! `(Bₙ, Cₙ)`:
//!
//! ```text
//! p₀ = 1,   p₁(x) = x − B₀,   p_{n+1}(x) = (x − Bₙ) pₙ(x) − Cₙ p_{n−1}(x).
//! ```
//!
//! By Favard's theorem the sequence is orthogonal for a positive measure iff
//! every `Bₙ` is real and every `Cₙ > 0`. This module provides
//!
//! * [`build_monic_sequence`] — the recurrence engine,
//! * [`rescale_coeffs`] / [`unrescale_coeffs`] — the affine change of variable
//!   `qₙ(x) = ρⁿ pₙ(ρ⁻¹x − σ)`, which acts as `B ↦ ρ(B + σ)`, `C ↦ ρ²C`,
//! * [`polys_from_moments`] / [`hankel_determinant`] — the independent
//!   moment-determinant oracle (bordered Hankel determinants).

use std::fmt;
use std::sync::Arc;

use crate::error::{AskeyError, Result};
use crate::scalar::{Backend, Real};

/// A monic polynomial stored densely in the monomial basis.
///
/// `coeffs()[k]` is the coefficient of `x^k`; the leading coefficient is
/// exactly one.
#[derive(Clone, PartialEq)]
pub struct MonicPolynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Real> MonicPolynomial<T> {
    /// The degree-0 polynomial `1`.
    pub fn one() -> Self {
        MonicPolynomial {
            coeffs: vec![T::one()],
        }
    }

    /// Build from the lower coefficients `c₀ … c_{n−1}`; the leading
    /// coefficient `1` is appended.
    pub fn from_lower(lower: Vec<T>) -> Self {
        let mut coeffs = lower;
        coeffs.push(T::one());
        MonicPolynomial { coeffs }
    }

    /// Build from a full coefficient vector whose last entry must be 1.
    pub fn from_coeffs(coeffs: Vec<T>) -> Result<Self> {
        match coeffs.last() {
            Some(&lead) if lead == T::one() => Ok(MonicPolynomial { coeffs }),
            Some(_) => Err(AskeyError::InvalidInput(
                "leading coefficient of a monic polynomial must be 1".into(),
            )),
            None => Err(AskeyError::InvalidInput("empty coefficient vector".into())),
        }
    }

    /// Degree `n`.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients in increasing degree order (`len = degree + 1`).
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Horner evaluation at `x`.
    pub fn evaluate(&self, x: T) -> T {
        evaluate(self, x)
    }
}

impl<T: Real> fmt::Debug for MonicPolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|c| format!("{}", c.to_f64()))
            .collect();
        write!(f, "MonicPolynomial[{}]", parts.join(", "))
    }
}

/// Evaluate `Σ coeffs[k]·x^k` by Horner's scheme.
pub fn evaluate<T: Real>(p: &MonicPolynomial<T>, x: T) -> T {
    p.coeffs.iter().rev().fold(T::zero(), |acc, &c| acc * x + c)
}

/// Shared coefficient closure `n ↦ (Bₙ, Cₙ)`.
pub type CoeffFn<T> = Arc<dyn Fn(usize) -> (T, T) + Send + Sync>;

/// Recurrence coefficients `n ↦ (Bₙ, Cₙ)` of a monic orthogonal system.
///
/// `C₀` is never used by the recurrence and is reported as 0.
#[derive(Clone)]
pub struct RecurrenceCoeffs<T> {
    f: CoeffFn<T>,
    n_valid: Option<usize>,
}

impl<T: Real> RecurrenceCoeffs<T> {
    /// Wrap a closure returning `(Bₙ, Cₙ)`; `n_valid = None` means the pair
    /// is defined for every `n`.
    pub fn new<F>(f: F, n_valid: Option<usize>) -> Self
    where
        F: Fn(usize) -> (T, T) + Send + Sync + 'static,
    {
        RecurrenceCoeffs {
            f: Arc::new(f),
            n_valid,
        }
    }

    /// Build from separate `B` and `C` closures.
    pub fn from_fns<FB, FC>(b: FB, c: FC, n_valid: Option<usize>) -> Self
    where
        FB: Fn(usize) -> T + Send + Sync + 'static,
        FC: Fn(usize) -> T + Send + Sync + 'static,
    {
        Self::new(move |n| (b(n), c(n)), n_valid)
    }

    /// `(Bₙ, Cₙ)` with `C₀ = 0`.
    pub fn pair(&self, n: usize) -> (T, T) {
        let (b, c) = (self.f)(n);
        if n == 0 {
            (b, T::zero())
        } else {
            (b, c)
        }
    }

    /// `Bₙ`.
    pub fn b(&self, n: usize) -> T {
        self.pair(n).0
    }

    /// `Cₙ` (`C₀ = 0`).
    pub fn c(&self, n: usize) -> T {
        self.pair(n).1
    }

    /// Maximal index for which the pair is defined (`None` = unbounded).
    pub fn n_valid(&self) -> Option<usize> {
        self.n_valid
    }

    /// Same coefficients with a different validity bound.
    pub fn with_n_valid(&self, n_valid: Option<usize>) -> Self {
        RecurrenceCoeffs {
            f: Arc::clone(&self.f),
            n_valid,
        }
    }

    /// Tabulate `(Bₙ, Cₙ)` for `n = 0..=n_max`.
    pub fn table(&self, n_max: usize) -> Vec<(T, T)> {
        (0..=n_max).map(|n| self.pair(n)).collect()
    }
}

impl<T: Real> fmt::Debug for RecurrenceCoeffs<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RecurrenceCoeffs")
            .field("n_valid", &self.n_valid)
            .field("head", &self.table(2))
            .finish()
    }
}

/// Affine change of variable `qₙ(x) = ρⁿ pₙ(ρ⁻¹x − σ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineScale<T> {
    /// Nonzero dilation ρ.
    pub rho: T,
    /// Translation σ (in the original variable).
    pub sigma: T,
}

impl<T: Real> AffineScale<T> {
    /// Construct, rejecting `ρ = 0` and non-finite entries.
    pub fn new(rho: T, sigma: T) -> Result<Self> {
        if rho.is_zero() || !rho.is_finite() || !sigma.is_finite() {
            return Err(AskeyError::OutOfDomain(format!(
                "affine scale requires finite rho != 0 and finite sigma (rho = {rho}, sigma = {sigma})"
            )));
        }
        Ok(AffineScale { rho, sigma })
    }

    /// `ρ = 1, σ = 0`.
    pub fn identity() -> Self {
        AffineScale {
            rho: T::one(),
            sigma: T::zero(),
        }
    }

    /// Apply to a single pair: `(ρ(B + σ), ρ²C)`.
    pub fn apply(&self, b: T, c: T) -> (T, T) {
        (self.rho * (b + self.sigma), self.rho * self.rho * c)
    }

    /// Inverse on a single pair: `(B/ρ − σ, C/ρ²)`.
    pub fn invert(&self, b: T, c: T) -> (T, T) {
        (b / self.rho - self.sigma, c / (self.rho * self.rho))
    }

    /// Composition: applying `self` after `inner` equals applying the result.
    ///
    /// `ρ'(ρ(B+σ)+σ') = ρρ'(B + σ + σ'/ρ)`.
    pub fn compose(&self, inner: &AffineScale<T>) -> AffineScale<T> {
        AffineScale {
            rho: inner.rho * self.rho,
            sigma: inner.sigma + self.sigma / inner.rho,
        }
    }
}

/// `B'(n) = ρ(B(n) + σ)`, `C'(n) = ρ²C(n)`.
///
/// The resulting polynomials are `qₙ(x) = ρⁿ pₙ(ρ⁻¹x − σ)`.
pub fn rescale_coeffs<T: Real>(rc: &RecurrenceCoeffs<T>, s: AffineScale<T>) -> RecurrenceCoeffs<T> {
    let inner = rc.clone();
    RecurrenceCoeffs::new(
        move |n| {
            let (b, c) = inner.pair(n);
            s.apply(b, c)
        },
        rc.n_valid(),
    )
}

/// Exact inverse of [`rescale_coeffs`]: `B(n) = B'(n)/ρ − σ`, `C(n) = C'(n)/ρ²`.
pub fn unrescale_coeffs<T: Real>(
    rc: &RecurrenceCoeffs<T>,
    s: AffineScale<T>,
) -> RecurrenceCoeffs<T> {
    let inner = rc.clone();
    RecurrenceCoeffs::new(
        move |n| {
            let (b, c) = inner.pair(n);
            s.invert(b, c)
        },
        rc.n_valid(),
    )
}

/// Run the three-term recurrence and return `p₀, …, p_{n_max}`.
///
/// # Errors
///
/// * [`AskeyError::DegreeOutOfRange`] if `n_max` exceeds `rc.n_valid()`.
/// * [`AskeyError::NonFiniteCoefficient`] if a needed `Bₙ` (`n < n_max`) or
///   `Cₙ` (`1 ≤ n < n_max`) is NaN or infinite.
pub fn build_monic_sequence<T: Real>(
    rc: &RecurrenceCoeffs<T>,
    n_max: usize,
) -> Result<Vec<MonicPolynomial<T>>> {
    if let Some(valid) = rc.n_valid() {
        if n_max > valid {
            return Err(AskeyError::DegreeOutOfRange {
                requested: n_max,
                valid,
            });
        }
    }
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(MonicPolynomial::one());
    for n in 0..n_max {
        let (b, c) = rc.pair(n);
        if !b.is_finite() {
            return Err(AskeyError::NonFiniteCoefficient { which: "B", n });
        }
        if n >= 1 && !c.is_finite() {
            return Err(AskeyError::NonFiniteCoefficient { which: "C", n });
        }
        // p_{n+1} = x·pₙ − Bₙ·pₙ − Cₙ·p_{n−1}; the leading entry stays 1.
        let pn = &out[n].coeffs;
        let mut next = vec![T::zero(); n + 2];
        for (k, &a) in pn.iter().enumerate() {
            next[k + 1] += a;
            next[k] -= b * a;
        }
        if n >= 1 {
            for (k, &a) in out[n - 1].coeffs.iter().enumerate() {
                next[k] -= c * a;
            }
        }
        next[n + 1] = T::one();
        out.push(MonicPolynomial { coeffs: next });
    }
    Ok(out)
}

/// Values `p₀(x), …, p_{n_max}(x)` computed directly by the three-term
/// recurrence, without forming coefficient vectors.
///
/// # Errors
///
/// As [`build_monic_sequence`].
pub fn evaluate_by_recurrence<T: Real>(
    rc: &RecurrenceCoeffs<T>,
    x: T,
    n_max: usize,
) -> Result<Vec<T>> {
    if let Some(valid) = rc.n_valid() {
        if n_max > valid {
            return Err(AskeyError::DegreeOutOfRange {
                requested: n_max,
                valid,
            });
        }
    }
    let mut out = Vec::with_capacity(n_max + 1);
    let mut prev = T::zero();
    let mut cur = T::one();
    out.push(cur);
    for n in 0..n_max {
        let (b, c) = rc.pair(n);
        if !b.is_finite() {
            return Err(AskeyError::NonFiniteCoefficient { which: "B", n });
        }
        if n >= 1 && !c.is_finite() {
            return Err(AskeyError::NonFiniteCoefficient { which: "C", n });
        }
        let next = if n == 0 {
            x - b
        } else {
            (x - b) * cur - c * prev
        };
        prev = cur;
        cur = next;
        out.push(cur);
    }
    Ok(out)
}

/// Moments `μ₀, μ₁, …` of an orthogonality measure.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentSequence<T> {
    mu: Vec<T>,
}

impl<T: Real> MomentSequence<T> {
    /// Wrap a moment list; `μ₀` must be positive.
    pub fn new(mu: Vec<T>) -> Result<Self> {
        match mu.first() {
            Some(&m0) if m0 > T::zero() => Ok(MomentSequence { mu }),
            Some(_) => Err(AskeyError::InvalidInput("mu_0 must be positive".into())),
            None => Err(AskeyError::InvalidInput("empty moment sequence".into())),
        }
    }

    /// The moments.
    pub fn mu(&self) -> &[T] {
        &self.mu
    }

    /// Number of stored moments.
    pub fn len(&self) -> usize {
        self.mu.len()
    }

    /// True if no moments are stored (never, after `new`).
    pub fn is_empty(&self) -> bool {
        self.mu.is_empty()
    }
}

/// `det(μ_{i+j})_{i,j=0..n−1}`; `n = 0` gives 1.
///
/// # Errors
///
/// [`AskeyError::InvalidInput`] if fewer than `2n − 1` moments are stored.
pub fn hankel_determinant<T: Real>(m: &MomentSequence<T>, n: usize) -> Result<T> {
    if n == 0 {
        return Ok(T::one());
    }
    if m.len() < 2 * n - 1 {
        return Err(AskeyError::InvalidInput(format!(
            "Hankel determinant of order {n} needs {} moments, got {}",
            2 * n - 1,
            m.len()
        )));
    }
    let a: Vec<Vec<T>> = (0..n)
        .map(|i| (0..n).map(|j| m.mu[i + j]).collect())
        .collect();
    Ok(determinant(a))
}

/// Monic orthogonal polynomials `p₀ … p_{n_max}` from moments by the bordered
/// Hankel determinant
///
/// ```text
///            | μ₀      μ₁   …  μₙ      |
///  pₙ(x) =   | …                       |  /  det(μ_{i+j})_{i,j<n}
///            | μ_{n−1} μₙ   …  μ_{2n−1} |
///            | 1       x    …  xⁿ      |
/// ```
///
/// The coefficient of `x^k` is the signed cofactor of the bottom-row entry;
/// the leading coefficient is set to exactly 1 (it is `det/det`).
///
/// # Errors
///
/// * [`AskeyError::InvalidInput`] if fewer than `2·n_max` moments are stored.
/// * [`AskeyError::SingularHankel`] if a leading Hankel determinant of order
///   `≤ n_max` vanishes (relative to Hadamard's bound).
pub fn polys_from_moments<T: Real>(
    m: &MomentSequence<T>,
    n_max: usize,
) -> Result<Vec<MonicPolynomial<T>>> {
    if m.len() < 2 * n_max {
        return Err(AskeyError::InvalidInput(format!(
            "degree {n_max} needs {} moments, got {}",
            2 * n_max,
            m.len()
        )));
    }
    let mut out = vec![MonicPolynomial::one()];
    for n in 1..=n_max {
        let h = hankel_determinant(m, n)?;
        if is_numerically_singular(m, n, h) {
            return Err(AskeyError::SingularHankel { n });
        }
        let mut lower = Vec::with_capacity(n);
        for k in 0..n {
            // Minor: rows 0..n of the bordered matrix (the moment rows),
            // columns 0..=n without column k.
            let minor: Vec<Vec<T>> = (0..n)
                .map(|i| (0..=n).filter(|&j| j != k).map(|j| m.mu[i + j]).collect())
                .collect();
            let cof = determinant(minor);
            // Bottom-row entry (n, k) has sign (−1)^{n+k}.
            let signed = if (n + k) % 2 == 0 { cof } else { -cof };
            lower.push(signed / h);
        }
        out.push(MonicPolynomial::from_lower(lower));
    }
    Ok(out)
}

fn is_numerically_singular<T: Real>(m: &MomentSequence<T>, n: usize, det: T) -> bool {
    if det.is_zero() || !det.is_finite() {
        return true;
    }
    // Hadamard bound on |det| from the row norms.
    let mut bound = T::one();
    for i in 0..n {
        let mut s = T::zero();
        for j in 0..n {
            s += m.mu[i + j] * m.mu[i + j];
        }
        bound *= s.sqrt();
    }
    let thresh = T::from_f64(64.0 * T::unit_roundoff()) * bound;
    det.abs() <= thresh
}

/// Determinant of a square matrix.
///
/// Binary64 uses partial-pivot LU; the high-precision backend uses Bareiss
/// fraction-free elimination (with a row swap when a pivot is exactly zero).
pub fn determinant<T: Real>(a: Vec<Vec<T>>) -> T {
    match T::BACKEND {
        Backend::Binary64 => det_lu(a),
        Backend::HighPrec => det_bareiss(a),
    }
}

fn det_lu<T: Real>(mut a: Vec<Vec<T>>) -> T {
    let n = a.len();
    let mut det = T::one();
    for col in 0..n {
        let mut piv = col;
        for r in col + 1..n {
            if a[r][col].abs() > a[piv][col].abs() {
                piv = r;
            }
        }
        if a[piv][col].is_zero() {
            return T::zero();
        }
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        let p = a[col][col];
        det *= p;
        for r in col + 1..n {
            let f = a[r][col] / p;
            for c in col..n {
                let v = a[col][c];
                a[r][c] -= f * v;
            }
        }
    }
    det
}

fn det_bareiss<T: Real>(mut a: Vec<Vec<T>>) -> T {
    let n = a.len();
    if n == 0 {
        return T::one();
    }
    let mut sign = T::one();
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return T::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::HighPrec;

    fn hermite() -> RecurrenceCoeffs<f64> {
        RecurrenceCoeffs::new(|n| (0.0, n as f64 / 2.0), None)
    }

    #[test]
    fn hermite_by_hand() {
        let ps = build_monic_sequence(&hermite(), 3).unwrap();
        assert_eq!(ps[0].coeffs(), &[1.0]);
        assert_eq!(ps[2].coeffs(), &[-0.5, 0.0, 1.0]);
        assert_eq!(ps[3].coeffs(), &[0.0, -1.5, 0.0, 1.0]);
        assert_eq!(evaluate(&ps[2], 1.0), 0.5);
        assert_eq!(evaluate(&ps[3], 2.0), 5.0);
    }

    #[test]
    fn degree_zero_is_one() {
        let ps = build_monic_sequence(&hermite(), 0).unwrap();
        assert_eq!(ps.len(), 1);
        assert_eq!(evaluate(&ps[0], 123.0), 1.0);
    }

    #[test]
    fn non_finite_coefficients_are_reported() {
        let rc = RecurrenceCoeffs::new(|n| (if n == 2 { f64::NAN } else { 0.0 }, 1.0), None);
        assert_eq!(
            build_monic_sequence(&rc, 4).unwrap_err(),
            AskeyError::NonFiniteCoefficient { which: "B", n: 2 }
        );
        let rc = RecurrenceCoeffs::new(|n| (0.0, if n == 1 { f64::INFINITY } else { 1.0 }), None);
        assert!(matches!(
            build_monic_sequence(&rc, 3),
            Err(AskeyError::NonFiniteCoefficient { which: "C", n: 1 })
        ));
    }

    #[test]
    fn n_valid_is_enforced() {
        let rc = hermite().with_n_valid(Some(3));
        assert!(build_monic_sequence(&rc, 3).is_ok());
        assert_eq!(
            build_monic_sequence(&rc, 4).unwrap_err(),
            AskeyError::DegreeOutOfRange {
                requested: 4,
                valid: 3
            }
        );
    }

    #[test]
    fn rescale_arithmetic() {
        let rc = RecurrenceCoeffs::new(|n| (n as f64, 1.0), None);
        let s = AffineScale::new(2.0, 3.0).unwrap();
        let q = rescale_coeffs(&rc, s);
        assert_eq!(q.pair(4), (14.0, 4.0));
        let back = unrescale_coeffs(&q, s);
        assert_eq!(back.pair(4), (4.0, 1.0));
        let id = rescale_coeffs(&rc, AffineScale::identity());
        assert_eq!(id.pair(3), rc.pair(3));
    }

    #[test]
    fn zero_rho_is_rejected() {
        assert!(AffineScale::new(0.0, 1.0).is_err());
    }

    #[test]
    fn compose_matches_sequential_application() {
        let a = AffineScale::new(1.5, -0.25).unwrap();
        let b = AffineScale::new(-0.5, 2.0).unwrap();
        let (b0, c0) = (0.7, 1.3);
        let (b1, c1) = a.apply(b0, c0);
        let (b2, c2) = b.apply(b1, c1);
        let (b3, c3) = b.compose(&a).apply(b0, c0);
        assert!((b2 - b3).abs() < 1e-14 && (c2 - c3).abs() < 1e-14);
    }

    #[test]
    fn hankel_by_hand() {
        let m = MomentSequence::new(vec![1.0, 1.0, 2.0]).unwrap();
        assert_eq!(hankel_determinant(&m, 0).unwrap(), 1.0);
        assert!((hankel_determinant(&m, 2).unwrap() - 1.0).abs() < 1e-15);
        let m = MomentSequence::new(vec![1.0, 0.0, 0.5]).unwrap();
        assert!((hankel_determinant(&m, 2).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn laguerre_moments_give_laguerre_p2() {
        let m = MomentSequence::new(vec![1.0, 1.0, 2.0, 6.0, 24.0]).unwrap();
        let ps = polys_from_moments(&m, 2).unwrap();
        let c = ps[2].coeffs();
        assert!((c[0] - 2.0).abs() < 1e-13 && (c[1] + 4.0).abs() < 1e-13);
        assert_eq!(c[2], 1.0);
        assert!((ps[1].coeffs()[0] + 1.0).abs() < 1e-15);
    }

    #[test]
    fn singular_hankel_is_detected() {
        // Point mass at 0: μ = (1, 0, 0, 0): H₂ = 0.
        let m = MomentSequence::new(vec![1.0, 0.0, 0.0, 0.0]).unwrap();
        assert_eq!(
            polys_from_moments(&m, 2).unwrap_err(),
            AskeyError::SingularHankel { n: 2 }
        );
    }

    #[test]
    fn bareiss_and_lu_agree() {
        let a = vec![
            vec![2.0, -1.0, 0.5, 3.0],
            vec![1.0, 4.0, -2.0, 0.0],
            vec![0.0, 0.0, 1.0, 2.0],
            vec![3.0, 1.0, 1.0, 1.0],
        ];
        let lu = det_lu(a.clone());
        let ah: Vec<Vec<HighPrec>> = a
            .iter()
            .map(|r| r.iter().map(|&v| HighPrec::from_f64(v)).collect())
            .collect();
        let bareiss = det_bareiss(ah).to_f64();
        assert!(
            (lu - bareiss).abs() < 1e-12 * lu.abs().max(1.0),
            "{lu} vs {bareiss}"
        );
        // Zero leading pivot forces a swap.
        let z = vec![vec![0.0, 1.0], vec![1.0, 0.0]];
        assert_eq!(det_bareiss(z.clone()), -1.0);
        assert_eq!(det_lu(z), -1.0);
    }
}
