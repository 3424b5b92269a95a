//! Closed-form chart data: coordinate → parameter maps, the affine scales
//! `(ρ, σ)`, and the chart recurrence coefficients.
//!
//! Every chart pair `(Bₙ, Cₙ)` equals the top family's pair (Racah, Wilson or
//! Jacobi) at the mapped parameters, rescaled by `(ρ, σ)`, and extends
//! continuously to the closed coordinate orthant. The formulas are written
//! so that they can be evaluated on every boundary face:
//!
//! * Racah1 contains ratios of the form `t₁/√(t₁+t₄+t₂t₄)` and
//!   `t₁t₂t₄/(t₁+t₄+t₂t₄)`, which are set to 0 where numerator and
//!   denominator vanish together (their bounding rewrites show the limit is 0).
//! * Jacobi2D uses `1/(α+β) = p₁p₂/(p₁+p₂)` and `(p₂−p₁)/√(p₁+p₂)`, both 0 at
//!   the corner.
//! * The other charts are polynomials over denominators that do not vanish on
//!   the closed domain.
//!
//! Two terms of the printed coefficient blocks are corrected (Racah2:
//! `2s₁s₂³s₃s₄²` in the `n`-linear bracket; Racah3: `6u₁²u₂u₃²u₄` in the
//! `n²` bracket); with these the identity with the composed route holds to
//! the working precision of the high-precision backend.

use crate::families::FamilyInstance;
use crate::scalar::{Complex, Real};

#[inline]
fn c<T: Real>(v: f64) -> T {
    T::from_f64(v)
}

/// Ratio `num/den` that evaluates to 0 where `den = 0` (the numerator then
/// vanishes as well on the closed domain).
#[inline]
fn guarded<T: Real>(num: T, den: T) -> T {
    if den.is_zero() {
        T::zero()
    } else {
        num / den
    }
}

/// `2^{3/2}`.
#[inline]
pub(crate) fn two_three_halves<T: Real>() -> T {
    c::<T>(2.0) * c::<T>(2.0).sqrt()
}

// ---------------------------------------------------------------------------
// Racah chart 1, coordinates (t₁, t₂, t₃, t₄)
// ---------------------------------------------------------------------------

/// `α = 1/t₁`, `β = 1/(t₁t₂)`, `N = 1/(t₂t₄)`, `δ = (1+t₂t₃t₄)/(t₁t₂t₃t₄)`.
pub(crate) fn racah1_family<T: Real>(x: &[T]) -> FamilyInstance<T> {
    let (t1, t2, t3, t4) = (x[0], x[1], x[2], x[3]);
    let one = T::one();
    FamilyInstance::Racah {
        alpha: one / t1,
        beta: one / (t1 * t2),
        n: one / (t2 * t4),
        delta: (one + t2 * t3 * t4) / (t1 * t2 * t3 * t4),
    }
}

pub(crate) fn racah1_scale<T: Real>(x: &[T]) -> (T, T) {
    let (t1, t2, t3, t4) = (x[0], x[1], x[2], x[3]);
    let one = T::one();
    let rho = t1 * t2 * (one + t2).pow_half(3) * t3 * t4 * t4
        / ((t1 + t4 + t2 * t4).sqrt() * (one + (one + t2) * t3 * t4).sqrt());
    let sigma = -(one + t1) * (one + (one + t2 + t1 * t2) * t3 * t4)
        / (t1 * t2 * (one + t2 + c::<T>(2.0) * t1 * t2) * t3 * t4 * t4);
    (rho, sigma)
}

pub(crate) fn racah1_coeffs<T: Real>(x: &[T], n: usize) -> (T, T) {
    let (t1, t2, t3, t4) = (x[0], x[1], x[2], x[3]);
    let one = T::one();
    let two = c::<T>(2.0);
    let n = T::from_usize(n);
    let s = t1 + t4 + t2 * t4;
    let root = s.sqrt();
    let q1 = guarded(t1, root);
    let q4 = guarded(t4, root);
    let g = guarded(t1 * t2 * t4, s);
    let e = one + t2 + (n + one) * t1 * t2;
    let f0 = one + t2 + two * t1 * t2;
    let w = one + t3 * t4 + t2 * t3 * t4;
    let bracket = two * n * t1 * t2 * t3 * t4 * q4 * e * f0
        + t2 * t3 * t4 * q4 * (one + t1) * (one + t2) * f0
        - q4 * (one - t2 * t2) * (one + t1 * t3)
        - two * q1 * (one - t2) * (one + t2 * t4);
    let b = -(n * (one + t2).pow_half(3) * e)
        / (f0 * (one + t2 + two * n * t1 * t2) * (one + t2 + two * (n + one) * t1 * t2) * w.sqrt())
        * bracket;
    let m = one + t2 + two * n * t1 * t2;
    let cn = (one + t2 + n * t1 * t2)
        * (one + (one - n) * t2 * t4)
        * (one - n * t1 * t2 * t3 * t4)
        * (w + n * t1 * t2 * t3 * t4)
        / ((one + t2 + (two * n - one) * t1 * t2) * m * m * (one + t2 + (two * n + one) * t1 * t2))
        * n
        * (one + n * t1)
        * (one + n * t1 * t2)
        * (one + t2).powi(3)
        / w
        * (one + (n + one) * g);
    (b, cn)
}

// ---------------------------------------------------------------------------
// Racah chart 2, coordinates (s₁, s₂, s₃, s₄)
// ---------------------------------------------------------------------------

/// `α = (1+s₁)/(s₁s₂)`, `β = (1+s₁)/(s₁s₂²s₃s₄)`, `N = 1/(s₂²s₄)`,
/// `δ = (1+s₁+s₂s₄(1+s₁+s₁s₂))/(s₁s₂²s₄)`.
pub(crate) fn racah2_family<T: Real>(x: &[T]) -> FamilyInstance<T> {
    let (s1, s2, s3, s4) = (x[0], x[1], x[2], x[3]);
    let one = T::one();
    FamilyInstance::Racah {
        alpha: (one + s1) / (s1 * s2),
        beta: (one + s1) / (s1 * s2 * s2 * s3 * s4),
        n: one / (s2 * s2 * s4),
        delta: (one + s1 + s2 * s4 * (one + s1 + s1 * s2)) / (s1 * s2 * s2 * s4),
    }
}

pub(crate) fn racah2_scale<T: Real>(x: &[T]) -> (T, T) {
    let (s1, s2, s3, s4) = (x[0], x[1], x[2], x[3]);
    let one = T::one();
    let rho = s1 * s2.pow_half(5) * s4 / (c::<T>(2.0).sqrt() * (one + s1));
    let sigma = -((one + s1) * (one + s3 - s2 * s2 * s4) + s1 * s2) / (s1 * s2.powi(3) * s4);
    (rho, sigma)
}

pub(crate) fn racah2_coeffs<T: Real>(x: &[T], n: usize) -> (T, T) {
    let (s1, s2, s3, s4) = (x[0], x[1], x[2], x[3]);
    let n = T::from_usize(n);
    let c = c::<T>;
    let num = ((((((((((c(2.0) * n.powi(2)) * (n + c(1.0)).powi(2)) * s1.powi(3))
        * s2.powi(6))
        * s3.powi(2))
        * s4.powi(3))
        / (c(1.0) + s1))
        + (((((((c(4.0) * n.powi(2)) * (n + c(1.0))) * s1.powi(2)) * s2.powi(4)) * s3)
            * s4.powi(2))
            * (c(1.0) + ((s2 * s3) * s4))))
        + ((((n.powi(2) * s1) * s2.powi(2)) * s4)
            * ((((((((((((c(2.0) + (c(2.0) * s1)) - s3) - ((c(2.0) * s1) * s3))
                - ((c(2.0) * s1) * s3.powi(2)))
                + (((c(5.0) * s2) * s3) * s4))
                + ((((c(5.0) * s1) * s2) * s3) * s4))
                + ((s2 * s3.powi(2)) * s4))
                + ((((c(2.0) * s1) * s2) * s3.powi(2)) * s4))
                + ((((c(4.0) * s1) * s2) * s3.powi(3)) * s4))
                + (((c(3.0) * s2.powi(2)) * s3.powi(2)) * s4.powi(2)))
                + ((((c(3.0) * s1) * s2.powi(2)) * s3.powi(2)) * s4.powi(2)))
                - ((((c(2.0) * s1) * s2.powi(3)) * s3.powi(2)) * s4.powi(2)))))
        - ((n
            * ((((c(1.0) + s1) + ((s2 * s3) * s4)) + (((s1 * s2) * s3) * s4))
                + (((s1 * s2.powi(2)) * s3) * s4)))
            * ((((((((((c(1.0) + (c(2.0) * s1)) + ((c(2.0) * s1) * s3)) - (s2 * s4))
                - ((s1 * s2) * s4))
                - ((s2 * s3) * s4))
                - ((((c(2.0) * s1) * s2) * s3) * s4))
                - ((((c(4.0) * s1) * s2) * s3.powi(2)) * s4))
                - ((s2.powi(2) * s3) * s4.powi(2)))
                - (((s1 * s2.powi(2)) * s3) * s4.powi(2)))
                + ((((c(2.0) * s1) * s2.powi(3)) * s3) * s4.powi(2)))))
        + (((c(1.0) + s1) * (c(1.0) + ((s2 * s3) * s4)))
            * ((((((((((-s1) * s3) - (s2 * s4)) - ((s1 * s2) * s4)) + (s3.powi(2) * s4))
                + ((s1 * s3.powi(2)) * s4))
                + ((((c(2.0) * s1) * s2) * s3.powi(2)) * s4))
                - ((s2.powi(2) * s3) * s4.powi(2)))
                - (((s1 * s2.powi(2)) * s3) * s4.powi(2)))
                - ((((c(2.0) * s1) * s2.powi(3)) * s3) * s4.powi(2))));
    let dd = (c(1.0) + s1) * (c(1.0) + ((s2 * s3) * s4));
    let bn = (((-s2.sqrt()) / c(2.0).sqrt()) * num)
        / ((dd + (((((c(2.0) * n) * s1) * s2.powi(2)) * s3) * s4))
            * (dd + (((((c(2.0) * (n + c(1.0))) * s1) * s2.powi(2)) * s3) * s4)));
    let ee = ((s1 * s2.powi(2)) * s3) * s4;
    let cn = ((((((((n * ((c(1.0) + s1) + ((n * s1) * s2)))
        * (c(1.0) + (((c(1.0) - n) * s2.powi(2)) * s4)))
        * ((c(1.0) + s1) + ((((c(1.0) - n) * s1) * s2.powi(2)) * s4)))
        * ((c(1.0) + s1) + (n * ee)))
        * ((dd + (s1 * s3)) + ((n + c(1.0)) * ee)))
        / ((c(2.0) * (c(1.0) + s1).powi(2)) * (dd + (((c(2.0) * n) - c(1.0)) * ee))))
        * (dd + (n * ee)))
        * (((c(1.0) + s1) * ((c(1.0) + s3) + ((s2 * s3) * s4))) + ((n + c(1.0)) * ee)))
        / ((dd + ((c(2.0) * n) * ee)).powi(2) * (dd + (((c(2.0) * n) + c(1.0)) * ee)));
    (bn, cn)
}

// ---------------------------------------------------------------------------
// Racah chart 3, coordinates (u₁, u₂, u₃, u₄)
// ---------------------------------------------------------------------------

/// `α = (1+u₁)/u₂`, `β = 1/(u₁u₂²u₃²u₄)`, `N = 1/(u₂²u₃u₄)`,
/// `δ = (1+u₄+u₂u₃u₄+u₂²u₃u₄)/(u₂²u₃u₄)`.
pub(crate) fn racah3_family<T: Real>(x: &[T]) -> FamilyInstance<T> {
    let (u1, u2, u3, u4) = (x[0], x[1], x[2], x[3]);
    let one = T::one();
    let w = u2 * u2 * u3 * u4;
    FamilyInstance::Racah {
        alpha: (one + u1) / u2,
        beta: one / (u1 * u2 * u2 * u3 * u3 * u4),
        n: one / w,
        delta: (one + u4 + u2 * u3 * u4 + w) / w,
    }
}

pub(crate) fn racah3_scale<T: Real>(x: &[T]) -> (T, T) {
    let (u1, u2, u3, u4) = (x[0], x[1], x[2], x[3]);
    let one = T::one();
    let rho = u2.pow_half(5) * u3 * u4 / c::<T>(2.0).sqrt();
    let sigma = -(one + u1) * (one + u1 * u3 + u1 * u3 * u4) / (u2.powi(3) * u3 * u4);
    (rho, sigma)
}

pub(crate) fn racah3_coeffs<T: Real>(x: &[T], n: usize) -> (T, T) {
    let (u1, u2, u3, u4) = (x[0], x[1], x[2], x[3]);
    let n = T::from_usize(n);
    let c = c::<T>;
    let p3 = (((((((((((((((((((c(2.0) - ((c(2.0) * u1) * u3))
        - ((c(2.0) * u1.powi(2)) * u3.powi(2)))
        - ((u1 * u3) * u4))
        - (((c(2.0) * u1.powi(2)) * u3.powi(2)) * u4))
        + ((((c(5.0) * u1) * u2) * u3.powi(2)) * u4))
        + ((((c(6.0) * u1.powi(2)) * u2) * u3.powi(2)) * u4))
        + ((((c(2.0) * u1.powi(2)) * u2) * u3.powi(3)) * u4))
        + ((((c(4.0) * u1.powi(3)) * u2) * u3.powi(3)) * u4))
        - ((((c(4.0) * u1.powi(2)) * u2.powi(2)) * u3.powi(3)) * u4))
        + ((((c(4.0) * u1.powi(3)) * u2) * u3.powi(4)) * u4))
        + ((((c(4.0) * u1.powi(4)) * u2) * u3.powi(4)) * u4))
        + (((u1.powi(2) * u2) * u3.powi(3)) * u4.powi(2)))
        + (((u1.powi(3) * u2) * u3.powi(3)) * u4.powi(2)))
        + ((((c(4.0) * u1.powi(3)) * u2) * u3.powi(4)) * u4.powi(2)))
        + ((((c(4.0) * u1.powi(4)) * u2) * u3.powi(4)) * u4.powi(2)))
        + ((((c(3.0) * u1.powi(2)) * u2.powi(2)) * u3.powi(4)) * u4.powi(2)))
        + ((((c(5.0) * u1.powi(3)) * u2.powi(2)) * u3.powi(4)) * u4.powi(2)))
        + ((((c(2.0) * u1.powi(4)) * u2.powi(2)) * u3.powi(4)) * u4.powi(2)))
        + ((((c(2.0) * u1.powi(2)) * u2.powi(3)) * u3.powi(4)) * u4.powi(2)))
        + ((((c(2.0) * u1.powi(3)) * u2.powi(3)) * u3.powi(4)) * u4.powi(2));
    let p2 = ((((((((((((((((((-c(2.0)) - ((c(2.0) * u1) * u3)) - u4)
        - (((c(2.0) * u1) * u3) * u4))
        + ((u2 * u3) * u4))
        + ((((c(2.0) * u1) * u2) * u3) * u4))
        + ((((c(2.0) * u1) * u2) * u3.powi(2)) * u4))
        + ((((c(4.0) * u1.powi(2)) * u2) * u3.powi(2)) * u4))
        - ((((c(4.0) * u1) * u2.powi(2)) * u3.powi(2)) * u4))
        + ((((c(4.0) * u1.powi(2)) * u2) * u3.powi(3)) * u4))
        + ((((c(4.0) * u1.powi(3)) * u2) * u3.powi(3)) * u4))
        + (((u1 * u2) * u3.powi(2)) * u4.powi(2)))
        + (((u1.powi(2) * u2) * u3.powi(2)) * u4.powi(2)))
        + ((((c(4.0) * u1.powi(2)) * u2) * u3.powi(3)) * u4.powi(2)))
        + ((((c(4.0) * u1.powi(3)) * u2) * u3.powi(3)) * u4.powi(2)))
        + (((u1 * u2.powi(2)) * u3.powi(3)) * u4.powi(2)))
        + (((u1.powi(2) * u2.powi(2)) * u3.powi(3)) * u4.powi(2)))
        + ((((c(2.0) * u1) * u2.powi(3)) * u3.powi(3)) * u4.powi(2)))
        + ((((c(2.0) * u1.powi(2)) * u2.powi(3)) * u3.powi(3)) * u4.powi(2));
    let p1 = ((((((((((((((((-c(1.0)) - (u1 * u3)) - ((u1 * u3) * u4))
        + ((u1.powi(2) * u3.powi(2)) * u4))
        + ((u1.powi(3) * u3.powi(2)) * u4))
        - (((u1 * u2) * u3.powi(2)) * u4))
        - ((((c(2.0) * u1) * u2.powi(2)) * u3.powi(2)) * u4))
        + ((u1.powi(2) * u3.powi(3)) * u4))
        + (((c(2.0) * u1.powi(3)) * u3.powi(3)) * u4))
        + ((u1.powi(4) * u3.powi(3)) * u4))
        + ((((c(2.0) * u1.powi(2)) * u2) * u3.powi(3)) * u4))
        + ((((c(2.0) * u1.powi(3)) * u2) * u3.powi(3)) * u4))
        + ((u1.powi(2) * u3.powi(3)) * u4.powi(2)))
        + (((c(2.0) * u1.powi(3)) * u3.powi(3)) * u4.powi(2)))
        + ((u1.powi(4) * u3.powi(3)) * u4.powi(2)))
        + ((((c(2.0) * u1.powi(2)) * u2) * u3.powi(3)) * u4.powi(2)))
        + ((((c(2.0) * u1.powi(3)) * u2) * u3.powi(3)) * u4.powi(2));
    let num = (((((((((c(2.0) * n.powi(2)) * (n + c(1.0)).powi(2)) * u1.powi(2)) * u2.powi(6))
        * u3.powi(5))
        * u4.powi(3))
        + (((((((c(4.0) * n.powi(2)) * (n + c(1.0))) * u1) * u2.powi(4)) * u3.powi(3))
            * u4.powi(2))
            * ((c(1.0) + (((u1 * u2) * u3.powi(2)) * u4))
                + (((u1.powi(2) * u2) * u3.powi(2)) * u4))))
        + ((((n.powi(2) * u2.powi(2)) * u3) * u4) * p3))
        + ((n
            * (((c(1.0) + (((u1 * u2) * u3.powi(2)) * u4))
                + (((u1.powi(2) * u2) * u3.powi(2)) * u4))
                + (((u1 * u2.powi(2)) * u3.powi(2)) * u4)))
            * p2))
        + (((c(1.0) + (((u1 * u2) * u3.powi(2)) * u4)) + (((u1.powi(2) * u2) * u3.powi(2)) * u4))
            * p1);
    let dd = c(1.0) + ((((u1 * u2) * u3.powi(2)) * u4) * (c(1.0) + u1));
    let ee = ((u1 * u2.powi(2)) * u3.powi(2)) * u4;
    let bn = (((-u2.sqrt()) / c(2.0).sqrt()) * num)
        / ((dd + ((c(2.0) * n) * ee)) * (dd + ((c(2.0) * (n + c(1.0))) * ee)));
    let cn = (((((((((n * ((c(1.0) + u1) + (n * u2)))
        * (c(1.0) + ((((c(1.0) - n) * u2.powi(2)) * u3) * u4)))
        * (((c(1.0) + u4) - (((u1 * u2) * u3) * u4))
            + ((((c(1.0) - n) * u2.powi(2)) * u3) * u4)))
        / c(2.0))
        * (dd + (n * ee)))
        * ((c(1.0) + ((u1 * u3) * ((c(1.0) + u4) + ((u2 * u3) * u4)))) + ((n + c(1.0)) * ee)))
        / ((dd + (((c(2.0) * n) - c(1.0)) * ee)) * (dd + ((c(2.0) * n) * ee)).powi(2)))
        * (c(1.0) + (n * ee)))
        * ((c(1.0) + ((u1 * u3) * ((c(1.0) + ((u2 * u3) * u4)) + (((u1 * u2) * u3) * u4))))
            + ((n + c(1.0)) * ee)))
        / (dd + (((c(2.0) * n) + c(1.0)) * ee));
    (bn, cn)
}

// ---------------------------------------------------------------------------
// Wilson chart 1, coordinates (a₁, a₂, a₃, a₄): two conjugate pairs
// ---------------------------------------------------------------------------

/// `a = 1/a₁ − iκ₋`, `b = 1/(a₁a₂) − iκ₊`, `c = ā`, `d = b̄` with
/// `κ∓ = (1 ∓ a₁^{1/2}a₂a₄)/(2a₁^{3/2}a₂²a₃a₄)`.
pub(crate) fn wilson1_family<T: Real>(x: &[T]) -> FamilyInstance<T> {
    let (a1, a2, a3, a4) = (x[0], x[1], x[2], x[3]);
    let one = T::one();
    let h = a1.sqrt();
    let den = c::<T>(2.0) * a1 * h * a2 * a2 * a3 * a4;
    let k_minus = (one - h * a2 * a4) / den;
    let k_plus = (one + h * a2 * a4) / den;
    let a = Complex::new(one / a1, -k_minus);
    let b = Complex::new(one / (a1 * a2), -k_plus);
    FamilyInstance::Wilson {
        a,
        b,
        c: a.conj(),
        d: b.conj(),
    }
}

pub(crate) fn wilson1_scale<T: Real>(x: &[T]) -> (T, T) {
    let (a1, a2, a3, a4) = (x[0], x[1], x[2], x[3]);
    let one = T::one();
    let rho = two_three_halves::<T>() * a1 * a1 * a2 * a2 * a3 * a3 * a4;
    let sigma = -one / (c::<T>(4.0) * a1.powi(3) * a2.powi(4) * a3 * a3 * a4 * a4)
        + (one - a2)
            / (c::<T>(2.0) * a1.pow_half(5) * a2.powi(3) * (one + a2 - a1 * a2) * a3 * a3 * a4);
    (rho, sigma)
}

pub(crate) fn wilson1_coeffs<T: Real>(x: &[T], n: usize) -> (T, T) {
    let (a1, a2, a3, a4) = (x[0], x[1], x[2], x[3]);
    let n = T::from_usize(n);
    let c = c::<T>;
    let h = a1.sqrt();
    let num = (((((((((c(2.0) * n.powi(4)) * a1.powi(4)) * a2.powi(4)) * a3.powi(2)) * a4)
        * ((c(1.0) + a2) - (a1 * a2)))
        + (((((((c(4.0) * n.powi(3)) * a1.powi(3)) * a2.powi(3)) * a3.powi(2)) * a4)
            * ((c(2.0) + (c(2.0) * a2)) - (a1 * a2)))
            * ((c(1.0) + a2) - (a1 * a2))))
        + (((n.powi(2) * a1.pow_half(3)) * a2)
            * (((c(2.0) - (c(2.0) * a2)) + (((h * a2) * a4) * ((c(1.0) + a2) - (a1 * a2))))
                + ((((h * a2) * a3.powi(2)) * a4)
                    * (((((((((c(10.0) + (c(34.0) * a2)) - ((c(20.0) * a1) * a2))
                        + (c(34.0) * a2.powi(2)))
                        - ((c(44.0) * a1) * a2.powi(2)))
                        + ((c(12.0) * a1.powi(2)) * a2.powi(2)))
                        + (c(10.0) * a2.powi(3)))
                        - ((c(20.0) * a1) * a2.powi(3)))
                        + ((c(12.0) * a1.powi(2)) * a2.powi(3)))
                        - ((c(2.0) * a1.powi(3)) * a2.powi(3)))))))
        + (((n * h) * ((c(2.0) + (c(2.0) * a2)) - (a1 * a2)))
            * (((c(2.0) - (c(2.0) * a2)) + (((h * a2) * a4) * ((c(1.0) + a2) - (a1 * a2))))
                + (((((c(2.0) * h) * a2) * a3.powi(2)) * a4)
                    * ((((((((c(1.0) + (c(5.0) * a2)) - ((c(2.0) * a1) * a2))
                        + (c(5.0) * a2.powi(2)))
                        - ((c(6.0) * a1) * a2.powi(2)))
                        + (a1.powi(2) * a2.powi(2)))
                        + a2.powi(3))
                        - ((c(2.0) * a1) * a2.powi(3)))
                        + (a1.powi(2) * a2.powi(3)))))))
        + (((c(1.0) + a2) - (a1 * a2))
            * ((((((((c(2.0) * h) - ((c(2.0) * h) * a2)) + a4) + ((c(2.0) * a2) * a4))
                - ((a1 * a2) * a4))
                + (a2.powi(2) * a4))
                - ((a1 * a2.powi(2)) * a4))
                + ((((c(4.0) * a2) * a3.powi(2)) * a4)
                    * ((((c(1.0) + (c(2.0) * a2)) - (a1 * a2)) + a2.powi(2))
                        - (a1 * a2.powi(2))))));
    let bn = (num / c(2.0).sqrt())
        / ((((c(1.0) + a2) - (a1 * a2)) * ((c(1.0) + a2) + (((n - c(1.0)) * a1) * a2)))
            * ((c(1.0) + a2) + ((n * a1) * a2)));
    let g = (c(1.0) + a2) + (((n - c(1.0)) * a1) * a2);
    let cn = ((((((n / c(2.0)) * (c(1.0) + (a3.powi(2) * g.powi(2))))
        * (c(1.0) + ((((a1 * a2.powi(2)) * a3.powi(2)) * a4.powi(2)) * g.powi(2))))
        * ((c(2.0) - a1) + (n * a1)))
        * ((c(2.0) + (c(2.0) * a2)) + (((n - c(2.0)) * a1) * a2)))
        * (c(2.0) + (((n - c(1.0)) * a1) * a2)))
        / ((((c(1.0) + a2) + (((n - (c(1.0) / c(2.0))) * a1) * a2)) * g.powi(2))
            * ((c(1.0) + a2) + (((n - (c(3.0) / c(2.0))) * a1) * a2)));
    (bn, cn)
}

// ---------------------------------------------------------------------------
// Wilson chart 2, coordinates (b₁, b₂, b₃, b₄): one conjugate pair
// ---------------------------------------------------------------------------

/// `a = (1+b₁)/(2b₁) + i(1+4b₁b₂)/(2b₁³b₂b₃)`, `b = ā`,
/// `c = 1/(b₁⁶b₂²b₃³b₄) + (2+b₁b₃+b₁³b₂b₃²+3b₁⁴b₂b₃²)/(2b₁⁴b₂b₃²)`,
/// `d = −(2+b₁b₃+b₁³b₂b₃²+b₁⁴b₂b₃²)/(2b₁⁴b₂b₃²)`.
pub(crate) fn wilson2_family<T: Real>(x: &[T]) -> FamilyInstance<T> {
    let (b1, b2, b3, b4) = (x[0], x[1], x[2], x[3]);
    let one = T::one();
    let two = c::<T>(2.0);
    let a = Complex::new(
        (one + b1) / (two * b1),
        (one + c::<T>(4.0) * b1 * b2) / (two * b1.powi(3) * b2 * b3),
    );
    let w = two * b1.powi(4) * b2 * b3 * b3;
    let cc = one / (b1.powi(6) * b2 * b2 * b3.powi(3) * b4)
        + (two + b1 * b3 + b1.powi(3) * b2 * b3 * b3 + c::<T>(3.0) * b1.powi(4) * b2 * b3 * b3) / w;
    let d = -(two + b1 * b3 + b1.powi(3) * b2 * b3 * b3 + b1.powi(4) * b2 * b3 * b3) / w;
    FamilyInstance::Wilson {
        a,
        b: a.conj(),
        c: Complex::from_real(cc),
        d: Complex::from_real(d),
    }
}

pub(crate) fn wilson2_scale<T: Real>(x: &[T]) -> (T, T) {
    let (b1, b2, b3, b4) = (x[0], x[1], x[2], x[3]);
    let one = T::one();
    let four = c::<T>(4.0);
    let rho = b1.pow_half(9) * b2 * b3 * b3 / c::<T>(2.0).sqrt();
    let b2sq = b2 * b2;
    let sigma = -(one
        + four * b1 * b2
        + four * b1 * b1 * b2 * b4
        + four * b1.powi(3) * b2sq * b3 * b4
        + four * b1.powi(4) * b2sq * b3 * b3 * b4
        + four * b1.powi(4) * b2sq * b3 * b4 * b4
        + four * b1.powi(5) * b2sq * b3 * b3 * b4 * b4)
        / (four * b1.powi(6) * b2sq * b3 * b3);
    (rho, sigma)
}

pub(crate) fn wilson2_coeffs<T: Real>(x: &[T], n: usize) -> (T, T) {
    let (b1, b2, b3, b4) = (x[0], x[1], x[2], x[3]);
    let n = T::from_usize(n);
    let c = c::<T>;
    let kk = ((b1.powi(5) * b2.powi(2)) * b3.powi(3)) * b4;
    let ll = ((b1.powi(6) * b2.powi(2)) * b3.powi(3)) * b4;
    let num = ((((((((c(8.0) * n.powi(4)) * b1.powi(16)) * b2.powi(5)) * b3.powi(8))
        * b4.powi(2))
        + ((((((c(16.0) * n.powi(3)) * b1.powi(10)) * b2.powi(3)) * b3.powi(5)) * b4)
            * ((c(1.0) + kk) + ll)))
        + (((((c(4.0) * n.powi(2)) * b1.powi(4)) * b2) * b3.powi(2))
            * ((((((((((((((((((((c(2.0)
                - ((((c(2.0) * b1.powi(2)) * b2) * b3) * b4))
                - (((b1.powi(3) * b2) * b3.powi(2)) * b4))
                + ((((c(5.0) * b1.powi(5)) * b2.powi(2)) * b3.powi(3)) * b4))
                + ((((c(4.0) * b1.powi(6)) * b2.powi(2)) * b3.powi(3)) * b4))
                - ((((c(2.0) * b1.powi(4)) * b2.powi(2)) * b3.powi(2))
                    * b4.powi(2)))
                - ((((c(2.0) * b1.powi(5)) * b2.powi(2)) * b3.powi(3))
                    * b4.powi(2)))
                - (((b1.powi(6) * b2.powi(2)) * b3.powi(4)) * b4.powi(2)))
                - ((((c(2.0) * b1.powi(7)) * b2.powi(3)) * b3.powi(4))
                    * b4.powi(2)))
                - ((((c(4.0) * b1.powi(8)) * b2.powi(3)) * b3.powi(4)) * b4.powi(2)))
                + ((((c(8.0) * b1.powi(8)) * b2.powi(4)) * b3.powi(4)) * b4.powi(2)))
                - (((b1.powi(8) * b2.powi(3)) * b3.powi(5)) * b4.powi(2)))
                - ((((c(2.0) * b1.powi(9)) * b2.powi(3)) * b3.powi(5)) * b4.powi(2)))
                + ((((c(2.0) * b1.powi(10)) * b2.powi(4)) * b3.powi(6)) * b4.powi(2)))
                + ((((c(4.0) * b1.powi(11)) * b2.powi(4)) * b3.powi(6)) * b4.powi(2)))
                + (((b1.powi(12) * b2.powi(4)) * b3.powi(6)) * b4.powi(2)))
                - ((((c(4.0) * b1.powi(8)) * b2.powi(3)) * b3.powi(4)) * b4.powi(3)))
                - ((((c(4.0) * b1.powi(9)) * b2.powi(4)) * b3.powi(5)) * b4.powi(3)))
                - ((((c(4.0) * b1.powi(10)) * b2.powi(4)) * b3.powi(6)) * b4.powi(3)))
                - ((((c(4.0) * b1.powi(10)) * b2.powi(4)) * b3.powi(5)) * b4.powi(4)))
                - ((((c(4.0) * b1.powi(11)) * b2.powi(4)) * b3.powi(6)) * b4.powi(4)))))
        - (((c(4.0) * n) * ((c(1.0) + kk) + ll))
            * ((((((((((((((((c(2.0) + (b1 * b3))
                - ((b1.powi(3) * b2) * b3.powi(2)))
                + ((((c(2.0) * b1.powi(2)) * b2) * b3) * b4))
                + ((((c(2.0) * b1.powi(3)) * b2) * b3.powi(2)) * b4))
                + (((b1.powi(4) * b2) * b3.powi(3)) * b4))
                + ((((c(2.0) * b1.powi(5)) * b2.powi(2)) * b3.powi(3)) * b4))
                + ((((c(4.0) * b1.powi(6)) * b2.powi(2)) * b3.powi(3)) * b4))
                - ((((c(8.0) * b1.powi(6)) * b2.powi(3)) * b3.powi(3)) * b4))
                + (((b1.powi(6) * b2.powi(2)) * b3.powi(4)) * b4))
                + ((((c(2.0) * b1.powi(7)) * b2.powi(2)) * b3.powi(4)) * b4))
                + (((b1.powi(10) * b2.powi(3)) * b3.powi(5)) * b4))
                + ((((c(4.0) * b1.powi(6)) * b2.powi(2)) * b3.powi(3)) * b4.powi(2)))
                + ((((c(4.0) * b1.powi(7)) * b2.powi(3)) * b3.powi(4)) * b4.powi(2)))
                + ((((c(4.0) * b1.powi(8)) * b2.powi(3)) * b3.powi(5)) * b4.powi(2)))
                + ((((c(4.0) * b1.powi(8)) * b2.powi(3)) * b3.powi(4)) * b4.powi(3)))
                + ((((c(4.0) * b1.powi(9)) * b2.powi(3)) * b3.powi(5)) * b4.powi(3)))))
        - ((c(1.0) + kk)
            * ((((((((((((((((((((((((((((((((((((c(4.0)
                - (c(16.0) * b2))
                + (c(2.0) * b3))
                + ((c(2.0) * b1) * b3))
                + ((b1.powi(2) * b2) * b3.powi(2)))
                + (((c(2.0) * b1.powi(3)) * b2) * b3.powi(2)))
                + ((b1.powi(4) * b2) * b3.powi(2)))
                + (c(4.0) * b4))
                + ((((c(8.0) * b1) * b2) * b3) * b4))
                + ((((c(4.0) * b1.powi(2)) * b2) * b3) * b4))
                + ((((c(8.0) * b1.powi(2)) * b2) * b3.powi(2)) * b4))
                + ((((c(4.0) * b1.powi(3)) * b2) * b3.powi(2)) * b4))
                + ((((c(2.0) * b1.powi(3)) * b2) * b3.powi(3)) * b4))
                + ((((c(2.0) * b1.powi(4)) * b2) * b3.powi(3)) * b4))
                + ((((c(8.0) * b1.powi(4)) * b2.powi(2)) * b3.powi(3))
                    * b4))
                + ((((c(12.0) * b1.powi(5)) * b2.powi(2)) * b3.powi(3))
                    * b4))
                + ((((c(8.0) * b1.powi(6)) * b2.powi(2)) * b3.powi(3)) * b4))
                - ((((c(16.0) * b1.powi(6)) * b2.powi(3)) * b3.powi(3)) * b4))
                + ((((c(2.0) * b1.powi(5)) * b2.powi(2)) * b3.powi(4)) * b4))
                + ((((c(6.0) * b1.powi(6)) * b2.powi(2)) * b3.powi(4)) * b4))
                + ((((c(4.0) * b1.powi(7)) * b2.powi(2)) * b3.powi(4)) * b4))
                + (((b1.powi(7) * b2.powi(3)) * b3.powi(5)) * b4))
                + ((((c(4.0) * b1.powi(8)) * b2.powi(3)) * b3.powi(5)) * b4))
                + ((((c(5.0) * b1.powi(9)) * b2.powi(3)) * b3.powi(5)) * b4))
                + ((((c(2.0) * b1.powi(10)) * b2.powi(3)) * b3.powi(5)) * b4))
                + ((((c(4.0) * b1.powi(2)) * b2) * b3) * b4.powi(2)))
                + ((((c(4.0) * b1.powi(3)) * b2) * b3.powi(2)) * b4.powi(2)))
                + ((((c(4.0) * b1.powi(5)) * b2.powi(2)) * b3.powi(3)) * b4.powi(2)))
                + ((((c(8.0) * b1.powi(6)) * b2.powi(2)) * b3.powi(3)) * b4.powi(2)))
                + ((((c(4.0) * b1.powi(6)) * b2.powi(3)) * b3.powi(4)) * b4.powi(2)))
                + ((((c(8.0) * b1.powi(7)) * b2.powi(3)) * b3.powi(4)) * b4.powi(2)))
                + ((((c(4.0) * b1.powi(7)) * b2.powi(3)) * b3.powi(5)) * b4.powi(2)))
                + ((((c(8.0) * b1.powi(8)) * b2.powi(3)) * b3.powi(5)) * b4.powi(2)))
                + ((((c(4.0) * b1.powi(7)) * b2.powi(3)) * b3.powi(4)) * b4.powi(3)))
                + ((((c(8.0) * b1.powi(8)) * b2.powi(3)) * b3.powi(4)) * b4.powi(3)))
                + ((((c(4.0) * b1.powi(8)) * b2.powi(3)) * b3.powi(5)) * b4.powi(3)))
                + ((((c(8.0) * b1.powi(9)) * b2.powi(3)) * b3.powi(5)) * b4.powi(3))));
    let bn = (((c(1.0) / c(2.0).pow_half(5)) * b1.sqrt()) * num)
        / (((c(1.0) + kk) + ((c(2.0) * n) * ll))
            * ((c(1.0) + kk) + ((c(2.0) * (c(1.0) + n)) * ll)));
    let cn = (((((((c(1.0) / c(8.0)) * n) * (c(1.0) + (n * b1))) * (c(1.0) + (n * ll)))
        * (c(1.0) + (kk * (c(1.0) + (n * b1)))))
        * ((((((c(2.0) + ((c(2.0) * b1) * b3)) + (b1.powi(2) * b3.powi(2)))
            + (((c(4.0) * b1.powi(3)) * b2) * b3.powi(2)))
            + (((c(8.0) * b1.powi(4)) * b2.powi(2)) * b3.powi(2)))
            + (((((c(2.0) * (c(1.0) - n)) * b1.powi(4)) * b2) * b3.powi(2))
                * (c(2.0) + (b1 * b3))))
            + ((((c(2.0) * (c(1.0) - n).powi(2)) * b1.powi(8)) * b2.powi(2)) * b3.powi(4))))
        / (((c(1.0) + (kk * (c(1.0) + (((c(2.0) * n) - c(1.0)) * b1))))
            * (c(1.0) + (kk * (c(1.0) + ((c(2.0) * n) * b1)))).powi(2))
            * (c(1.0) + (kk * (c(1.0) + (((c(2.0) * n) + c(1.0)) * b1))))))
        * ((((((((((((c(2.0) + ((((c(4.0) * b1.powi(2)) * b2) * b3) * b4))
            + ((((c(2.0) * b1.powi(3)) * b2) * b3.powi(2)) * b4))
            + ((((c(4.0) * b1.powi(5)) * b2.powi(2)) * b3.powi(3)) * b4))
            + (((((c(4.0) * (c(1.0) + n)) * b1.powi(6)) * b2.powi(2)) * b3.powi(3)) * b4))
            + ((((c(2.0) * b1.powi(4)) * b2.powi(2)) * b3.powi(2)) * b4.powi(2)))
            + ((((c(2.0) * b1.powi(5)) * b2.powi(2)) * b3.powi(3)) * b4.powi(2)))
            + (((b1.powi(6) * b2.powi(2)) * b3.powi(4)) * b4.powi(2)))
            + ((((c(8.0) * b1.powi(7)) * b2.powi(3)) * b3.powi(4)) * b4.powi(2)))
            + (((((c(4.0) * (c(1.0) + n)) * b1.powi(8)) * b2.powi(3)) * b3.powi(4))
                * b4.powi(2)))
            + ((((c(8.0) * b1.powi(8)) * b2.powi(4)) * b3.powi(4)) * b4.powi(2)))
            + (((((c(2.0) * b1.powi(8)) * b2.powi(3)) * b3.powi(5)) * b4.powi(2))
                * (c(1.0) + ((n + c(1.0)) * b1))))
            + (((((c(2.0) * b1.powi(10)) * b2.powi(4)) * b3.powi(6)) * b4.powi(2))
                * (c(1.0) + ((n + c(1.0)) * b1)).powi(2)));
    (bn, cn)
}

// ---------------------------------------------------------------------------
// Jacobi chart, coordinates (p₁, p₂) = (α⁻¹, β⁻¹)
// ---------------------------------------------------------------------------

pub(crate) fn jacobi2d_family<T: Real>(x: &[T]) -> FamilyInstance<T> {
    FamilyInstance::Jacobi {
        alpha: T::one() / x[0],
        beta: T::one() / x[1],
    }
}

/// `ρ = (α+β)^{3/2}/(αβ)^{1/2}`, `σ = (α−β)/(α+β)`.
pub(crate) fn jacobi2d_scale<T: Real>(x: &[T]) -> (T, T) {
    let alpha = T::one() / x[0];
    let beta = T::one() / x[1];
    let s = alpha + beta;
    (s.pow_half(3) / (alpha * beta).sqrt(), (alpha - beta) / s)
}

pub(crate) fn jacobi2d_coeffs<T: Real>(x: &[T], n: usize) -> (T, T) {
    let (p1, p2) = (x[0], x[1]);
    let one = T::one();
    let two = c::<T>(2.0);
    let n = T::from_usize(n);
    // 1/(α+β) and (β⁻¹−α⁻¹)/(α⁻¹+β⁻¹)^{1/2}, both 0 at the corner.
    let w = guarded(p1 * p2, p1 + p2);
    let skew = guarded(p2 - p1, (p1 + p2).sqrt());
    let m = one + two * n * w;
    let cn = c::<T>(4.0) * n * (one + n * p1) * (one + n * p2) * (one + n * w)
        / ((one + (two * n - one) * w) * m * m * (one + (two * n + one) * w));
    let b = skew * (c::<T>(4.0) * n + two + c::<T>(4.0) * n * (n + one) * w)
        / (m * (one + (two * n + two) * w));
    (b, cn)
}
