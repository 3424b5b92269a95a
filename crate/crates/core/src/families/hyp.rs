//! Terminating hypergeometric sums and the explicit monic polynomials of the
//! Askey scheme.
//!
//! These evaluators are independent of the recurrence machinery and serve as
//! the oracle route: a recurrence built from closed-form coefficients must
//! reproduce the explicit `ₚF_q` representation.
//!
//! Pochhammer symbols are computed as iterated products (never through Γ), so
//! terminating arguments such as `(−N)_k` are exact.
//!
//! For the quadratic-lattice families (Racah, dual Hahn, Wilson, continuous
//! dual Hahn) the two lattice upper parameters are combined in closed form:
//!
//! ```text
//! (−y)_k (y+γ+δ+1)_k = Π_{j<k} ( j(j+γ+δ+1) − x ),   x = y(y+γ+δ+1),
//! (a+iy)_k (a−iy)_k   = Π_{j<k} ( (a+j)² + x ),       x = y²,
//! ```
//!
//! so the polynomials are evaluated directly in `x` without choosing a branch
//! of `y`. For `x ≥ 0` this coincides with the principal-branch `y = √x`.

use crate::error::{AskeyError, Result};
use crate::families::FamilyInstance;
use crate::scalar::{Complex, Real};

/// Shape of a terminating `ₚF_q` series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HypKind {
    /// `₁F₁`.
    F11,
    /// `₂F₀`.
    F20,
    /// `₂F₁`.
    F21,
    /// `₃F₂`.
    F32,
    /// `₄F₃`.
    F43,
}

impl HypKind {
    /// `(p, q)` = number of upper and lower parameters.
    pub fn arity(self) -> (usize, usize) {
        match self {
            HypKind::F11 => (1, 1),
            HypKind::F20 => (2, 0),
            HypKind::F21 => (2, 1),
            HypKind::F32 => (3, 2),
            HypKind::F43 => (4, 3),
        }
    }
}

/// `(a)_k = a(a+1)…(a+k−1)`.
pub fn pochhammer<T: Real>(a: T, k: usize) -> T {
    let mut r = T::one();
    for j in 0..k {
        r *= a + T::from_usize(j);
    }
    r
}

/// Complex Pochhammer symbol.
pub fn pochhammer_c<T: Real>(a: Complex<T>, k: usize) -> Complex<T> {
    let mut r = Complex::from_real(T::one());
    for j in 0..k {
        r = r * (a + T::from_usize(j));
    }
    r
}

/// `Σ_{k=0}^{n} Π(upper)_k / Π(lower)_k · z^k / k!` accumulated term by term.
///
/// The first upper parameter is expected to be `−n`, which makes the series
/// terminate; the sum is truncated at `k = n` in any case.
///
/// # Errors
///
/// * [`AskeyError::InvalidInput`] if the parameter counts do not match `kind`.
/// * [`AskeyError::PoleInLowerParameter`] if a lower Pochhammer symbol
///   vanishes while the numerator has not yet terminated.
pub fn hyp_terminating<T: Real>(
    kind: HypKind,
    upper: &[Complex<T>],
    lower: &[Complex<T>],
    z: Complex<T>,
    n: usize,
) -> Result<Complex<T>> {
    let (p, q) = kind.arity();
    if upper.len() != p || lower.len() != q {
        return Err(AskeyError::InvalidInput(format!(
            "{kind:?} needs {p} upper and {q} lower parameters, got {} and {}",
            upper.len(),
            lower.len()
        )));
    }
    let mut sum = Complex::from_real(T::one());
    let mut term = Complex::from_real(T::one());
    for k in 0..n {
        let kk = T::from_usize(k);
        let mut num = z;
        for &a in upper {
            num = num * (a + kk);
        }
        if num.re.is_zero() && num.im.is_zero() {
            break;
        }
        let mut den = Complex::from_real(T::from_usize(k + 1));
        for (index, &b) in lower.iter().enumerate() {
            let f = b + kk;
            if f.re.is_zero() && f.im.is_zero() {
                return Err(AskeyError::PoleInLowerParameter { index, k: k + 1 });
            }
            den = den * f;
        }
        term = term * num / den;
        sum = sum + term;
    }
    Ok(sum)
}

/// Real-parameter convenience wrapper around [`hyp_terminating`].
pub fn hyp_terminating_real<T: Real>(
    kind: HypKind,
    upper: &[T],
    lower: &[T],
    z: T,
    n: usize,
) -> Result<T> {
    let up: Vec<Complex<T>> = upper.iter().map(|&v| Complex::from_real(v)).collect();
    let lo: Vec<Complex<T>> = lower.iter().map(|&v| Complex::from_real(v)).collect();
    Ok(hyp_terminating(kind, &up, &lo, Complex::from_real(z), n)?.re)
}

/// Sum `Σ_{k≤n} Π_j upper_j(k) / (Π lower_k · k!)` where the numerator
/// factors for step `k → k+1` are supplied by `step(k)`.
fn lattice_sum<T: Real>(
    n: usize,
    mut step: impl FnMut(usize) -> (Complex<T>, Complex<T>),
) -> Result<Complex<T>> {
    let mut sum = Complex::from_real(T::one());
    let mut term = Complex::from_real(T::one());
    for k in 0..n {
        let (num, den) = step(k);
        if den.re.is_zero() && den.im.is_zero() {
            return Err(AskeyError::PoleInLowerParameter { index: 0, k: k + 1 });
        }
        term = term * num / den;
        sum = sum + term;
    }
    Ok(sum)
}

fn nonzero<T: Real>(v: Complex<T>, what: &str) -> Result<Complex<T>> {
    if (v.re.is_zero() && v.im.is_zero()) || !v.is_finite() {
        Err(AskeyError::NormalizationPole(what.to_string()))
    } else {
        Ok(v)
    }
}

fn c<T: Real>(v: T) -> Complex<T> {
    Complex::from_real(v)
}

/// Monic Racah or Wilson polynomial at `x` from the `₄F₃` representation.
///
/// * Racah: `rₙ(x) = (α+1)ₙ(β+δ+1)ₙ(−N)ₙ/(n+α+β+1)ₙ · Rₙ(x)` with `γ = −N−1`
///   and `x = y(y+γ+δ+1)`.
/// * Wilson: `wₙ(x) = (−1)ⁿ/(n+a+b+c+d−1)ₙ · Wₙ(x)` with `x = y²`.
///
/// # Errors
///
/// [`AskeyError::InvalidInput`] for other families;
/// [`AskeyError::NormalizationPole`] if the normalising Pochhammer vanishes.
pub fn monic_via_hyp<T: Real>(f: &FamilyInstance<T>, x: T, n: usize) -> Result<T> {
    match f {
        FamilyInstance::Racah { .. } | FamilyInstance::Wilson { .. } => {
            Ok(monic_hyp_complex(f, c(x), n)?.re)
        }
        other => Err(AskeyError::InvalidInput(format!(
            "monic_via_hyp is defined for Racah and Wilson only, got {}",
            other.id().name()
        ))),
    }
}

/// Monic polynomial of any of the thirteen families at real `x`, from its
/// explicit hypergeometric (or, for Hermite, explicit finite-sum)
/// representation. The result is real for admissible parameters; the real
/// part is returned.
pub fn monic_hyp_eval<T: Real>(f: &FamilyInstance<T>, x: T, n: usize) -> Result<T> {
    Ok(monic_hyp_complex(f, c(x), n)?.re)
}

/// Complex-valued version of [`monic_hyp_eval`] (the imaginary part
/// measures how far the parameter record is from reality conditions).
pub fn monic_hyp_complex<T: Real>(
    f: &FamilyInstance<T>,
    x: Complex<T>,
    n: usize,
) -> Result<Complex<T>> {
    let one = T::one();
    let nn = T::from_usize(n);
    let minus_n = -nn;
    match *f {
        FamilyInstance::Racah {
            alpha,
            beta,
            n: big_n,
            delta,
        } => {
            let s = delta - big_n; // γ+δ+1 with γ = −N−1
            let sum = lattice_sum(n, |k| {
                let kk = T::from_usize(k);
                let num = (c(kk * (kk + s)) - x) * (minus_n + kk) * (nn + alpha + beta + one + kk);
                let den =
                    (alpha + one + kk) * (beta + delta + one + kk) * (-big_n + kk) * (kk + one);
                (num, c(den))
            })?;
            let norm_den = nonzero(c(pochhammer(nn + alpha + beta + one, n)), "(n+α+β+1)_n")?;
            let norm = c(pochhammer(alpha + one, n)
                * pochhammer(beta + delta + one, n)
                * pochhammer(-big_n, n))
                / norm_den;
            Ok(norm * sum)
        }
        FamilyInstance::Wilson { a, b, c: cc, d } => {
            let s = a + b + cc + d;
            let sum = lattice_sum(n, |k| {
                let kk = T::from_usize(k);
                let ak = a + kk;
                let num = (ak * ak + x) * (minus_n + kk) * (s - one + nn + kk);
                let den = (a + b + kk) * (a + cc + kk) * (a + d + kk) * (kk + one);
                (num, den)
            })?;
            let norm_den = nonzero(pochhammer_c(s + (nn - one), n), "(n+a+b+c+d−1)_n")?;
            let sign = if n.is_multiple_of(2) { one } else { -one };
            let w = pochhammer_c(a + b, n) * pochhammer_c(a + cc, n) * pochhammer_c(a + d, n);
            Ok(w * sum * sign / norm_den)
        }
        FamilyInstance::ContinuousDualHahn { a, b, c: cc } => {
            let sum = lattice_sum(n, |k| {
                let kk = T::from_usize(k);
                let ak = a + kk;
                let num = (ak * ak + x) * (minus_n + kk);
                let den = (a + b + kk) * (a + cc + kk) * (kk + one);
                (num, den)
            })?;
            let sign = if n.is_multiple_of(2) { one } else { -one };
            Ok(pochhammer_c(a + b, n) * pochhammer_c(a + cc, n) * sum * sign)
        }
        FamilyInstance::ContinuousHahn { a, b, c: cc, d } => {
            let s = a + b + cc + d;
            let up = [c(minus_n), s + (nn - one), a + Complex::i() * x];
            let lo = [a + cc, a + d];
            let f32 = hyp_terminating(HypKind::F32, &up, &lo, c(one), n)?;
            let norm_den = nonzero(pochhammer_c(s + (nn - one), n), "(n+a+b+c+d−1)_n")?;
            let i_n = Complex::i().powi(n as u32);
            Ok(i_n * pochhammer_c(a + cc, n) * pochhammer_c(a + d, n) * f32 / norm_den)
        }
        FamilyInstance::Hahn {
            alpha,
            beta,
            n: big_n,
        } => {
            let up = [c(minus_n), c(nn + alpha + beta + one), -x];
            let lo = [c(alpha + one), c(-big_n)];
            let f32 = hyp_terminating(HypKind::F32, &up, &lo, c(one), n)?;
            let norm_den = nonzero(c(pochhammer(nn + alpha + beta + one, n)), "(n+α+β+1)_n")?;
            Ok(c(pochhammer(alpha + one, n) * pochhammer(-big_n, n)) * f32 / norm_den)
        }
        FamilyInstance::DualHahn {
            gamma,
            delta,
            n: big_n,
        } => {
            let s = gamma + delta + one;
            let sum = lattice_sum(n, |k| {
                let kk = T::from_usize(k);
                let num = (c(kk * (kk + s)) - x) * (minus_n + kk);
                let den = (gamma + one + kk) * (-big_n + kk) * (kk + one);
                (num, c(den))
            })?;
            Ok(c(pochhammer(gamma + one, n) * pochhammer(-big_n, n)) * sum)
        }
        FamilyInstance::MeixnerPollaczek { lambda, phi } => {
            let two = T::from_f64(2.0);
            let up = [c(minus_n), c(lambda) + Complex::i() * x];
            let lo = [c(two * lambda)];
            let z = c(one) - Complex::cis(-two * phi);
            let f21 = hyp_terminating(HypKind::F21, &up, &lo, z, n)?;
            let den = (two * phi.sin()).powi(n as u32);
            let ph = Complex::cis(nn * phi);
            Ok(ph * f21 * pochhammer(two * lambda, n) / den)
        }
        FamilyInstance::Jacobi { alpha, beta } => {
            let two = T::from_f64(2.0);
            let up = [c(minus_n), c(nn + alpha + beta + one)];
            let lo = [c(alpha + one)];
            let z = (c(one) - x) / two;
            let f21 = hyp_terminating(HypKind::F21, &up, &lo, z, n)?;
            let norm_den = nonzero(c(pochhammer(nn + alpha + beta + one, n)), "(n+α+β+1)_n")?;
            Ok(c(two.powi(n as u32) * pochhammer(alpha + one, n)) * f21 / norm_den)
        }
        FamilyInstance::Meixner { beta, c: cc } => {
            let up = [c(minus_n), -x];
            let lo = [c(beta)];
            let f21 = hyp_terminating(HypKind::F21, &up, &lo, c(one - one / cc), n)?;
            let r = cc / (cc - one);
            Ok(c(pochhammer(beta, n) * r.powi(n as u32)) * f21)
        }
        FamilyInstance::Krawtchouk { p, n: big_n } => {
            let up = [c(minus_n), -x];
            let lo = [c(-big_n)];
            let f21 = hyp_terminating(HypKind::F21, &up, &lo, c(one / p), n)?;
            Ok(c(pochhammer(-big_n, n) * p.powi(n as u32)) * f21)
        }
        FamilyInstance::Laguerre { alpha } => {
            let up = [c(minus_n)];
            let lo = [c(alpha + one)];
            let f11 = hyp_terminating(HypKind::F11, &up, &lo, x, n)?;
            let sign = if n.is_multiple_of(2) { one } else { -one };
            Ok(c(sign * pochhammer(alpha + one, n)) * f11)
        }
        FamilyInstance::Charlier { a } => {
            let up = [c(minus_n), -x];
            let f20 = hyp_terminating(HypKind::F20, &up, &[], c(-one / a), n)?;
            Ok(c((-a).powi(n as u32)) * f20)
        }
        FamilyInstance::Hermite => {
            // hₙ(x) = Σ_m n!/(m!(n−2m)!) (−1/4)^m x^{n−2m}
            let mut sum = c(T::zero());
            let mut coef = one; // n!/(m!(n−2m)!) (−1/4)^m, updated in m
            for m in 0..=n / 2 {
                if m > 0 {
                    let k = n - 2 * m;
                    coef = coef * T::from_usize((k + 1) * (k + 2))
                        / (T::from_usize(m) * T::from_f64(-4.0));
                }
                sum = sum + x.powi((n - 2 * m) as u32) * coef;
            }
            Ok(sum)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_and_one_term_sums() {
        let v = hyp_terminating_real(HypKind::F21, &[0.0, 3.0], &[2.0], 0.7, 0).unwrap();
        assert_eq!(v, 1.0);
        let (b, cc, z) = (2.5, 1.5, 0.3);
        let v = hyp_terminating_real(HypKind::F21, &[-1.0, b], &[cc], z, 1).unwrap();
        assert!((v - (1.0 - b * z / cc)).abs() < 1e-15);
    }

    #[test]
    fn arity_is_checked() {
        assert!(hyp_terminating_real(HypKind::F43, &[-1.0], &[1.0], 1.0, 1).is_err());
    }

    #[test]
    fn lower_pole_is_reported() {
        // (−2)_k in the denominator vanishes at k = 3 while (−4)_k does not.
        let e = hyp_terminating_real(HypKind::F21, &[-4.0, 1.0], &[-2.0], 1.0, 4).unwrap_err();
        assert_eq!(e, AskeyError::PoleInLowerParameter { index: 0, k: 3 });
    }

    #[test]
    fn hermite_explicit_sum() {
        let h = FamilyInstance::<f64>::Hermite;
        assert!((monic_hyp_eval(&h, 2.0, 3).unwrap() - 5.0).abs() < 1e-14);
        assert!((monic_hyp_eval(&h, 1.0, 2).unwrap() - 0.5).abs() < 1e-14);
        assert_eq!(monic_hyp_eval(&h, 7.0, 0).unwrap(), 1.0);
    }

    #[test]
    fn racah_degree_one() {
        // r₁(x) = x − B₀ with B₀ = a₀ = 6 for α=β=1, N=2, δ=4.
        let r = FamilyInstance::Racah {
            alpha: 1.0,
            beta: 1.0,
            n: 2.0,
            delta: 4.0,
        };
        for x in [0.0, 1.5, -2.0] {
            assert!((monic_via_hyp(&r, x, 1).unwrap() - (x - 6.0)).abs() < 1e-13);
        }
        assert_eq!(monic_via_hyp(&r, 3.0, 0).unwrap(), 1.0);
        assert!(monic_via_hyp(&FamilyInstance::<f64>::Hermite, 1.0, 1).is_err());
    }
}
