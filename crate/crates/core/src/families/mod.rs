//! The thirteen families of the Askey scheme as monic orthogonal polynomials.
//!
//! Every family is represented by a [`FamilyInstance`] (tag plus parameter
//! record) and exposes its recurrence pair through [`recurrence_coeffs`]:
//!
//! * Racah, Wilson, Jacobi, Laguerre and Hermite have **direct** closed forms.
//! * Hahn, dual Hahn, Meixner, Krawtchouk, Charlier, continuous Hahn,
//!   continuous dual Hahn and Meixner–Pollaczek are **derived**: their
//!   coefficients are the chart coefficients on the boundary face that
//!   restricts to the family, un-rescaled by the face's `(ρ, σ)`. See
//!   [`derived`] for the parameter inversions.
//!
//! The explicit hypergeometric representations live in [`hyp`] and provide an
//! independent oracle for both routes.

pub mod derived;
pub mod hyp;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{AskeyError, Result};
use crate::polyrec::RecurrenceCoeffs;
use crate::scalar::{convert, Complex, Real};

pub use hyp::{hyp_terminating, monic_hyp_eval, monic_via_hyp, pochhammer, HypKind};

/// Number of coefficients probed by [`positivity_check`] for infinite families.
pub const N_PROBE: usize = 32;

/// Tag of one of the thirteen families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyId {
    /// Wilson `(a, b, c, d)`, continuous variable `x = y²`.
    Wilson,
    /// Racah `(α, β, N, δ)` on the quadratic lattice `x = y(y+δ−N)`.
    Racah,
    /// Continuous dual Hahn `(a, b, c)`.
    ContinuousDualHahn,
    /// Continuous Hahn `(a, b, c, d)`.
    ContinuousHahn,
    /// Hahn `(α, β, N)`.
    Hahn,
    /// Dual Hahn `(γ, δ, N)`.
    DualHahn,
    /// Meixner–Pollaczek `(λ, φ)`.
    MeixnerPollaczek,
    /// Jacobi `(α, β)` on `[−1, 1]`.
    Jacobi,
    /// Meixner `(β, c)`.
    Meixner,
    /// Krawtchouk `(p, N)`.
    Krawtchouk,
    /// Laguerre `(α)`.
    Laguerre,
    /// Charlier `(a)`.
    Charlier,
    /// Hermite (monic, weight `e^{−x²}`).
    Hermite,
}

impl FamilyId {
    /// All tags, top of the scheme first.
    pub const ALL: [FamilyId; 13] = [
        FamilyId::Wilson,
        FamilyId::Racah,
        FamilyId::ContinuousDualHahn,
        FamilyId::ContinuousHahn,
        FamilyId::Hahn,
        FamilyId::DualHahn,
        FamilyId::MeixnerPollaczek,
        FamilyId::Jacobi,
        FamilyId::Meixner,
        FamilyId::Krawtchouk,
        FamilyId::Laguerre,
        FamilyId::Charlier,
        FamilyId::Hermite,
    ];

    /// Number of (real or complex) parameters.
    pub fn arity(self) -> usize {
        self.param_names().len()
    }

    /// Parameter names in record order.
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            FamilyId::Wilson | FamilyId::ContinuousHahn => &["a", "b", "c", "d"],
            FamilyId::Racah => &["alpha", "beta", "N", "delta"],
            FamilyId::ContinuousDualHahn => &["a", "b", "c"],
            FamilyId::Hahn => &["alpha", "beta", "N"],
            FamilyId::DualHahn => &["gamma", "delta", "N"],
            FamilyId::MeixnerPollaczek => &["lambda", "phi"],
            FamilyId::Jacobi => &["alpha", "beta"],
            FamilyId::Meixner => &["beta", "c"],
            FamilyId::Krawtchouk => &["p", "N"],
            FamilyId::Laguerre => &["alpha"],
            FamilyId::Charlier => &["a"],
            FamilyId::Hermite => &[],
        }
    }

    /// Whether the parameters are complex numbers.
    pub fn has_complex_params(self) -> bool {
        matches!(
            self,
            FamilyId::Wilson | FamilyId::ContinuousHahn | FamilyId::ContinuousDualHahn
        )
    }

    /// Kebab-case tag used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            FamilyId::Wilson => "wilson",
            FamilyId::Racah => "racah",
            FamilyId::ContinuousDualHahn => "continuous-dual-hahn",
            FamilyId::ContinuousHahn => "continuous-hahn",
            FamilyId::Hahn => "hahn",
            FamilyId::DualHahn => "dual-hahn",
            FamilyId::MeixnerPollaczek => "meixner-pollaczek",
            FamilyId::Jacobi => "jacobi",
            FamilyId::Meixner => "meixner",
            FamilyId::Krawtchouk => "krawtchouk",
            FamilyId::Laguerre => "laguerre",
            FamilyId::Charlier => "charlier",
            FamilyId::Hermite => "hermite",
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = AskeyError;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .map(|c| c.to_ascii_lowercase())
            .collect();
        FamilyId::ALL
            .into_iter()
            .find(|id| id.name().replace('-', "") == key)
            .ok_or_else(|| AskeyError::InvalidInput(format!("unknown family tag {s:?}")))
    }
}

/// A family tag together with its parameter record.
///
/// Racah uses `(α, β, N, δ)` with `γ = −N − 1` implied. `N` is any real
/// number greater than one for the `N`-bearing families; integrality is not
/// required.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FamilyInstance<T> {
    /// Wilson polynomials.
    Wilson {
        /// First parameter.
        a: Complex<T>,
        /// Second parameter.
        b: Complex<T>,
        /// Third parameter.
        c: Complex<T>,
        /// Fourth parameter.
        d: Complex<T>,
    },
    /// Racah polynomials (`γ = −N−1`).
    Racah {
        /// `α`.
        alpha: T,
        /// `β`.
        beta: T,
        /// `N` (last valid index is `⌊N⌋`).
        n: T,
        /// `δ`.
        delta: T,
    },
    /// Continuous dual Hahn polynomials.
    ContinuousDualHahn {
        /// First parameter.
        a: Complex<T>,
        /// Second parameter.
        b: Complex<T>,
        /// Third parameter.
        c: Complex<T>,
    },
    /// Continuous Hahn polynomials.
    ContinuousHahn {
        /// First parameter.
        a: Complex<T>,
        /// Second parameter.
        b: Complex<T>,
        /// Third parameter.
        c: Complex<T>,
        /// Fourth parameter.
        d: Complex<T>,
    },
    /// Hahn polynomials.
    Hahn {
        /// `α`.
        alpha: T,
        /// `β`.
        beta: T,
        /// `N`.
        n: T,
    },
    /// Dual Hahn polynomials.
    DualHahn {
        /// `γ`.
        gamma: T,
        /// `δ`.
        delta: T,
        /// `N`.
        n: T,
    },
    /// Meixner–Pollaczek polynomials.
    MeixnerPollaczek {
        /// `λ > 0`.
        lambda: T,
        /// `φ ∈ (0, π)`.
        phi: T,
    },
    /// Jacobi polynomials.
    Jacobi {
        /// `α`.
        alpha: T,
        /// `β`.
        beta: T,
    },
    /// Meixner polynomials.
    Meixner {
        /// `β`.
        beta: T,
        /// `c ∈ (0, 1)`.
        c: T,
    },
    /// Krawtchouk polynomials.
    Krawtchouk {
        /// `p ∈ (0, 1)`.
        p: T,
        /// `N`.
        n: T,
    },
    /// Laguerre polynomials.
    Laguerre {
        /// `α`.
        alpha: T,
    },
    /// Charlier polynomials.
    Charlier {
        /// `a > 0`.
        a: T,
    },
    /// Hermite polynomials.
    Hermite,
}

impl<T: Real> FamilyInstance<T> {
    /// The family tag.
    pub fn id(&self) -> FamilyId {
        match self {
            FamilyInstance::Wilson { .. } => FamilyId::Wilson,
            FamilyInstance::Racah { .. } => FamilyId::Racah,
            FamilyInstance::ContinuousDualHahn { .. } => FamilyId::ContinuousDualHahn,
            FamilyInstance::ContinuousHahn { .. } => FamilyId::ContinuousHahn,
            FamilyInstance::Hahn { .. } => FamilyId::Hahn,
            FamilyInstance::DualHahn { .. } => FamilyId::DualHahn,
            FamilyInstance::MeixnerPollaczek { .. } => FamilyId::MeixnerPollaczek,
            FamilyInstance::Jacobi { .. } => FamilyId::Jacobi,
            FamilyInstance::Meixner { .. } => FamilyId::Meixner,
            FamilyInstance::Krawtchouk { .. } => FamilyId::Krawtchouk,
            FamilyInstance::Laguerre { .. } => FamilyId::Laguerre,
            FamilyInstance::Charlier { .. } => FamilyId::Charlier,
            FamilyInstance::Hermite => FamilyId::Hermite,
        }
    }

    /// Parameters in record order, as complex numbers (imaginary part zero
    /// for the real-parameter families).
    pub fn params(&self) -> Vec<Complex<T>> {
        let r = Complex::from_real;
        match *self {
            FamilyInstance::Wilson { a, b, c, d }
            | FamilyInstance::ContinuousHahn { a, b, c, d } => {
                vec![a, b, c, d]
            }
            FamilyInstance::Racah {
                alpha,
                beta,
                n,
                delta,
            } => vec![r(alpha), r(beta), r(n), r(delta)],
            FamilyInstance::ContinuousDualHahn { a, b, c } => vec![a, b, c],
            FamilyInstance::Hahn { alpha, beta, n } => vec![r(alpha), r(beta), r(n)],
            FamilyInstance::DualHahn { gamma, delta, n } => vec![r(gamma), r(delta), r(n)],
            FamilyInstance::MeixnerPollaczek { lambda, phi } => vec![r(lambda), r(phi)],
            FamilyInstance::Jacobi { alpha, beta } => vec![r(alpha), r(beta)],
            FamilyInstance::Meixner { beta, c } => vec![r(beta), r(c)],
            FamilyInstance::Krawtchouk { p, n } => vec![r(p), r(n)],
            FamilyInstance::Laguerre { alpha } => vec![r(alpha)],
            FamilyInstance::Charlier { a } => vec![r(a)],
            FamilyInstance::Hermite => vec![],
        }
    }

    /// Build an instance from a tag and parameters in record order.
    ///
    /// # Errors
    ///
    /// [`AskeyError::InvalidInput`] if the count is wrong or a real-parameter
    /// family receives a non-real value.
    pub fn from_params(id: FamilyId, p: &[Complex<T>]) -> Result<Self> {
        if p.len() != id.arity() {
            return Err(AskeyError::InvalidInput(format!(
                "{id} takes {} parameters, got {}",
                id.arity(),
                p.len()
            )));
        }
        if !id.has_complex_params() {
            if let Some(k) = p.iter().position(|v| !v.im.is_zero()) {
                return Err(AskeyError::InvalidInput(format!(
                    "parameter {} of {id} must be real",
                    id.param_names()[k]
                )));
            }
        }
        let re = |k: usize| p[k].re;
        Ok(match id {
            FamilyId::Wilson => FamilyInstance::Wilson {
                a: p[0],
                b: p[1],
                c: p[2],
                d: p[3],
            },
            FamilyId::ContinuousHahn => FamilyInstance::ContinuousHahn {
                a: p[0],
                b: p[1],
                c: p[2],
                d: p[3],
            },
            FamilyId::ContinuousDualHahn => FamilyInstance::ContinuousDualHahn {
                a: p[0],
                b: p[1],
                c: p[2],
            },
            FamilyId::Racah => FamilyInstance::Racah {
                alpha: re(0),
                beta: re(1),
                n: re(2),
                delta: re(3),
            },
            FamilyId::Hahn => FamilyInstance::Hahn {
                alpha: re(0),
                beta: re(1),
                n: re(2),
            },
            FamilyId::DualHahn => FamilyInstance::DualHahn {
                gamma: re(0),
                delta: re(1),
                n: re(2),
            },
            FamilyId::MeixnerPollaczek => FamilyInstance::MeixnerPollaczek {
                lambda: re(0),
                phi: re(1),
            },
            FamilyId::Jacobi => FamilyInstance::Jacobi {
                alpha: re(0),
                beta: re(1),
            },
            FamilyId::Meixner => FamilyInstance::Meixner {
                beta: re(0),
                c: re(1),
            },
            FamilyId::Krawtchouk => FamilyInstance::Krawtchouk { p: re(0), n: re(1) },
            FamilyId::Laguerre => FamilyInstance::Laguerre { alpha: re(0) },
            FamilyId::Charlier => FamilyInstance::Charlier { a: re(0) },
            FamilyId::Hermite => FamilyInstance::Hermite,
        })
    }

    /// Convert the parameter record to another scalar backend.
    pub fn convert<U: Real>(&self) -> FamilyInstance<U> {
        let p: Vec<Complex<U>> = self
            .params()
            .into_iter()
            .map(|v| Complex::new(convert(v.re), convert(v.im)))
            .collect();
        FamilyInstance::from_params(self.id(), &p).expect("same tag and arity")
    }

    /// `N` for the finite families, else `None`.
    pub fn n_valid(&self) -> Option<usize> {
        let big_n = match *self {
            FamilyInstance::Racah { n, .. }
            | FamilyInstance::Hahn { n, .. }
            | FamilyInstance::DualHahn { n, .. }
            | FamilyInstance::Krawtchouk { n, .. } => n,
            _ => return None,
        };
        let v = big_n.to_f64();
        if v.is_finite() && v >= 0.0 {
            Some(v.floor() as usize)
        } else {
            Some(0)
        }
    }
}

impl<T: Real> fmt::Display for FamilyInstance<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let id = self.id();
        write!(f, "{id}(")?;
        for (k, (name, v)) in id.param_names().iter().zip(self.params()).enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            if id.has_complex_params() {
                write!(f, "{name}={v}")?;
            } else {
                write!(f, "{name}={}", v.re)?;
            }
        }
        f.write_str(")")
    }
}

/// Region label attached to a [`PositivityVerdict`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PositivityCase {
    /// Wilson: the parameters split into two conjugate pairs with positive
    /// real parts (a real parameter paired with an equal one counts).
    WilsonCase1,
    /// Wilson: one conjugate pair with positive real part; the other two
    /// parameters are real with positive sum.
    WilsonCase2,
    /// Wilson: all parameters real; positivity is decided by probing `Cₙ`.
    WilsonCase3,
    /// Racah: the finite positivity region (`Cₙ > 0` for `1 ≤ n ≤ N`).
    RacahFinite,
    /// Families with an unconditional or one-sided parameter condition.
    Unconstrained,
}

/// Outcome of [`positivity_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositivityVerdict {
    /// Whether the parameters lie in a positivity region.
    pub ok: bool,
    /// Which region was tested.
    pub case_label: Option<PositivityCase>,
    /// First `n` with `Cₙ ≤ 0` (or non-finite), if one was found.
    pub failing_n: Option<usize>,
}

fn finite<T: Real>(v: T, which: &'static str, n: usize) -> Result<T> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(AskeyError::NonFiniteCoefficient { which, n })
    }
}

/// Racah `(aₙ, cₙ)`:
///
/// ```text
/// aₙ = (n+α+1)(n+α+β+1)(n+β+δ+1)(N−n) / ((2n+α+β+1)(2n+α+β+2)),
/// cₙ = n(n+α+β+N+1)(δ−α−n)(n+β)   / ((2n+α+β)(2n+α+β+1)),
/// ```
///
/// with `Bₙ = aₙ + cₙ` and `Cₙ = aₙ₋₁cₙ`. `c₀ = 0` exactly.
///
/// # Errors
///
/// [`AskeyError::NonFiniteCoefficient`] on a vanishing denominator.
pub fn racah_an_cn<T: Real>(alpha: T, beta: T, big_n: T, delta: T, n: usize) -> Result<(T, T)> {
    let one = T::one();
    let two = T::from_f64(2.0);
    let nn = T::from_usize(n);
    let ab = alpha + beta;
    let an = (nn + alpha + one) * (nn + ab + one) * (nn + beta + delta + one) * (big_n - nn)
        / ((two * nn + ab + one) * (two * nn + ab + two));
    let cn = if n == 0 {
        T::zero()
    } else {
        nn * (nn + ab + big_n + one) * (delta - alpha - nn) * (nn + beta)
            / ((two * nn + ab) * (two * nn + ab + one))
    };
    Ok((finite(an, "a", n)?, finite(cn, "c", n)?))
}

/// Wilson `(aₙ, cₙ)` with `s = a+b+c+d`:
///
/// ```text
/// aₙ = (n+s−1)(n+a+b)(n+a+c)(n+a+d) / ((2n+s−1)(2n+s)),
/// cₙ = n(n+b+c−1)(n+b+d−1)(n+c+d−1) / ((2n+s−2)(2n+s−1)),
/// ```
///
/// with `Bₙ = aₙ + cₙ − a²` and `Cₙ = aₙ₋₁cₙ`. `c₀ = 0` exactly.
///
/// # Errors
///
/// [`AskeyError::NonFiniteCoefficient`] on a vanishing denominator.
pub fn wilson_an_cn<T: Real>(
    a: Complex<T>,
    b: Complex<T>,
    c: Complex<T>,
    d: Complex<T>,
    n: usize,
) -> Result<(Complex<T>, Complex<T>)> {
    let one = T::one();
    let two = T::from_f64(2.0);
    let nn = T::from_usize(n);
    let s = a + b + c + d;
    let an = (s + (nn - one)) * (a + b + nn) * (a + c + nn) * (a + d + nn)
        / ((s + (two * nn - one)) * (s + two * nn));
    let cn = if n == 0 {
        Complex::from_real(T::zero())
    } else {
        (b + c + (nn - one)) * (b + d + (nn - one)) * (c + d + (nn - one)) * nn
            / ((s + (two * nn - two)) * (s + (two * nn - one)))
    };
    if !an.is_finite() {
        return Err(AskeyError::NonFiniteCoefficient { which: "a", n });
    }
    if !cn.is_finite() {
        return Err(AskeyError::NonFiniteCoefficient { which: "c", n });
    }
    Ok((an, cn))
}

/// Complex Wilson recurrence pair `(Bₙ, Cₙ)`; `C₀ = 0`.
pub fn wilson_bc<T: Real>(
    a: Complex<T>,
    b: Complex<T>,
    c: Complex<T>,
    d: Complex<T>,
    n: usize,
) -> Result<(Complex<T>, Complex<T>)> {
    let (an, cn) = wilson_an_cn(a, b, c, d, n)?;
    let bn = an + cn - a * a;
    let cc = if n == 0 {
        Complex::from_real(T::zero())
    } else {
        wilson_an_cn(a, b, c, d, n - 1)?.0 * cn
    };
    Ok((bn, cc))
}

/// Racah recurrence pair `(Bₙ, Cₙ)`; `C₀ = 0`.
pub fn racah_bc<T: Real>(alpha: T, beta: T, big_n: T, delta: T, n: usize) -> Result<(T, T)> {
    let (an, cn) = racah_an_cn(alpha, beta, big_n, delta, n)?;
    let cc = if n == 0 {
        T::zero()
    } else {
        racah_an_cn(alpha, beta, big_n, delta, n - 1)?.0 * cn
    };
    Ok((an + cn, cc))
}

/// Jacobi recurrence pair with the removable singularities at `n = 0, 1`
/// cancelled (so that e.g. Legendre `α = β = 0` is well defined).
pub fn jacobi_bc<T: Real>(alpha: T, beta: T, n: usize) -> (T, T) {
    let one = T::one();
    let two = T::from_f64(2.0);
    let four = T::from_f64(4.0);
    let ab = alpha + beta;
    let nn = T::from_usize(n);
    let b = if n == 0 {
        (beta - alpha) / (ab + two)
    } else {
        (beta * beta - alpha * alpha) / ((two * nn + ab) * (two * nn + ab + two))
    };
    let c = match n {
        0 => T::zero(),
        1 => {
            four * (one + alpha) * (one + beta)
                / ((ab + two) * (ab + two) * (ab + T::from_f64(3.0)))
        }
        _ => {
            let m = two * nn + ab;
            four * nn * (nn + alpha) * (nn + beta) * (nn + ab) / ((m - one) * m * m * (m + one))
        }
    };
    (b, c)
}

/// Monic recurrence coefficients of a family instance.
///
/// Direct families use their closed forms; derived families are obtained
/// from chart faces (see [`derived`]). `n_valid = ⌊N⌋` for the finite
/// families. Coefficients that evaluate to a non-finite value are reported
/// as such when the polynomials are built.
///
/// # Errors
///
/// [`AskeyError::OutOfDomain`] when a derived family's parameters cannot be
/// placed on the corresponding chart face, or a parameter is non-finite.
pub fn recurrence_coeffs<T: Real>(f: &FamilyInstance<T>) -> Result<RecurrenceCoeffs<T>> {
    for (name, v) in f.id().param_names().iter().zip(f.params()) {
        if !v.is_finite() {
            return Err(AskeyError::OutOfDomain(format!(
                "parameter {name} is not finite"
            )));
        }
    }
    let n_valid = f.n_valid();
    let nan = T::from_f64(f64::NAN);
    match *f {
        FamilyInstance::Hermite => Ok(RecurrenceCoeffs::new(
            |n| (T::zero(), T::from_usize(n) / T::from_f64(2.0)),
            None,
        )),
        FamilyInstance::Laguerre { alpha } => Ok(RecurrenceCoeffs::new(
            move |n| {
                let nn = T::from_usize(n);
                (T::from_f64(2.0) * nn + alpha + T::one(), nn * (nn + alpha))
            },
            None,
        )),
        FamilyInstance::Jacobi { alpha, beta } => Ok(RecurrenceCoeffs::new(
            move |n| jacobi_bc(alpha, beta, n),
            None,
        )),
        FamilyInstance::Racah {
            alpha,
            beta,
            n: big_n,
            delta,
        } => Ok(RecurrenceCoeffs::new(
            move |n| racah_bc(alpha, beta, big_n, delta, n).unwrap_or((nan, nan)),
            n_valid,
        )),
        FamilyInstance::Wilson { a, b, c, d } => Ok(RecurrenceCoeffs::new(
            move |n| match wilson_bc(a, b, c, d, n) {
                Ok((bn, cn)) => (bn.re, cn.re),
                Err(_) => (nan, nan),
            },
            None,
        )),
        _ => derived::derived_coeffs(f),
    }
}

/// Decide whether the parameters lie in a region where `Cₙ > 0`.
///
/// * Racah: `α, β > 0`, `N > 1`, `δ > α + N`.
/// * Wilson: case 1 (two conjugate pairs with positive real parts), case 2
///   (one such pair plus two reals with positive sum) or case 3 (all real
///   with `Cₙ > 0` for `n = 1..n_probe`). Cases 1 and 2 are additionally
///   probed numerically.
/// * Others: `Cₙ > 0` for `n = 1..min(n_valid, n_probe)`.
pub fn positivity_check<T: Real>(f: &FamilyInstance<T>) -> PositivityVerdict {
    match *f {
        FamilyInstance::Racah {
            alpha,
            beta,
            n,
            delta,
        } => {
            let ok = alpha > T::zero() && beta > T::zero() && n > T::one() && delta > alpha + n;
            if !ok {
                return PositivityVerdict {
                    ok: false,
                    case_label: Some(PositivityCase::RacahFinite),
                    failing_n: None,
                };
            }
            let failing_n = probe(f, f.n_valid().unwrap_or(0).min(N_PROBE));
            PositivityVerdict {
                ok: failing_n.is_none(),
                case_label: Some(PositivityCase::RacahFinite),
                failing_n,
            }
        }
        FamilyInstance::Wilson { a, b, c, d } => {
            let case = wilson_case([a, b, c, d]);
            match case {
                None => PositivityVerdict {
                    ok: false,
                    case_label: None,
                    failing_n: None,
                },
                Some(label) => {
                    let failing_n = probe(f, N_PROBE);
                    PositivityVerdict {
                        ok: failing_n.is_none(),
                        case_label: Some(label),
                        failing_n,
                    }
                }
            }
        }
        _ => {
            let n_max = f.n_valid().map_or(N_PROBE, |v| v.min(N_PROBE));
            let failing_n = probe(f, n_max);
            PositivityVerdict {
                ok: failing_n.is_none(),
                case_label: Some(PositivityCase::Unconstrained),
                failing_n,
            }
        }
    }
}

/// First `n ∈ 1..=n_max` with `Cₙ` not strictly positive (or the whole
/// record unusable, reported as `n = 1`).
fn probe<T: Real>(f: &FamilyInstance<T>, n_max: usize) -> Option<usize> {
    let rc = match recurrence_coeffs(f) {
        Ok(rc) => rc,
        Err(_) => return Some(1),
    };
    (1..=n_max).find(|&n| {
        let (b, c) = rc.pair(n);
        let (b0, _) = rc.pair(n - 1);
        !(c > T::zero() && c.is_finite() && b.is_finite() && b0.is_finite())
    })
}

/// Classify Wilson parameters into the three printed positivity cases by
/// their structure (the numerical probe is applied separately).
fn wilson_case<T: Real>(p: [Complex<T>; 4]) -> Option<PositivityCase> {
    let tol = 1e-12;
    let is_real = |v: Complex<T>| v.im.to_f64().abs() <= tol * (1.0 + v.re.to_f64().abs());
    let conj_eq = |u: Complex<T>, v: Complex<T>| {
        let scale = 1.0 + u.norm().to_f64();
        (u.re - v.re).to_f64().abs() <= tol * scale && (u.im + v.im).to_f64().abs() <= tol * scale
    };
    let pairings = [[(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]];
    // Case 1 admits real members: a real value paired with an equal real
    // value is its own conjugate pair.
    let case1 = pairings.iter().any(|pp| {
        pp.iter()
            .all(|&(i, j)| conj_eq(p[i], p[j]) && p[i].re > T::zero())
    });
    if case1 {
        return Some(PositivityCase::WilsonCase1);
    }
    let complex: Vec<usize> = (0..4).filter(|&k| !is_real(p[k])).collect();
    match complex.len() {
        0 => Some(PositivityCase::WilsonCase3),
        2 => {
            let (i, j) = (complex[0], complex[1]);
            let reals: Vec<usize> = (0..4).filter(|&k| k != i && k != j).collect();
            let pair_ok = conj_eq(p[i], p[j]) && p[i].re > T::zero();
            let sum_ok = p[reals[0]].re + p[reals[1]].re > T::zero();
            (pair_ok && sum_ok).then_some(PositivityCase::WilsonCase2)
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn racah_an_cn_hand_values() {
        let (a0, c0) = racah_an_cn(1.0, 1.0, 2.0, 4.0, 0).unwrap();
        assert!((a0 - 6.0).abs() < 1e-14);
        assert_eq!(c0, 0.0);
        let (_, c1) = racah_an_cn(1.0, 1.0, 2.0, 4.0, 1).unwrap();
        assert!((c1 - 1.2).abs() < 1e-14);
    }

    #[test]
    fn wilson_case1_is_real_and_positive() {
        let (a, b, c, d) = (cx(1.0, 0.0), cx(1.0, -1.0), cx(1.0, 0.0), cx(1.0, 1.0));
        let (bn, cn) = wilson_bc(a, b, c, d, 1).unwrap();
        assert!(bn.im.abs() < 1e-14);
        assert!(cn.im.abs() < 1e-14 && cn.re > 0.0);
        assert_eq!(wilson_an_cn(a, b, c, d, 0).unwrap().1, cx(0.0, 0.0));
    }

    #[test]
    fn direct_examples() {
        let h = recurrence_coeffs(&FamilyInstance::<f64>::Hermite).unwrap();
        assert_eq!(h.pair(3), (0.0, 1.5));
        let l = recurrence_coeffs(&FamilyInstance::Laguerre { alpha: 0.5 }).unwrap();
        assert_eq!(l.pair(2), (5.5, 5.0));
        let j = recurrence_coeffs(&FamilyInstance::Jacobi {
            alpha: 0.0,
            beta: 0.0,
        })
        .unwrap();
        let (b0, _) = j.pair(0);
        let (b1, c1) = j.pair(1);
        assert_eq!(b0, 0.0);
        assert_eq!(b1, 0.0);
        assert!((c1 - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn positivity_examples() {
        let ok = positivity_check(&FamilyInstance::Racah {
            alpha: 1.0,
            beta: 1.0,
            n: 2.0,
            delta: 4.0,
        });
        assert!(ok.ok);
        assert_eq!(ok.case_label, Some(PositivityCase::RacahFinite));
        let bad = positivity_check(&FamilyInstance::Racah {
            alpha: 1.0,
            beta: 1.0,
            n: 2.0,
            delta: 2.0,
        });
        assert!(!bad.ok);
        let w = positivity_check(&FamilyInstance::Wilson {
            a: cx(1.0, 0.0),
            b: cx(1.0, -1.0),
            c: cx(1.0, 0.0),
            d: cx(1.0, 1.0),
        });
        assert!(w.ok);
        assert_eq!(w.case_label, Some(PositivityCase::WilsonCase1));
    }

    #[test]
    fn tags_round_trip() {
        for id in FamilyId::ALL {
            assert_eq!(id.name().parse::<FamilyId>().unwrap(), id);
        }
        assert_eq!(
            "ContinuousDualHahn".parse::<FamilyId>().unwrap(),
            FamilyId::ContinuousDualHahn
        );
        let arities: Vec<usize> = FamilyId::ALL.iter().map(|id| id.arity()).collect();
        assert_eq!(arities, vec![4, 4, 3, 4, 3, 3, 2, 2, 2, 2, 1, 1, 0]);
    }
}
