//! Real-scalar abstraction and the two arithmetic backends.
//!
//! Every numerical routine in this crate is generic over [`Real`]. Two
//! backends are provided:
//!
//! | Backend | Type | Significant digits | Purpose |
//! |---------|------|--------------------|---------|
//! | [`Backend::Binary64`] | `f64` | ~16 | default, fast evaluation |
//! | [`Backend::HighPrec`] | [`HighPrec`] (`f256`) | ~71 | verification mode |
//!
//! The chart coefficient formulas are long alternating sums; evaluating them
//! in 237-bit arithmetic separates transcription errors from cancellation.
//!
//! [`Complex`] is a minimal complex type over any [`Real`], used only where
//! the Wilson and continuous-Hahn parameters are non-real.

use std::fmt::{self, Debug, Display};
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// The 256-bit IEEE float used by the verification backend.
pub type HighPrec = f256::f256;

/// Which scalar backend a computation runs on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    /// IEEE binary64 (`f64`).
    Binary64,
    /// IEEE binary256 (`f256`), about 71 significant decimal digits.
    HighPrec,
}

impl Backend {
    /// Canonical lowercase name, as used on the command line and in reports.
    pub fn name(self) -> &'static str {
        match self {
            Backend::Binary64 => "binary64",
            Backend::HighPrec => "highprec",
        }
    }
}

impl Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Backend {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "binary64" | "f64" => Ok(Backend::Binary64),
            "highprec" | "f256" => Ok(Backend::HighPrec),
            other => Err(format!(
                "unknown backend `{other}` (expected binary64 or highprec)"
            )),
        }
    }
}

/// A real scalar usable by every algorithm in this crate.
///
/// Implementations must be `Copy` so that the long closed-form coefficient
/// expressions can be written as ordinary arithmetic.
pub trait Real:
    Copy
    + Debug
    + Display
    + PartialOrd
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
{
    /// The backend this type implements.
    const BACKEND: Backend;

    /// Exact conversion from `f64` (both backends represent every `f64`).
    fn from_f64(v: f64) -> Self;
    /// Conversion from an integer (exact for |v| < 2^53 in binary64).
    fn from_i64(v: i64) -> Self;
    /// Nearest `f64`.
    fn to_f64(self) -> f64;
    /// Nonnegative square root; NaN for negative arguments.
    fn sqrt(self) -> Self;
    /// Absolute value.
    fn abs(self) -> Self;
    /// Sine.
    fn sin(self) -> Self;
    /// Cosine.
    fn cos(self) -> Self;
    /// Tangent.
    fn tan(self) -> Self;
    /// Principal arctangent.
    fn atan(self) -> Self;
    /// The constant π.
    fn pi() -> Self;
    /// True unless NaN or ±∞.
    fn is_finite(self) -> bool;
    /// Unit roundoff of the backend, as an `f64`.
    fn unit_roundoff() -> f64;
    /// Exact widening to the high-precision type.
    fn to_highprec(self) -> HighPrec;
    /// Rounding from the high-precision type.
    fn from_highprec(h: HighPrec) -> Self;

    /// Additive identity.
    #[inline]
    fn zero() -> Self {
        Self::from_f64(0.0)
    }

    /// Multiplicative identity.
    #[inline]
    fn one() -> Self {
        Self::from_f64(1.0)
    }

    /// Conversion from a small unsigned integer (degrees, indices).
    #[inline]
    fn from_usize(v: usize) -> Self {
        Self::from_i64(v as i64)
    }

    /// Integer power by repeated squaring.
    fn powi(self, k: u32) -> Self {
        let mut base = self;
        let mut acc = Self::one();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Half-integer power `self^(k/2)` for `self ≥ 0`.
    fn pow_half(self, k: u32) -> Self {
        let r = self.sqrt();
        r.powi(k)
    }

    /// Larger of two values (NaN-propagating).
    fn max_of(self, other: Self) -> Self {
        if self.is_finite() && other.is_finite() {
            if self >= other {
                self
            } else {
                other
            }
        } else if !self.is_finite() {
            self
        } else {
            other
        }
    }

    /// True if the value is exactly zero.
    #[inline]
    fn is_zero(self) -> bool {
        self == Self::zero()
    }
}

impl Real for f64 {
    const BACKEND: Backend = Backend::Binary64;

    #[inline]
    fn from_f64(v: f64) -> Self {
        v
    }
    #[inline]
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    #[inline]
    fn to_f64(self) -> f64 {
        self
    }
    #[inline]
    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }
    #[inline]
    fn abs(self) -> Self {
        f64::abs(self)
    }
    #[inline]
    fn sin(self) -> Self {
        f64::sin(self)
    }
    #[inline]
    fn cos(self) -> Self {
        f64::cos(self)
    }
    #[inline]
    fn tan(self) -> Self {
        f64::tan(self)
    }
    #[inline]
    fn atan(self) -> Self {
        f64::atan(self)
    }
    #[inline]
    fn pi() -> Self {
        std::f64::consts::PI
    }
    #[inline]
    fn is_finite(self) -> bool {
        f64::is_finite(self)
    }
    #[inline]
    fn unit_roundoff() -> f64 {
        f64::EPSILON / 2.0
    }
    #[inline]
    fn to_highprec(self) -> HighPrec {
        HighPrec::from(self)
    }
    #[inline]
    fn from_highprec(h: HighPrec) -> Self {
        h.to_f64()
    }
}

impl Real for HighPrec {
    const BACKEND: Backend = Backend::HighPrec;

    #[inline]
    fn from_f64(v: f64) -> Self {
        HighPrec::from(v)
    }
    #[inline]
    fn from_i64(v: i64) -> Self {
        HighPrec::from(v as i128)
    }
    fn to_f64(self) -> f64 {
        if self.is_nan() {
            return f64::NAN;
        }
        if !HighPrec::is_finite(self) {
            return if self > HighPrec::ZERO {
                f64::INFINITY
            } else {
                f64::NEG_INFINITY
            };
        }
        // Round-trip decimal rendering (~71 digits), then nearest f64.
        format!("{self:e}").parse().unwrap_or(f64::NAN)
    }
    #[inline]
    fn sqrt(self) -> Self {
        HighPrec::sqrt(self)
    }
    #[inline]
    fn abs(self) -> Self {
        HighPrec::abs(&self)
    }
    #[inline]
    fn sin(self) -> Self {
        HighPrec::sin(&self)
    }
    #[inline]
    fn cos(self) -> Self {
        HighPrec::cos(&self)
    }
    #[inline]
    fn tan(self) -> Self {
        HighPrec::tan(&self)
    }
    #[inline]
    fn atan(self) -> Self {
        HighPrec::atan(&self)
    }
    #[inline]
    fn pi() -> Self {
        f256::consts::PI
    }
    #[inline]
    fn is_finite(self) -> bool {
        HighPrec::is_finite(self)
    }
    #[inline]
    fn unit_roundoff() -> f64 {
        // 237-bit significand.
        2f64.powi(-237)
    }
    #[inline]
    fn to_highprec(self) -> HighPrec {
        self
    }
    #[inline]
    fn from_highprec(h: HighPrec) -> Self {
        h
    }
}

/// Convert between backends (exact when widening, correctly rounded when
/// narrowing).
pub fn convert<S: Real, T: Real>(v: S) -> T {
    T::from_highprec(v.to_highprec())
}

/// Relative error `|a − b| / max(1, |b|)` with `b` the reference value.
///
/// Values near zero are thereby compared absolutely, which is the natural
/// scale for recurrence coefficients of order one.
pub fn rel_err<T: Real>(a: T, b: T) -> f64 {
    let d = (a - b).abs();
    let s = b.abs().max_of(T::one());
    (d / s).to_f64().abs()
}

/// A complex number over a [`Real`] scalar.
#[derive(Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Complex<T> {
    /// Real part.
    pub re: T,
    /// Imaginary part.
    pub im: T,
}

impl<T: Real> Complex<T> {
    /// Construct from real and imaginary parts.
    pub fn new(re: T, im: T) -> Self {
        Complex { re, im }
    }

    /// Embed a real number.
    pub fn from_real(re: T) -> Self {
        Complex { re, im: T::zero() }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Complex {
            re: T::zero(),
            im: T::one(),
        }
    }

    /// Complex conjugate.
    pub fn conj(self) -> Self {
        Complex {
            re: self.re,
            im: -self.im,
        }
    }

    /// Modulus.
    pub fn norm(self) -> T {
        (self.re * self.re + self.im * self.im).sqrt()
    }

    /// Multiply by a real scalar.
    pub fn scale(self, s: T) -> Self {
        Complex {
            re: self.re * s,
            im: self.im * s,
        }
    }

    /// True if both parts are finite.
    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    /// `exp(i θ)` for real θ.
    pub fn cis(theta: T) -> Self {
        Complex {
            re: theta.cos(),
            im: theta.sin(),
        }
    }

    /// Integer power.
    pub fn powi(self, k: u32) -> Self {
        let mut acc = Complex::from_real(T::one());
        for _ in 0..k {
            acc = acc * self;
        }
        acc
    }
}

impl<T: Debug> Debug for Complex<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} + {:?}i)", self.re, self.im)
    }
}

impl<T: Real> Display for Complex<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}i", self.re.to_f64(), self.im.to_f64())
    }
}

impl<T: Real> Add for Complex<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Complex::new(self.re + o.re, self.im + o.im)
    }
}

impl<T: Real> Sub for Complex<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Complex::new(self.re - o.re, self.im - o.im)
    }
}

impl<T: Real> Mul for Complex<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Complex::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
}

impl<T: Real> Div for Complex<T> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        let d = o.re * o.re + o.im * o.im;
        Complex::new(
            (self.re * o.re + self.im * o.im) / d,
            (self.im * o.re - self.re * o.im) / d,
        )
    }
}

impl<T: Real> Neg for Complex<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Complex::new(-self.re, -self.im)
    }
}

impl<T: Real> Add<T> for Complex<T> {
    type Output = Self;
    fn add(self, o: T) -> Self {
        Complex::new(self.re + o, self.im)
    }
}

impl<T: Real> Sub<T> for Complex<T> {
    type Output = Self;
    fn sub(self, o: T) -> Self {
        Complex::new(self.re - o, self.im)
    }
}

impl<T: Real> Mul<T> for Complex<T> {
    type Output = Self;
    fn mul(self, o: T) -> Self {
        self.scale(o)
    }
}

impl<T: Real> Div<T> for Complex<T> {
    type Output = Self;
    fn div(self, o: T) -> Self {
        Complex::new(self.re / o, self.im / o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn highprec_has_more_than_fifty_digits() {
        let two = HighPrec::from_f64(2.0);
        let r = two.sqrt();
        let resid = (r * r - two).abs();
        assert!(resid < HighPrec::from_f64(1e-60));
        assert!(HighPrec::unit_roundoff() < 1e-50);
    }

    #[test]
    fn to_f64_rounds_correctly() {
        let third = HighPrec::one() / HighPrec::from_f64(3.0);
        assert_eq!(third.to_f64(), 1.0 / 3.0);
        assert_eq!(HighPrec::from_f64(-2.5e-300).to_f64(), -2.5e-300);
        assert!(HighPrec::NAN.to_f64().is_nan());
    }

    #[test]
    fn convert_between_backends() {
        let h: HighPrec = convert(0.1f64);
        assert_eq!(h, HighPrec::from(0.1f64));
        let back: f64 = convert(h);
        assert_eq!(back, 0.1);
        let same: HighPrec = convert(h);
        assert_eq!(same, h);
    }

    #[test]
    fn complex_arithmetic() {
        let a = Complex::new(1.0, -1.0);
        let b = Complex::new(2.0, 3.0);
        let p = a * b;
        assert_eq!((p.re, p.im), (5.0, 1.0));
        let q = p / b;
        assert!((q.re - 1.0).abs() < 1e-15 && (q.im + 1.0).abs() < 1e-15);
        assert_eq!(a.conj().im, 1.0);
    }

    #[test]
    fn backend_parse_roundtrip() {
        for b in [Backend::Binary64, Backend::HighPrec] {
            assert_eq!(b.name().parse::<Backend>().unwrap(), b);
        }
        assert!("quad".parse::<Backend>().is_err());
    }

    #[test]
    fn powers() {
        assert_eq!(3.0f64.powi(4), 81.0);
        assert!((4.0f64.pow_half(3) - 8.0).abs() < 1e-15);
    }
}
