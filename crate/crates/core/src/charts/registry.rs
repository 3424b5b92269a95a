//! The boundary-face registry: for every face of every chart, the lower
//! family it restricts to, the parameter formulas, the affine scale and the
//! auxiliary identities that relate points of the same record.
//!
//! All formulas take the full coordinate vector of a point on the face; the
//! coordinates in the zero set are 0 there.
//!
//! Corrections relative to the printed blocks (each confirmed against the
//! composed route or the hypergeometric oracle in high precision):
//!
//! * Racah2 dual Hahn: `σ` has denominator `s₁s₂³s₄`.
//! * Racah3 dual Hahn: `σ = −1/(u₂³u₃u₄)`.
//! * Racah2 Krawtchouk: the intermediate point is
//!   `(0, s₂/Q, 0, s₄Q²)`, `Q = 1+s₃+s₂s₃s₄`.
//! * Racah2 Hermite: `p(x; s₁,0,s₃,0)` and `p(x; 0,0,s₃,0)` differ by the
//!   scale `ρ₀`; only the valid identities are recorded.
//! * Wilson1 Hermite: the identity through `(0,0,a₃,0)` uses `ρ₂` and the one
//!   through `(0,0,0,a₄)` uses `2^{−3/2}ρ`.
//! * Wilson2 Laguerre: `ρ = −2^{−1/2}b₁^{1/2}`, and the identity through
//!   `(b₁,0,0,0)` uses the shift `σ₀ + σ₁`.

use super::formulas::*;
use super::{BoundaryFace, ChartId};
use crate::error::{AskeyError, Result};
use crate::families::{FamilyId, FamilyInstance};
use crate::scalar::{Complex, Real};

/// Parameters of the restricted family as a function of the face point.
pub type ParamFn<T> = fn(&[T]) -> FamilyInstance<T>;
/// `(ρ, σ)` or an auxiliary `(ρ₀, σ₀)` as a function of the face point.
pub type ScaleFn<T> = fn(&[T]) -> (T, T);
/// Map from a face point to another point of the chart.
pub type PointFn<T> = fn(&[T]) -> Vec<T>;

/// Auxiliary identity `p(x; P) = ρ₀ⁿ p(ρ₀⁻¹x − σ₀; point(P))` between two
/// points covered by the same record.
#[derive(Clone, Copy)]
pub struct AliasIdentity<T> {
    /// Human-readable form of the target point.
    pub label: &'static str,
    /// Target point.
    pub point: PointFn<T>,
    /// `(ρ₀, σ₀)`.
    pub scale: ScaleFn<T>,
}

impl<T> std::fmt::Debug for AliasIdentity<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "AliasIdentity({})", self.label)
    }
}

/// Registry entry for a boundary face.
#[derive(Clone)]
pub struct RestrictionRecord<T> {
    /// Chart the face belongs to.
    pub chart: ChartId,
    /// The face this record was requested for.
    pub face: BoundaryFace,
    /// All faces covered by the same formulas (including `face`).
    pub faces: Vec<BoundaryFace>,
    /// Family obtained on the face.
    pub target: FamilyId,
    /// Target parameters.
    pub params: ParamFn<T>,
    /// `(ρ, σ)` such that chart coefficients = target coefficients rescaled.
    pub scale: ScaleFn<T>,
    /// Auxiliary identities printed with the block.
    pub aliases: Vec<AliasIdentity<T>>,
}

impl<T> std::fmt::Debug for RestrictionRecord<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RestrictionRecord")
            .field("chart", &self.chart)
            .field("face", &self.face)
            .field("faces", &self.faces)
            .field("target", &self.target)
            .field("aliases", &self.aliases)
            .finish()
    }
}

#[inline]
fn k<T: Real>(v: f64) -> T {
    T::from_f64(v)
}

#[inline]
fn sqrt2<T: Real>() -> T {
    k::<T>(2.0).sqrt()
}

fn alias<T>(label: &'static str, point: PointFn<T>, scale: ScaleFn<T>) -> AliasIdentity<T> {
    AliasIdentity {
        label,
        point,
        scale,
    }
}

fn identity_scale<T: Real>(_: &[T]) -> (T, T) {
    (T::one(), T::zero())
}

fn faces(list: &[&[usize]]) -> Vec<BoundaryFace> {
    list.iter().map(|f| BoundaryFace::from_indices(f)).collect()
}

/// Look up the record covering `face` of `chart`. The empty face returns the
/// interior record (top family with the chart's `(ρ, σ)`).
///
/// # Errors
///
/// [`AskeyError::InvalidInput`] if the face mentions a coordinate the chart
/// does not have.
pub fn face_restriction<T: Real>(
    chart: ChartId,
    face: BoundaryFace,
) -> Result<RestrictionRecord<T>> {
    if face.indices().iter().any(|&i| i == 0 || i > chart.dim()) {
        return Err(AskeyError::InvalidInput(format!(
            "face {face} is not a face of the {}-dimensional chart {chart}",
            chart.dim()
        )));
    }
    let z = |i: usize| face.contains(i);
    let mut rec = match chart {
        ChartId::Racah1 => {
            if z(1) {
                if z(4) {
                    r1_hermite()
                } else if z(2) {
                    r1_charlier()
                } else {
                    r1_krawtchouk()
                }
            } else if z(2) {
                if z(4) {
                    r1_laguerre()
                } else {
                    r1_meixner()
                }
            } else if z(4) {
                r1_jacobi()
            } else if z(3) {
                r1_hahn()
            } else {
                interior(chart, FamilyId::Racah, racah1_family, racah1_scale)
            }
        }
        ChartId::Racah2 => {
            if z(2) {
                r2_hermite()
            } else if z(1) {
                if z(4) {
                    r2_charlier()
                } else {
                    r2_krawtchouk()
                }
            } else if z(4) {
                r2_meixner()
            } else if z(3) {
                r2_dual_hahn()
            } else {
                interior(chart, FamilyId::Racah, racah2_family, racah2_scale)
            }
        }
        ChartId::Racah3 => {
            if z(2) {
                r3_hermite()
            } else if z(4) {
                r3_laguerre()
            } else if z(3) {
                r3_meixner()
            } else if z(1) {
                r3_dual_hahn()
            } else {
                interior(chart, FamilyId::Racah, racah3_family, racah3_scale)
            }
        }
        ChartId::Wilson1 => {
            if z(1) {
                w1_hermite()
            } else if z(2) {
                if z(3) {
                    w1_laguerre()
                } else {
                    w1_meixner_pollaczek()
                }
            } else if z(3) {
                w1_jacobi()
            } else if z(4) {
                w1_continuous_hahn()
            } else {
                interior(chart, FamilyId::Wilson, wilson1_family, wilson1_scale)
            }
        }
        ChartId::Wilson2 => {
            if z(1) {
                w2_hermite()
            } else if z(3) {
                w2_laguerre()
            } else if z(2) {
                w2_meixner_pollaczek()
            } else if z(4) {
                w2_continuous_dual_hahn()
            } else {
                interior(chart, FamilyId::Wilson, wilson2_family, wilson2_scale)
            }
        }
        ChartId::Jacobi2D => match (z(1), z(2)) {
            (true, true) => j2_hermite(),
            (true, false) => j2_laguerre_beta(),
            (false, true) => j2_laguerre_alpha(),
            (false, false) => interior(chart, FamilyId::Jacobi, jacobi2d_family, jacobi2d_scale),
        },
    };
    rec.chart = chart;
    rec.face = face;
    Ok(rec)
}

fn record<T>(
    target: FamilyId,
    face_list: &[&[usize]],
    params: ParamFn<T>,
    scale: ScaleFn<T>,
    aliases: Vec<AliasIdentity<T>>,
) -> RestrictionRecord<T> {
    RestrictionRecord {
        chart: ChartId::Racah1,
        face: BoundaryFace::EMPTY,
        faces: faces(face_list),
        target,
        params,
        scale,
        aliases,
    }
}

fn interior<T>(
    chart: ChartId,
    target: FamilyId,
    params: ParamFn<T>,
    scale: ScaleFn<T>,
) -> RestrictionRecord<T> {
    let mut r = record(target, &[&[]], params, scale, Vec::new());
    r.chart = chart;
    r
}

// ---------------------------------------------------------------------------
// Racah chart 1
// ---------------------------------------------------------------------------

fn r1_hahn<T: Real>() -> RestrictionRecord<T> {
    record(
        FamilyId::Hahn,
        &[&[3]],
        |t| {
            let one = T::one();
            FamilyInstance::Hahn {
                alpha: one / t[0],
                beta: one / (t[0] * t[1]),
                n: one / (t[1] * t[3]),
            }
        },
        |t| {
            let one = T::one();
            let (t1, t2, t4) = (t[0], t[1], t[3]);
            (
                (one + t2).pow_half(3) * t4 / (t1 + t4 + t2 * t4).sqrt(),
                -(one + t1) / ((one + t2 + k::<T>(2.0) * t1 * t2) * t4),
            )
        },
        Vec::new(),
    )
}

fn r1_jacobi<T: Real>() -> RestrictionRecord<T> {
    record(
        FamilyId::Jacobi,
        &[&[4], &[3, 4]],
        |t| FamilyInstance::Jacobi {
            alpha: T::one() / t[0],
            beta: T::one() / (t[0] * t[1]),
        },
        |t| {
            let one = T::one();
            let (t1, t2) = (t[0], t[1]);
            (
                -(one + t2).pow_half(3) / (k::<T>(2.0) * t1.sqrt() * t2),
                (t2 - one) / (one + t2 + k::<T>(2.0) * t1 * t2),
            )
        },
        vec![alias(
            "(t1,t2,0,0)",
            |t| vec![t[0], t[1], T::zero(), T::zero()],
            identity_scale,
        )],
    )
}

fn r1_meixner<T: Real>() -> RestrictionRecord<T> {
    record(
        FamilyId::Meixner,
        &[&[2], &[2, 3]],
        |t| {
            let one = T::one();
            let (t1, t3, t4) = (t[0], t[2], t[3]);
            FamilyInstance::Meixner {
                beta: (one + t1) / t1,
                c: t1 * (one + t3 * t4) / (t1 + t4),
            }
        },
        |t| {
            let one = T::one();
            let (t1, t3, t4) = (t[0], t[2], t[3]);
            (
                (one - t1 * t3) * t4 / ((t1 + t4).sqrt() * (one + t3 * t4).sqrt()),
                -(one + t1) * (one + t3 * t4) / ((one - t1 * t3) * t4),
            )
        },
        vec![alias(
            "(t1,0,0,t4(1-t1t3)/(1+t3t4))",
            |t| {
                let one = T::one();
                let (t1, t3, t4) = (t[0], t[2], t[3]);
                vec![
                    t1,
                    T::zero(),
                    T::zero(),
                    t4 * (one - t1 * t3) / (one + t3 * t4),
                ]
            },
            identity_scale,
        )],
    )
}

fn r1_krawtchouk<T: Real>() -> RestrictionRecord<T> {
    record(
        FamilyId::Krawtchouk,
        &[&[1], &[1, 3]],
        |t| {
            let one = T::one();
            let (t2, t3, t4) = (t[1], t[2], t[3]);
            let q = one + t3 * t4 + t2 * t3 * t4;
            FamilyInstance::Krawtchouk {
                p: t2 * q / ((one + t2) * (one + t2 * t3 * t4)),
                n: one / (t2 * t4),
            }
        },
        |t| {
            let one = T::one();
            let (t2, t3, t4) = (t[1], t[2], t[3]);
            let q = one + t3 * t4 + t2 * t3 * t4;
            (
                t4.sqrt() * (one + t2) * (one + t2 * t3 * t4) / q.sqrt(),
                -q / (t4 * (one + t2) * (one + t2 * t3 * t4)),
            )
        },
        vec![alias(
            "(0,t2Q,0,t4/Q)",
            |t| {
                let (t2, t3, t4) = (t[1], t[2], t[3]);
                let q = T::one() + t3 * t4 + t2 * t3 * t4;
                vec![T::zero(), t2 * q, T::zero(), t4 / q]
            },
            identity_scale,
        )],
    )
}

fn r1_laguerre<T: Real>() -> RestrictionRecord<T> {
    record(
        FamilyId::Laguerre,
        &[&[2, 4], &[2, 3, 4]],
        |t| FamilyInstance::Laguerre {
            alpha: T::one() / t[0],
        },
        |t| (t[0].sqrt(), -(T::one() + t[0]) / t[0]),
        vec![alias(
            "(t1,0,0,0)",
            |t| vec![t[0], T::zero(), T::zero(), T::zero()],
            identity_scale,
        )],
    )
}

fn r1_charlier<T: Real>() -> RestrictionRecord<T> {
    record(
        FamilyId::Charlier,
        &[&[1, 2], &[1, 2, 3]],
        |t| FamilyInstance::Charlier {
            a: (T::one() + t[2] * t[3]) / t[3],
        },
        |t| {
            let w = T::one() + t[2] * t[3];
            (t[3].sqrt() / w.sqrt(), -w / t[3])
        },
        vec![alias(
            "(0,0,0,t4/(1+t3t4))",
            |t| {
                let z = T::zero();
                vec![z, z, z, t[3] / (T::one() + t[2] * t[3])]
            },
            identity_scale,
        )],
    )
}

fn r1_hermite<T: Real>() -> RestrictionRecord<T> {
    record(
        FamilyId::Hermite,
        &[&[1, 4], &[1, 2, 4], &[1, 3, 4], &[1, 2, 3, 4]],
        |_| FamilyInstance::Hermite,
        |_| (sqrt2(), T::zero()),
        vec![
            alias(
                "(0,t2,0,0)",
                |t| vec![T::zero(), t[1], T::zero(), T::zero()],
                identity_scale,
            ),
            alias(
                "(0,0,t3,0)",
                |t| vec![T::zero(), T::zero(), t[2], T::zero()],
                identity_scale,
            ),
            alias("(0,0,0,0)", |_| vec![T::zero(); 4], identity_scale),
        ],
    )
}

// ---------------------------------------------------------------------------
// Racah chart 2
// ---------------------------------------------------------------------------

fn r2_dual_hahn<T: Real>() -> RestrictionRecord<T> {
    record(
        FamilyId::DualHahn,
        &[&[3]],
        |s| {
            let one = T::one();
            let (s1, s2, s4) = (s[0], s[1], s[3]);
            FamilyInstance::DualHahn {
                gamma: (one + s1) / (s1 * s2),
                delta: one / (s1 * s2 * s2 * s4),
                n: one / (s2 * s2 * s4),
            }
        },
        |s| {
            let one = T::one();
            let (s1, s2, s4) = (s[0], s[1], s[3]);
            (
                s1 * s2.pow_half(5) * s4 / (sqrt2::<T>() * (one + s1)),
                -((one + s1) * (one - s2 * s2 * s4) + s1 * s2) / (s1 * s2.powi(3) * s4),
            )
        },
        Vec::new(),
    )
}

fn r2_meixner<T: Real>() -> RestrictionRecord<T> {
    record(
        FamilyId::Meixner,
        &[&[4], &[3, 4]],
        |s| {
            let one = T::one();
            let (s1, s2, s3) = (s[0], s[1], s[2]);
            FamilyInstance::Meixner {
                beta: (one + s1 + s1 * s2) / (s1 * s2),
                c: s1 * (one + s3) / (one + s1 + s1 * s3),
            }
        },
        |s| {
            let one = T::one();
            let (s1, s2, s3) = (s[0], s[1], s[2]);
            (
                s2.sqrt() / (sqrt2::<T>() * (one + s1)),
                -(one + s1 + s3 + s1 * s2 + s1 * s3) / s2,
            )
        },
        vec![alias(
            "(s1(1+s3),s2(1+s1+s1s3)/((1+s1)(1+s3)),0,0)",
            |s| {
                let one = T::one();
                let (s1, s2, s3) = (s[0], s[1], s[2]);
                vec![
                    s1 * (one + s3),
                    s2 * (one + s1 + s1 * s3) / ((one + s1) * (one + s3)),
                    T::zero(),
                    T::zero(),
                ]
            },
            |s| {
                let one = T::one();
                let (s1, s2, s3) = (s[0], s[1], s[2]);
                let r1 = (one + s1).sqrt();
                let r3 = (one + s3).sqrt();
                let r13 = (one + s1 + s1 * s3).sqrt();
                (
                    r3 * r13 / r1,
                    s1 * s2.sqrt() * s3 / (sqrt2::<T>() * r1 * r3 * r13),
                )
            },
        )],
    )
}

fn r2_krawtchouk<T: Real>() -> RestrictionRecord<T> {
    record(
        FamilyId::Krawtchouk,
        &[&[1], &[1, 3]],
        |s| {
            let one = T::one();
            let (s2, s3, s4) = (s[1], s[2], s[3]);
            FamilyInstance::Krawtchouk {
                p: s2 * s4 * (one + s3 + s2 * s3 * s4) / ((one + s2 * s4) * (one + s2 * s3 * s4)),
                n: one / (s2 * s2 * s4),
            }
        },
        |s| {
            let one = T::one();
            let (s2, s3, s4) = (s[1], s[2], s[3]);
            (
                s2.sqrt() * (one + s2 * s4) / sqrt2::<T>(),
                -(one + s3 - s2 * s2 * s4) / (s2 * (one + s2 * s4)),
            )
        },
        vec![alias(
            "(0,s2/Q,0,s4Q^2)",
            |s| {
                let (s2, s3, s4) = (s[1], s[2], s[3]);
                let q = T::one() + s3 + s2 * s3 * s4;
                vec![T::zero(), s2 / q, T::zero(), s4 * q * q]
            },
            |s| {
                let (s2, s3, s4) = (s[1], s[2], s[3]);
                let q = T::one() + s3 + s2 * s3 * s4;
                (
                    q.sqrt() / (T::one() + s2 * s3 * s4),
                    -s2.sqrt() * s3 * s4 * (s2 + s3) / (sqrt2::<T>() * q.sqrt()),
                )
            },
        )],
    )
}

fn r2_charlier<T: Real>() -> RestrictionRecord<T> {
    record(
        FamilyId::Charlier,
        &[&[1, 4], &[1, 3, 4]],
        |s| FamilyInstance::Charlier {
            a: (T::one() + s[2]) / s[1],
        },
        |s| (s[1].sqrt() / sqrt2::<T>(), -(T::one() + s[2]) / s[1]),
        vec![alias(
            "(0,s2/(1+s3),0,0)",
            |s| vec![T::zero(), s[1] / (T::one() + s[2]), T::zero(), T::zero()],
            |s| ((T::one() + s[2]).sqrt(), T::zero()),
        )],
    )
}

/// `√((1+s₃)(1+s₁+s₁s₃)/(1+s₁))`.
fn r2_hermite_rho<T: Real>(s: &[T]) -> T {
    let one = T::one();
    let (s1, s3) = (s[0], s[2]);
    ((one + s3) * (one + s1 + s1 * s3) / (one + s1)).sqrt()
}

fn r2_hermite<T: Real>() -> RestrictionRecord<T> {
    fn rho0<T: Real>(s: &[T]) -> (T, T) {
        let one = T::one();
        let (s1, s3) = (s[0], s[2]);
        (((one + s1 + s1 * s3) / (one + s1)).sqrt(), T::zero())
    }
    fn rho<T: Real>(s: &[T]) -> (T, T) {
        (r2_hermite_rho(s), T::zero())
    }
    record(
        FamilyId::Hermite,
        &[
            &[2],
            &[1, 2],
            &[2, 3],
            &[2, 4],
            &[1, 2, 3],
            &[1, 2, 4],
            &[2, 3, 4],
            &[1, 2, 3, 4],
        ],
        |_| FamilyInstance::Hermite,
        rho,
        vec![
            alias(
                "(s1,0,s3,0)",
                |s| vec![s[0], T::zero(), s[2], T::zero()],
                identity_scale,
            ),
            alias(
                "(0,0,s3,s4)",
                |s| vec![T::zero(), T::zero(), s[2], s[3]],
                rho0,
            ),
            alias(
                "(0,0,s3,0)",
                |s| vec![T::zero(), T::zero(), s[2], T::zero()],
                rho0,
            ),
            alias(
                "(s1,0,0,s4)",
                |s| vec![s[0], T::zero(), T::zero(), s[3]],
                rho,
            ),
            alias(
                "(0,0,0,s4)",
                |s| vec![T::zero(), T::zero(), T::zero(), s[3]],
                rho,
            ),
        ],
    )
}

// ---------------------------------------------------------------------------
// Racah chart 3
// ---------------------------------------------------------------------------

fn r3_dual_hahn<T: Real>() -> RestrictionRecord<T> {
    record(
        FamilyId::DualHahn,
        &[&[1]],
        |u| {
            let one = T::one();
            let (u2, u3, u4) = (u[1], u[2], u[3]);
            FamilyInstance::DualHahn {
                gamma: one / u2,
                delta: one / (u2 * u2 * u3),
                n: one / (u2 * u2 * u3 * u4),
            }
        },
        |u| {
            let (u2, u3, u4) = (u[1], u[2], u[3]);
            (
                u2.pow_half(5) * u3 * u4 / sqrt2::<T>(),
                -T::one() / (u2.powi(3) * u3 * u4),
            )
        },
        Vec::new(),
    )
}

fn r3_meixner<T: Real>() -> RestrictionRecord<T> {
    record(
        FamilyId::Meixner,
        &[&[3], &[1, 3]],
        |u| {
            let one = T::one();
            let (u1, u2, u4) = (u[0], u[1], u[3]);
            FamilyInstance::Meixner {
                beta: (one + u1 + u2) / u2,
                c: one / (one + u4),
            }
        },
        |u| {
            let (u1, u2, u4) = (u[0], u[1], u[3]);
            (u2.sqrt() * u4 / sqrt2::<T>(), -(T::one() + u1) / (u2 * u4))
        },
        vec![alias(
            "(0,u2/(1+u1),0,u4)",
            |u| vec![T::zero(), u[1] / (T::one() + u[0]), T::zero(), u[3]],
            |u| ((T::one() + u[0]).sqrt(), T::zero()),
        )],
    )
}

fn r3_laguerre<T: Real>() -> RestrictionRecord<T> {
    fn rho0<T: Real>(u: &[T]) -> (T, T) {
        let one = T::one();
        ((one + u[0]).sqrt() * (one + u[0] * u[2]), T::zero())
    }
    record(
        FamilyId::Laguerre,
        &[&[4], &[1, 4], &[3, 4], &[1, 3, 4]],
        |u| FamilyInstance::Laguerre {
            alpha: (T::one() + u[0]) / u[1],
        },
        |u| {
            let one = T::one();
            let (u1, u2, u3) = (u[0], u[1], u[2]);
            (u2.sqrt() * (one + u1 * u3) / sqrt2::<T>(), -(one + u1) / u2)
        },
        vec![
            alias(
                "(u1,u2,0,0)",
                |u| vec![u[0], u[1], T::zero(), T::zero()],
                |u| (T::one() + u[0] * u[2], T::zero()),
            ),
            alias(
                "(0,u2/(1+u1),u3,0)",
                |u| vec![T::zero(), u[1] / (T::one() + u[0]), u[2], T::zero()],
                rho0,
            ),
            alias(
                "(0,u2/(1+u1),0,0)",
                |u| vec![T::zero(), u[1] / (T::one() + u[0]), T::zero(), T::zero()],
                rho0,
            ),
        ],
    )
}

fn r3_hermite<T: Real>() -> RestrictionRecord<T> {
    // Factors of the Hermite scale: f1 = 1+u₁, f2 = 1+u₁u₃, f3 = 1+u₄,
    // f4 = 1+u₁u₃(1+u₄).
    fn f<T: Real>(u: &[T]) -> (T, T, T, T) {
        let one = T::one();
        let (u1, u3, u4) = (u[0], u[2], u[3]);
        (
            one + u1,
            one + u1 * u3,
            one + u4,
            one + u1 * u3 * (one + u4),
        )
    }
    fn rho<T: Real>(u: &[T]) -> (T, T) {
        let (f1, f2, f3, f4) = f(u);
        ((f1 * f2 * f3 * f4).sqrt(), T::zero())
    }
    fn rho0<T: Real>(u: &[T]) -> (T, T) {
        let (f1, f2, _, f4) = f(u);
        ((f1 * f2 * f4).sqrt(), T::zero())
    }
    fn rho1<T: Real>(u: &[T]) -> (T, T) {
        let (_, f2, _, f4) = f(u);
        ((f2 * f4).sqrt(), T::zero())
    }
    fn rho2<T: Real>(u: &[T]) -> (T, T) {
        let (_, f2, f3, f4) = f(u);
        ((f3 * f4 / f2).sqrt(), T::zero())
    }
    fn rho3<T: Real>(u: &[T]) -> (T, T) {
        let (_, f2, f3, f4) = f(u);
        ((f2 * f3 * f4).sqrt(), T::zero())
    }
    record(
        FamilyId::Hermite,
        &[
            &[2],
            &[1, 2],
            &[2, 3],
            &[2, 4],
            &[1, 2, 3],
            &[1, 2, 4],
            &[2, 3, 4],
            &[1, 2, 3, 4],
        ],
        |_| FamilyInstance::Hermite,
        rho,
        vec![
            alias(
                "(0,0,u3,u4)",
                |u| vec![T::zero(), T::zero(), u[2], u[3]],
                rho0,
            ),
            alias(
                "(0,0,0,u4)",
                |u| vec![T::zero(), T::zero(), T::zero(), u[3]],
                rho0,
            ),
            alias(
                "(u1,0,0,u4)",
                |u| vec![u[0], T::zero(), T::zero(), u[3]],
                rho1,
            ),
            alias(
                "(u1,0,u3,0)",
                |u| vec![u[0], T::zero(), u[2], T::zero()],
                rho2,
            ),
            alias(
                "(u1,0,0,0)",
                |u| vec![u[0], T::zero(), T::zero(), T::zero()],
                rho3,
            ),
            alias(
                "(0,0,u3,0)",
                |u| vec![T::zero(), T::zero(), u[2], T::zero()],
                rho,
            ),
            alias("(0,0,0,0)", |_| vec![T::zero(); 4], rho),
        ],
    )
}

// ---------------------------------------------------------------------------
// Wilson chart 1
// ---------------------------------------------------------------------------

fn w1_continuous_hahn<T: Real>() -> RestrictionRecord<T> {
    record(
        FamilyId::ContinuousHahn,
        &[&[4]],
        |a| {
            let (a1, a2, a3) = (a[0], a[1], a[2]);
            let two = k::<T>(2.0);
            let den = two * a1 * a2 * a3;
            let ca = Complex::new(two * a2 * a3 / den, T::one() / den);
            let cb = Complex::new(two * a3 / den, -T::one() / den);
            FamilyInstance::ContinuousHahn {
                a: ca,
                b: cb,
                c: ca.conj(),
                d: cb.conj(),
            }
        },
        |a| {
            let (a1, a2, a3) = (a[0], a[1], a[2]);
            let one = T::one();
            let den = k::<T>(2.0) * a1 * a2 * a3;
            (
                two_three_halves::<T>() * a1.sqrt() * a3,
                (one - a2) / (den * (one + a2 - a1 * a2)),
            )
        },
        Vec::new(),
    )
}

fn shift_a4<T: Real>(a: &[T]) -> (T, T) {
    (T::one(), a[3] / sqrt2::<T>())
}

fn w1_jacobi<T: Real>() -> RestrictionRecord<T> {
    record(
        FamilyId::Jacobi,
        &[&[3], &[3, 4]],
        |a| {
            let two = k::<T>(2.0);
            FamilyInstance::Jacobi {
                alpha: two / a[0] - T::one(),
                beta: two / (a[0] * a[1]) - T::one(),
            }
        },
        |a| {
            let one = T::one();
            let (a1, a2, a4) = (a[0], a[1], a[3]);
            (
                -sqrt2::<T>() / (a1.sqrt() * a2),
                -(one - a2) / (one + a2 - a1 * a2) - a1.sqrt() * a2 * a4 / k::<T>(2.0),
            )
        },
        vec![alias(
            "(a1,a2,0,0)",
            |a| vec![a[0], a[1], T::zero(), T::zero()],
            shift_a4,
        )],
    )
}

fn w1_meixner_pollaczek<T: Real>() -> RestrictionRecord<T> {
    record(
        FamilyId::MeixnerPollaczek,
        &[&[2], &[2, 4]],
        |a| FamilyInstance::MeixnerPollaczek {
            lambda: T::one() / a[0],
            phi: a[2].atan(),
        },
        |a| {
            let (a1, a3, a4) = (a[0], a[2], a[3]);
            let two = k::<T>(2.0);
            (
                -two_three_halves::<T>() * a1.sqrt() * a3,
                (two - a1) / (two * a1 * a3) - a4 / (k::<T>(4.0) * a1.sqrt() * a3),
            )
        },
        vec![alias(
            "(a1,0,a3,0)",
            |a| vec![a[0], T::zero(), a[2], T::zero()],
            shift_a4,
        )],
    )
}

fn w1_laguerre<T: Real>() -> RestrictionRecord<T> {
    record(
        FamilyId::Laguerre,
        &[&[2, 3], &[2, 3, 4]],
        |a| FamilyInstance::Laguerre {
            alpha: k::<T>(2.0) / a[0] - T::one(),
        },
        |a| {
            let (a1, a4) = (a[0], a[3]);
            let two = k::<T>(2.0);
            (
                sqrt2::<T>() * a1.sqrt(),
                T::one() - two / a1 + a4 / (two * a1.sqrt()),
            )
        },
        vec![alias(
            "(a1,0,0,0)",
            |a| vec![a[0], T::zero(), T::zero(), T::zero()],
            shift_a4,
        )],
    )
}

fn w1_hermite<T: Real>() -> RestrictionRecord<T> {
    // G = √(1+(1+a₂)²a₃²), H = (1+a₂)^{3/2}, J = 1+4a₂a₃², R = √(1+a₃²).
    fn parts<T: Real>(a: &[T]) -> (T, T, T, T) {
        let one = T::one();
        let (a2, a3) = (a[1], a[2]);
        let g = (one + (one + a2) * (one + a2) * a3 * a3).sqrt();
        let h = (one + a2).pow_half(3);
        let j = one + k::<T>(4.0) * a2 * a3 * a3;
        let r = (one + a3 * a3).sqrt();
        (g, h, j, r)
    }
    fn rho<T: Real>(a: &[T]) -> T {
        let (g, h, _, _) = parts(a);
        two_three_halves::<T>() * g / h
    }
    fn sigma<T: Real>(a: &[T]) -> T {
        let (g, h, j, _) = parts(a);
        a[3] * h * j / (k::<T>(4.0) * g)
    }
    fn rho2<T: Real>(a: &[T]) -> T {
        let (g, h, _, r) = parts(a);
        g / (h * r)
    }
    record(
        FamilyId::Hermite,
        &[
            &[1],
            &[1, 2],
            &[1, 3],
            &[1, 4],
            &[1, 2, 3],
            &[1, 2, 4],
            &[1, 3, 4],
            &[1, 2, 3, 4],
        ],
        |_| FamilyInstance::Hermite,
        |a| (rho(a), sigma(a)),
        vec![
            alias(
                "(0,a2,a3,0)",
                |a| vec![T::zero(), a[1], a[2], T::zero()],
                |a| {
                    let (_, _, j, _) = parts(a);
                    (T::one(), a[3] * j / sqrt2::<T>())
                },
            ),
            alias(
                "(0,a2,0,a4)",
                |a| vec![T::zero(), a[1], T::zero(), a[3]],
                |a| {
                    let (g, _, j, _) = parts(a);
                    (g, a[3] * (j - g) / (sqrt2::<T>() * g))
                },
            ),
            alias(
                "(0,0,a3,a4)",
                |a| vec![T::zero(), T::zero(), a[2], a[3]],
                |a| {
                    let (g, h, j, r) = parts(a);
                    (
                        rho2(a),
                        a[3] * h * r * j / (sqrt2::<T>() * g) - a[3] / sqrt2::<T>(),
                    )
                },
            ),
            alias(
                "(0,a2,0,0)",
                |a| vec![T::zero(), a[1], T::zero(), T::zero()],
                |a| {
                    let (g, _, j, _) = parts(a);
                    (g, a[3] * j / (sqrt2::<T>() * g))
                },
            ),
            alias(
                "(0,0,a3,0)",
                |a| vec![T::zero(), T::zero(), a[2], T::zero()],
                |a| {
                    let (g, h, j, r) = parts(a);
                    (rho2(a), a[3] * h * r * j / (sqrt2::<T>() * g))
                },
            ),
            alias(
                "(0,0,0,a4)",
                |a| vec![T::zero(), T::zero(), T::zero(), a[3]],
                |a| {
                    let (g, h, j, _) = parts(a);
                    (
                        rho(a) / two_three_halves::<T>(),
                        a[3] * h * j / (sqrt2::<T>() * g) - a[3] / sqrt2::<T>(),
                    )
                },
            ),
            alias(
                "(0,0,0,0)",
                |_| vec![T::zero(); 4],
                |a| {
                    (
                        rho(a) / two_three_halves::<T>(),
                        two_three_halves::<T>() * sigma(a),
                    )
                },
            ),
        ],
    )
}

// ---------------------------------------------------------------------------
// Wilson chart 2
// ---------------------------------------------------------------------------

fn w2_continuous_dual_hahn<T: Real>() -> RestrictionRecord<T> {
    record(
        FamilyId::ContinuousDualHahn,
        &[&[4]],
        |b| {
            let one = T::one();
            let two = k::<T>(2.0);
            let (b1, b2, b3) = (b[0], b[1], b[2]);
            let a = Complex::new(
                (one + b1) / (two * b1),
                (one + k::<T>(4.0) * b1 * b2) / (two * b1.powi(3) * b2 * b3),
            );
            let c = -(two + b1 * b3 + b1.powi(3) * b2 * b3 * b3 + b1.powi(4) * b2 * b3 * b3)
                / (two * b1.powi(4) * b2 * b3 * b3);
            FamilyInstance::ContinuousDualHahn {
                a,
                b: a.conj(),
                c: Complex::from_real(c),
            }
        },
        |b| {
            let (b1, b2, b3) = (b[0], b[1], b[2]);
            (
                b1.pow_half(9) * b2 * b3 * b3 / sqrt2::<T>(),
                -(T::one() + k::<T>(4.0) * b1 * b2)
                    / (k::<T>(4.0) * b1.powi(6) * b2 * b2 * b3 * b3),
            )
        },
        Vec::new(),
    )
}

fn w2_meixner_pollaczek<T: Real>() -> RestrictionRecord<T> {
    record(
        FamilyId::MeixnerPollaczek,
        &[&[2], &[2, 4]],
        |b| {
            let (b1, b3) = (b[0], b[2]);
            let two = k::<T>(2.0);
            FamilyInstance::MeixnerPollaczek {
                lambda: (T::one() + b1) / (two * b1),
                phi: (b1 * b3 / (two + b1 * b3)).atan(),
            }
        },
        |b| {
            let (b1, b3, b4) = (b[0], b[2], b[3]);
            (
                b1.pow_half(3) * b3 / sqrt2::<T>(),
                (T::one() - b1 * b4) / (b1 * b1 * b3),
            )
        },
        vec![alias(
            "(b1,0,b3,0)",
            |b| vec![b[0], T::zero(), b[2], T::zero()],
            |b| (T::one(), -b[0].sqrt() * b[3] / sqrt2::<T>()),
        )],
    )
}

fn w2_laguerre<T: Real>() -> RestrictionRecord<T> {
    fn sigma0<T: Real>(b: &[T]) -> T {
        two_three_halves::<T>() * b[0].sqrt() * b[1]
    }
    fn sigma1<T: Real>(b: &[T]) -> T {
        -b[0].sqrt() * b[3] / sqrt2::<T>()
    }
    record(
        FamilyId::Laguerre,
        &[&[3], &[2, 3], &[3, 4], &[2, 3, 4]],
        |b| FamilyInstance::Laguerre {
            alpha: T::one() / b[0],
        },
        |b| {
            let (b1, b2, b4) = (b[0], b[1], b[3]);
            (
                -b1.sqrt() / sqrt2::<T>(),
                b4 - k::<T>(4.0) * b2 - T::one() / b1,
            )
        },
        vec![
            alias(
                "(b1,0,0,b4)",
                |b| vec![b[0], T::zero(), T::zero(), b[3]],
                |b| (T::one(), sigma0(b)),
            ),
            alias(
                "(b1,b2,0,0)",
                |b| vec![b[0], b[1], T::zero(), T::zero()],
                |b| (T::one(), sigma1(b)),
            ),
            alias(
                "(b1,0,0,0)",
                |b| vec![b[0], T::zero(), T::zero(), T::zero()],
                |b| (T::one(), sigma0(b) + sigma1(b)),
            ),
        ],
    )
}

fn w2_hermite<T: Real>() -> RestrictionRecord<T> {
    record(
        FamilyId::Hermite,
        &[
            &[1],
            &[1, 2],
            &[1, 3],
            &[1, 4],
            &[1, 2, 3],
            &[1, 2, 4],
            &[1, 3, 4],
            &[1, 2, 3, 4],
        ],
        |_| FamilyInstance::Hermite,
        identity_scale,
        vec![alias("(0,0,0,0)", |_| vec![T::zero(); 4], identity_scale)],
    )
}

// ---------------------------------------------------------------------------
// Jacobi chart
// ---------------------------------------------------------------------------

fn j2_laguerre_alpha<T: Real>() -> RestrictionRecord<T> {
    record(
        FamilyId::Laguerre,
        &[&[2]],
        |p| FamilyInstance::Laguerre {
            alpha: T::one() / p[0],
        },
        |p| (-k::<T>(2.0) * p[0].sqrt(), -T::one() / p[0]),
        Vec::new(),
    )
}

fn j2_laguerre_beta<T: Real>() -> RestrictionRecord<T> {
    record(
        FamilyId::Laguerre,
        &[&[1]],
        |p| FamilyInstance::Laguerre {
            alpha: T::one() / p[1],
        },
        |p| (k::<T>(2.0) * p[1].sqrt(), -T::one() / p[1]),
        Vec::new(),
    )
}

fn j2_hermite<T: Real>() -> RestrictionRecord<T> {
    record(
        FamilyId::Hermite,
        &[&[1, 2]],
        |_| FamilyInstance::Hermite,
        |_| (two_three_halves::<T>(), T::zero()),
        Vec::new(),
    )
}
