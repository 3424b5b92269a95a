//! Seeded samplers for chart points.
//!
//! Coordinates are drawn log-uniformly on `(10⁻³, 1]` as `10^{−3u}` with `u`
//! uniform on `[0, 1)`, and rejected against the chart's interior
//! constraints. The draws are made in `f64` and converted, so both backends
//! see the same points.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::charts::{BoundaryFace, ChartId, ChartPoint};
use crate::error::{AskeyError, Result};
use crate::scalar::Real;

/// Decades spanned by the log-uniform coordinate distribution.
pub const LOG_RANGE: f64 = 3.0;

/// Rejections after which a sampler gives up.
pub const MAX_REJECTIONS: usize = 1_000_000;

/// Endless stream of seeded points of a chart whose zero set is exactly
/// `face` (the interior for [`BoundaryFace::EMPTY`]).
#[derive(Debug, Clone)]
pub struct InteriorSampler {
    chart: ChartId,
    face: BoundaryFace,
    rng: ChaCha8Rng,
    rejections: usize,
}

impl InteriorSampler {
    /// Interior points of `chart`.
    pub fn new(chart: ChartId, seed: u64) -> Self {
        Self::on_face(chart, BoundaryFace::EMPTY, seed)
    }

    /// Points of `chart` with zero set `face`.
    pub fn on_face(chart: ChartId, face: BoundaryFace, seed: u64) -> Self {
        InteriorSampler {
            chart,
            face,
            rng: ChaCha8Rng::seed_from_u64(seed),
            rejections: 0,
        }
    }

    /// Draw raw coordinates (not yet validated).
    pub fn draw(&mut self) -> Vec<f64> {
        (0..self.chart.dim())
            .map(|i| {
                if self.face.contains(i + 1) {
                    0.0
                } else {
                    let u: f64 = self.rng.gen();
                    10f64.powf(-LOG_RANGE * u)
                }
            })
            .collect()
    }

    /// Rejections so far.
    pub fn rejections(&self) -> usize {
        self.rejections
    }

    /// Next point satisfying the chart constraints and `accept`.
    ///
    /// # Errors
    ///
    /// [`AskeyError::SamplingExhausted`] once [`MAX_REJECTIONS`] draws have
    /// been rejected in total.
    pub fn next_where<T: Real>(
        &mut self,
        mut accept: impl FnMut(&ChartPoint<T>) -> bool,
    ) -> Result<ChartPoint<T>> {
        loop {
            let raw = self.draw();
            if let Ok(p) = ChartPoint::new(self.chart, raw.into_iter().map(T::from_f64).collect()) {
                if p.zero_set() == self.face && accept(&p) {
                    return Ok(p);
                }
            }
            self.rejections += 1;
            if self.rejections >= MAX_REJECTIONS {
                return Err(AskeyError::SamplingExhausted {
                    what: format!("{} points on face {}", self.chart, self.face),
                    rejections: self.rejections,
                });
            }
        }
    }

    /// Next point satisfying the chart constraints.
    ///
    /// # Errors
    ///
    /// As [`InteriorSampler::next_where`].
    pub fn next_point<T: Real>(&mut self) -> Result<ChartPoint<T>> {
        self.next_where(|_| true)
    }
}

/// `count` seeded interior points of `chart`.
///
/// ```
/// use askey_core::charts::ChartId;
/// use askey_core::harness::sample_interior;
///
/// let pts = sample_interior::<f64>(ChartId::Racah1, 1, 3).unwrap();
/// assert_eq!(pts.len(), 3);
/// for p in &pts {
///     let t = &p.coords;
///     assert!(t[0] * t[2] < 1.0 && t[1] * t[3] < 1.0);
/// }
/// ```
///
/// # Errors
///
/// [`AskeyError::InvalidInput`] if `count` is 0;
/// [`AskeyError::SamplingExhausted`] after [`MAX_REJECTIONS`] rejections.
pub fn sample_interior<T: Real>(
    chart: ChartId,
    seed: u64,
    count: usize,
) -> Result<Vec<ChartPoint<T>>> {
    sample_face(chart, BoundaryFace::EMPTY, seed, count)
}

/// `count` seeded points of `chart` whose zero set is exactly `face`; the
/// remaining coordinates follow the interior distribution.
///
/// # Errors
///
/// As [`sample_interior`]; [`AskeyError::InvalidInput`] if `face` is not a
/// face of `chart`.
pub fn sample_face<T: Real>(
    chart: ChartId,
    face: BoundaryFace,
    seed: u64,
    count: usize,
) -> Result<Vec<ChartPoint<T>>> {
    if count == 0 {
        return Err(AskeyError::InvalidInput(
            "sample count must be at least 1".into(),
        ));
    }
    if !chart.faces().contains(&face) {
        return Err(AskeyError::InvalidInput(format!(
            "{face} is not a face of {chart}"
        )));
    }
    let mut s = InteriorSampler::on_face(chart, face, seed);
    (0..count).map(|_| s.next_point()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn racah3_constraints_hold() {
        for p in sample_interior::<f64>(ChartId::Racah3, 7, 10).unwrap() {
            let u = &p.coords;
            assert!(u[1] * u[1] * u[2] * u[3] < 1.0);
            assert!(u[1] * u[2] * (u[0] - u[1]) < 1.0);
        }
    }

    #[test]
    fn jacobi2d_range() {
        for p in sample_interior::<f64>(ChartId::Jacobi2D, 3, 5).unwrap() {
            assert!(p.coords.iter().all(|&c| c > 1e-3 && c <= 1.0));
        }
    }

    #[test]
    fn deterministic_and_backend_independent() {
        let a = sample_interior::<f64>(ChartId::Wilson2, 9, 4).unwrap();
        let b = sample_interior::<f64>(ChartId::Wilson2, 9, 4).unwrap();
        assert_eq!(a, b);
        let h = sample_interior::<crate::scalar::HighPrec>(ChartId::Wilson2, 9, 4).unwrap();
        for (p, q) in a.iter().zip(&h) {
            assert_eq!(p.coords, q.coords_f64());
        }
    }

    #[test]
    fn face_points_have_exact_zero_set() {
        let f = BoundaryFace::from_indices(&[1, 3]);
        for p in sample_face::<f64>(ChartId::Racah1, f, 5, 6).unwrap() {
            assert_eq!(p.zero_set(), f);
        }
        assert!(sample_interior::<f64>(ChartId::Racah1, 1, 0).is_err());
    }
}
