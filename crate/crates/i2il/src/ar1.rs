//! Seeded separable AR(1) random fields.
//!
//! These planes give the benchmark a correlation dial: the lag-1
//! autocorrelation along both axes approaches `rho`, so sweeps over `rho`
//! emulate content ranging from near-noise to strongly correlated. The
//! generator is ChaCha8 seeded from the spec, so the same spec reproduces
//! the same plane on every run of a given build.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use thiserror::Error;

use crate::plane::ImagePlane;

#[derive(Debug, Clone, PartialEq, Error)]
#[error("rho {0} outside [0, 1)")]
pub struct RhoOutOfRange(pub f64);

/// Parameters of a generated plane. Equal specs produce identical planes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ar1Spec {
    pub width: usize,
    pub height: usize,
    /// Lag-1 correlation in `[0, 1)`.
    pub rho: f64,
    /// Driving-noise standard deviation. The marginal standard deviation of
    /// the field is roughly `sigma / (1 - rho^2)`.
    pub sigma: f64,
    pub seed: u64,
}

/// Generate the field
/// `x[r][c] = rho*x[r][c-1] + rho*x[r-1][c] - rho^2*x[r-1][c-1] + sigma*n`
/// (zero outside the plane), offset by 128 and clipped to `[0, 255]`.
pub fn gen_ar1(spec: &Ar1Spec) -> Result<ImagePlane, RhoOutOfRange> {
    if !(0.0..1.0).contains(&spec.rho) {
        return Err(RhoOutOfRange(spec.rho));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let (w, h, rho) = (spec.width, spec.height, spec.rho);

    let mut plane = ImagePlane::new(w, h);
    let mut prev_row = vec![0f64; w];
    let mut row = vec![0f64; w];
    for y in 0..h {
        for x in 0..w {
            let left = if x > 0 { row[x - 1] } else { 0.0 };
            let up = prev_row[x];
            let up_left = if x > 0 { prev_row[x - 1] } else { 0.0 };
            let noise: f64 = StandardNormal.sample(&mut rng);
            row[x] = rho * left + rho * up - rho * rho * up_left + spec.sigma * noise;
            plane.set(x, y, ((row[x] + 128.0).round()).clamp(0.0, 255.0) as u8);
        }
        std::mem::swap(&mut prev_row, &mut row);
    }
    Ok(plane)
}

/// Sample lag-1 horizontal autocorrelation of a plane; test statistic for
/// the generator.
pub fn lag1_autocorrelation(plane: &ImagePlane) -> f64 {
    let n = (plane.width() - 1) * plane.height();
    let mean = plane.samples().iter().map(|&v| f64::from(v)).sum::<f64>()
        / plane.samples().len() as f64;
    let mut cov = 0.0;
    let mut var = 0.0;
    for y in 0..plane.height() {
        for x in 0..plane.width() {
            let a = f64::from(plane.get(x, y)) - mean;
            var += a * a;
            if x + 1 < plane.width() {
                let b = f64::from(plane.get(x + 1, y)) - mean;
                cov += a * b;
            }
        }
    }
    (cov / n as f64) / (var / plane.samples().len() as f64)
}
