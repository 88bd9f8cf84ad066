//! Deterministic synthetic test images.
//!
//! The benchmark and the test suites need a small corpus with diverse
//! structure: smooth gradients (planar prediction territory), rectangles
//! with hard horizontal/vertical edges (RDPCM territory), curved contours
//! (neither), and textured regions (transform territory). Everything is
//! generated from fixed seeds, so no binary assets live in the repository.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ar1::{gen_ar1, Ar1Spec};
use crate::plane::ImagePlane;

/// Smooth diagonal ramp with a low-frequency ripple.
pub fn gradient(width: usize, height: usize) -> ImagePlane {
    let mut plane = ImagePlane::new(width, height);
    for y in 0..height {
        for x in 0..width {
            let v = 40.0 + 0.55 * x as f64 + 0.35 * y as f64
                + 18.0 * (x as f64 / 37.0).sin() * (y as f64 / 29.0).cos();
            plane.set(x, y, v.round().clamp(0.0, 255.0) as u8);
        }
    }
    plane
}

/// Overlapping axis-aligned rectangles of random intensity.
pub fn rectangles(width: usize, height: usize, seed: u64) -> ImagePlane {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut plane = ImagePlane::from_samples(width, height, vec![120; width * height]);
    for _ in 0..24 {
        let x0 = rng.random_range(0..width.saturating_sub(8).max(1));
        let y0 = rng.random_range(0..height.saturating_sub(8).max(1));
        let w = rng.random_range(8..=width / 2);
        let h = rng.random_range(8..=height / 2);
        let v = rng.random_range(20..=235u8);
        for y in y0..(y0 + h).min(height) {
            for x in x0..(x0 + w).min(width) {
                plane.set(x, y, v);
            }
        }
    }
    plane
}

/// Filled circles over a bright background; curved edges in every
/// direction.
pub fn disks(width: usize, height: usize, seed: u64) -> ImagePlane {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut plane = ImagePlane::from_samples(width, height, vec![200; width * height]);
    for _ in 0..14 {
        let cy = rng.random_range(0..height) as i64;
        let cx = rng.random_range(0..width) as i64;
        let rad = rng.random_range(6..=(height / 3).max(7)) as i64;
        let v = rng.random_range(30..=225u8);
        for y in 0..height as i64 {
            for x in 0..width as i64 {
                if (y - cy).pow(2) + (x - cx).pow(2) < rad * rad {
                    plane.set(x as usize, y as usize, v);
                }
            }
        }
    }
    plane
}

/// Moderately correlated AR(1) texture.
pub fn texture(width: usize, height: usize, seed: u64) -> ImagePlane {
    let rho = 0.8;
    gen_ar1(&Ar1Spec {
        width,
        height,
        rho,
        sigma: 24.0 * (1.0 - rho * rho),
        seed,
    })
    .expect("rho in range")
}

/// Composite: gradient background, flat rectangles, a dark disk, and a
/// noise patch in one corner.
pub fn scene(width: usize, height: usize, seed: u64) -> ImagePlane {
    let mut plane = gradient(width, height);
    for y in height / 8..height / 3 {
        for x in width / 10..width / 2 {
            plane.set(x, y, 70);
        }
    }
    for y in height / 2..height / 2 + height / 5 {
        for x in width / 3..width / 3 + width / 4 {
            plane.set(x, y, 180);
        }
    }
    let (cy, cx, rad) = (3 * height as i64 / 4, 3 * width as i64 / 4, height as i64 / 6);
    for y in 0..height as i64 {
        for x in 0..width as i64 {
            if (y - cy).pow(2) + (x - cx).pow(2) < rad * rad {
                plane.set(x as usize, y as usize, 35);
            }
        }
    }
    let patch = gen_ar1(&Ar1Spec {
        width: width / 4,
        height: height / 4,
        rho: 0.6,
        sigma: 10.0,
        seed: seed + 1,
    })
    .expect("rho in range");
    for y in 0..height / 4 {
        for x in 0..width / 4 {
            plane.set(width - width / 4 + x, y, patch.get(x, y));
        }
    }
    plane
}

/// The diverse fixed corpus the benchmark examples and test suites share.
pub fn standard_corpus(size: usize) -> Vec<(String, ImagePlane)> {
    vec![
        ("gradient".into(), gradient(size, size)),
        ("rectangles".into(), rectangles(size, size, 7)),
        ("disks".into(), disks(size, size, 11)),
        ("texture".into(), texture(size, size, 21)),
        ("scene".into(), scene(size, size, 33)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_deterministic_and_sized() {
        let a = standard_corpus(64);
        let b = standard_corpus(64);
        assert_eq!(a.len(), 5);
        for ((na, pa), (nb, pb)) in a.iter().zip(&b) {
            assert_eq!(na, nb);
            assert_eq!(pa, pb);
            assert_eq!((pa.width(), pa.height()), (64, 64));
        }
    }

    #[test]
    fn generators_use_full_intensity_range() {
        for (name, plane) in standard_corpus(96) {
            let lo = *plane.samples().iter().min().unwrap();
            let hi = *plane.samples().iter().max().unwrap();
            assert!(hi - lo > 40, "{name} is nearly flat ({lo}..{hi})");
        }
    }
}
