//! Lifting primitives, integer plane rotations, and the 4-point
//! integer-to-integer DCT used on residual blocks.
//!
//! Every operation here is exactly invertible on integers. The trick is the
//! lifting step: add a *rounded* scaled copy of one element to the other.
//! Because the addend is recomputed from the untouched element, the inverse
//! subtracts the identical quantity and the rounding cancels out. Chaining
//! lifting steps builds plane rotations and butterflies, and those build the
//! DCT approximation, so the whole transform maps integers to integers and
//! back without loss.
//!
//! All rounding uses one normative rule: `rnd(z / 2^m) =
//! floor((z + 2^(m-1)) / 2^m)` for `m >= 1` (round half up, sign-correct via
//! arithmetic shift) and the identity for `m = 0`.

use thiserror::Error;

/// Internal integer domain of the lifting primitives. Inputs beyond this are
/// a caller contract violation; checked in debug builds only.
pub const MAX_LIFT_INPUT: i64 = 1 << 20;

/// Input domain of the 1D i2i DCT.
pub const MAX_DCT_INPUT: i32 = 1 << 15;

/// A 4-sample vector in the pixel/residual/coefficient domain.
pub type IntVec4 = [i32; 4];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TransformError {
    /// Rotation angle with `sin(alpha) = 0` has no lifting decomposition.
    #[error("rotation angle {0} is degenerate: sin(alpha) is zero")]
    DegenerateAngle(f64),
}

/// `rnd(z / 2^m)` per the normative rounding rule.
#[inline]
fn rnd_shift(z: i64, m: u32) -> i64 {
    if m == 0 {
        z
    } else {
        (z + (1i64 << (m - 1))) >> m
    }
}

/// `rnd(z / 2)`, the half-shift rounding used throughout the DCT network.
#[inline]
fn rnd_half(z: i32) -> i32 {
    (z + 1) >> 1
}

/// A rational lifting factor `k / 2^m`, applied with only an integer
/// multiply, add, and shift.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LiftingFactor {
    k: i64,
    m: u32,
}

impl LiftingFactor {
    pub const fn new(k: i64, m: u32) -> Self {
        Self { k, m }
    }

    /// Nearest `k / 2^shift` to `value`, canonicalized so exactly
    /// representable values end up with the smallest shift (integers get
    /// `m = 0` and therefore no rounding at all).
    pub fn approximate(value: f64, shift: u32) -> Self {
        let mut k = (value * f64::from(1u32 << shift)).round() as i64;
        let mut m = shift;
        while m > 0 && k % 2 == 0 {
            k /= 2;
            m -= 1;
        }
        if k == 0 {
            m = 0;
        }
        Self { k, m }
    }

    pub fn numerator(&self) -> i64 {
        self.k
    }

    pub fn shift(&self) -> u32 {
        self.m
    }

    pub fn value(&self) -> f64 {
        self.k as f64 / f64::from(1u32 << self.m)
    }

    /// `rnd(k * other / 2^m)`: the quantity a lifting step adds.
    #[inline]
    fn addend(&self, other: i64) -> i64 {
        rnd_shift(self.k * other, self.m)
    }
}

/// Which element of the pair a lifting step updates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LiftTarget {
    First,
    Second,
}

#[inline]
fn lift_step(pair: (i64, i64), f: LiftingFactor, target: LiftTarget, sign: i64) -> (i64, i64) {
    match target {
        LiftTarget::First => (pair.0 + sign * f.addend(pair.1), pair.1),
        LiftTarget::Second => (pair.0, pair.1 + sign * f.addend(pair.0)),
    }
}

/// One forward lifting step: add `rnd(k * other / 2^m)` to the target
/// element, leaving the other untouched.
pub fn lift_forward(pair: (i64, i64), f: LiftingFactor, target: LiftTarget) -> (i64, i64) {
    debug_assert!(pair.0.abs() <= MAX_LIFT_INPUT && pair.1.abs() <= MAX_LIFT_INPUT);
    lift_step(pair, f, target, 1)
}

/// Inverse lifting step: subtract out exactly what `lift_forward` added.
pub fn lift_inverse(pair: (i64, i64), f: LiftingFactor, target: LiftTarget) -> (i64, i64) {
    lift_step(pair, f, target, -1)
}

/// Exact parameters of a plane rotation decomposed into three lifting steps
/// with factors `p, u, p` where `p = (cos(alpha) - 1) / sin(alpha)` and
/// `u = sin(alpha)`.
#[derive(Debug, Clone, Copy)]
pub struct RotationParams {
    alpha: f64,
    p: f64,
    u: f64,
}

impl RotationParams {
    pub fn from_angle(alpha: f64) -> Result<Self, TransformError> {
        let s = alpha.sin();
        if s.abs() < 1e-9 {
            return Err(TransformError::DegenerateAngle(alpha));
        }
        Ok(Self {
            alpha,
            p: (alpha.cos() - 1.0) / s,
            u: s,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn u(&self) -> f64 {
        self.u
    }

    /// The 2x2 matrix of the three-lift composition with exact (unrounded)
    /// factors. Equals the rotation matrix of the angle; used by tests.
    pub fn lifted_matrix(&self) -> [[f64; 2]; 2] {
        // [1 p; 0 1] [1 0; u 1] [1 p; 0 1]
        let (p, u) = (self.p, self.u);
        [[1.0 + p * u, p * (2.0 + p * u)], [u, 1.0 + u * p]]
    }

    /// Quantize `p` and `u` to `k / 2^shift` (shift capped at 8) for use in
    /// the integer rotation.
    pub fn quantized(&self, shift: u32) -> QuantizedRotation {
        let shift = shift.min(8);
        QuantizedRotation {
            p: LiftingFactor::approximate(self.p, shift),
            u: LiftingFactor::approximate(self.u, shift),
        }
    }
}

/// Rotation factors quantized for integer lifting. The same value must be
/// used for the forward and the inverse rotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuantizedRotation {
    pub p: LiftingFactor,
    pub u: LiftingFactor,
}

/// Plane rotation as three lifting steps: `p` on the first element, `u` on
/// the second, `p` on the first again. Intermediates may exceed the input
/// domain; only the inputs are contract-checked.
pub fn rotate3_forward(pair: (i64, i64), rot: &QuantizedRotation) -> (i64, i64) {
    debug_assert!(pair.0.abs() <= MAX_LIFT_INPUT && pair.1.abs() <= MAX_LIFT_INPUT);
    let pair = lift_step(pair, rot.p, LiftTarget::First, 1);
    let pair = lift_step(pair, rot.u, LiftTarget::Second, 1);
    lift_step(pair, rot.p, LiftTarget::First, 1)
}

/// Exact inverse of [`rotate3_forward`] with the same quantized factors.
pub fn rotate3_inverse(pair: (i64, i64), rot: &QuantizedRotation) -> (i64, i64) {
    let pair = lift_step(pair, rot.p, LiftTarget::First, -1);
    let pair = lift_step(pair, rot.u, LiftTarget::Second, -1);
    lift_step(pair, rot.p, LiftTarget::First, -1)
}

/// Lifting butterfly: `(a, b) -> (s, d)` with `d = a - b` and
/// `s = b + rnd(d/2)`, i.e. `s` is the rounded average of the inputs.
///
/// Unlike the plain sum/difference butterfly this keeps the dynamic range of
/// `s` equal to the input range, which is what makes the DC output of the
/// DCT an average instead of a sum.
#[inline]
pub fn lb_forward(a: i32, b: i32) -> (i32, i32) {
    let d = a - b;
    let s = b + rnd_half(d);
    (s, d)
}

/// Inverse lifting butterfly: recovers `(a, b)` from `(s, d)` exactly.
#[inline]
pub fn lb_inverse(s: i32, d: i32) -> (i32, i32) {
    let b = s - rnd_half(d);
    let a = d + b;
    (a, b)
}

/// Forward 4-point i2i DCT.
///
/// Stage 1 splits the input into rounded averages and differences with
/// lifting butterflies; stage 2 produces the DC/X2 pair from the averages
/// with another butterfly, and the odd pair X1/X3 from the differences with
/// a two-lift rotation using factors 1/2:
///
/// ```text
/// (s0, d0) = lb(x0, x3)        (s1, d1) = lb(x1, x2)
/// (X0, X2) = lb(s0, s1)
/// X1 = d0 + rnd(d1 / 2)        X3 = d1 - rnd(X1 / 2)
/// ```
///
/// X0 is the rounded average of all four inputs; for 8-bit residual input
/// the outputs stay within |X0| <= 256, |X2| <= 511, |X1|, |X3| <= 1024.
pub fn i2i_dct4_forward(x: IntVec4) -> IntVec4 {
    debug_assert!(x.iter().all(|v| v.abs() <= MAX_DCT_INPUT));
    let (s0, d0) = lb_forward(x[0], x[3]);
    let (s1, d1) = lb_forward(x[1], x[2]);
    let (x0, x2) = lb_forward(s0, s1);
    let x1 = d0 + rnd_half(d1);
    let x3 = d1 - rnd_half(x1);
    [x0, x1, x2, x3]
}

/// Exact inverse of [`i2i_dct4_forward`].
pub fn i2i_dct4_inverse(coeff: IntVec4) -> IntVec4 {
    let d1 = coeff[3] + rnd_half(coeff[1]);
    let d0 = coeff[1] - rnd_half(d1);
    let (s0, s1) = lb_inverse(coeff[0], coeff[2]);
    let (x0, x3) = lb_inverse(s0, d0);
    let (x1, x2) = lb_inverse(s1, d1);
    [x0, x1, x2, x3]
}

/// Separable 2D i2i DCT on a residual block: 1D transform along each row,
/// then along each column of the result.
pub fn i2i_dct4_2d_forward(block: &crate::Block4x4) -> crate::Block4x4 {
    debug_assert_eq!(block.stage(), crate::Stage::Residual);
    let mut out = block.retagged(crate::Stage::Coeff);
    for r in 0..4 {
        out.set_row(r, i2i_dct4_forward(out.row(r)));
    }
    for c in 0..4 {
        out.set_col(c, i2i_dct4_forward(out.col(c)));
    }
    out
}

/// Inverse 2D i2i DCT: 1D inverse along each column, then each row.
pub fn i2i_dct4_2d_inverse(block: &crate::Block4x4) -> crate::Block4x4 {
    debug_assert_eq!(block.stage(), crate::Stage::Coeff);
    let mut out = block.retagged(crate::Stage::Residual);
    for c in 0..4 {
        out.set_col(c, i2i_dct4_inverse(out.col(c)));
    }
    for r in 0..4 {
        out.set_row(r, i2i_dct4_inverse(out.row(r)));
    }
    out
}

/// Orthonormal floating-point 4-point DCT-II. Test oracle for approximation
/// quality and energy compaction; never part of the coding path.
pub fn dct4_float_reference(x: [f64; 4]) -> [f64; 4] {
    let mut out = [0.0; 4];
    for (k, o) in out.iter_mut().enumerate() {
        let scale = if k == 0 { 0.5 } else { std::f64::consts::FRAC_1_SQRT_2 };
        let mut acc = 0.0;
        for (n, &v) in x.iter().enumerate() {
            acc += v * (std::f64::consts::PI * (2 * n + 1) as f64 * k as f64 / 8.0).cos();
        }
        *o = scale * acc;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Block4x4, Stage};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const HALF: LiftingFactor = LiftingFactor::new(1, 1);

    #[test]
    fn lift_forward_examples() {
        assert_eq!(lift_forward((3, 5), HALF, LiftTarget::First), (6, 5));
        assert_eq!(lift_forward((42, 0), HALF, LiftTarget::First), (42, 0));
        // rnd(-5/2) = floor(-4/2) = -2
        assert_eq!(lift_forward((-7, -5), HALF, LiftTarget::First), (-9, -5));
    }

    #[test]
    fn lift_inverse_examples() {
        assert_eq!(lift_inverse((6, 5), HALF, LiftTarget::First), (3, 5));
        assert_eq!(lift_inverse((7, 0), HALF, LiftTarget::First), (7, 0));
    }

    #[test]
    fn lift_round_trip_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100_000 {
            let pair = (
                rng.random_range(-(1i64 << 16)..=(1i64 << 16)),
                rng.random_range(-(1i64 << 16)..=(1i64 << 16)),
            );
            let f = LiftingFactor::new(rng.random_range(-255..=255), rng.random_range(0..=8));
            let t = if rng.random::<bool>() { LiftTarget::First } else { LiftTarget::Second };
            assert_eq!(lift_inverse(lift_forward(pair, f, t), f, t), pair);
        }
    }

    #[test]
    fn rounding_rule_is_half_up_for_negatives() {
        // rnd(z/2): -5 -> -2, -4 -> -2, -3 -> -1, 3 -> 2, 5 -> 3
        assert_eq!(rnd_shift(-5, 1), -2);
        assert_eq!(rnd_shift(-4, 1), -2);
        assert_eq!(rnd_shift(-3, 1), -1);
        assert_eq!(rnd_shift(3, 1), 2);
        assert_eq!(rnd_shift(5, 1), 3);
        assert_eq!(rnd_shift(7, 0), 7);
    }

    #[test]
    fn rotation_params_reject_degenerate_angle() {
        assert!(RotationParams::from_angle(0.0).is_err());
        assert!(RotationParams::from_angle(std::f64::consts::PI).is_err());
        assert!(RotationParams::from_angle(std::f64::consts::FRAC_PI_2).is_ok());
    }

    #[test]
    fn three_lift_composition_equals_rotation_matrix() {
        for &alpha in &[0.3, 1.0, std::f64::consts::FRAC_PI_2, 2.5, -1.2, 3.0] {
            let rp = RotationParams::from_angle(alpha).unwrap();
            let m = rp.lifted_matrix();
            let expect = [
                [alpha.cos(), -alpha.sin()],
                [alpha.sin(), alpha.cos()],
            ];
            for r in 0..2 {
                for c in 0..2 {
                    assert!(
                        (m[r][c] - expect[r][c]).abs() < 1e-12,
                        "alpha={alpha} entry ({r},{c}): {} vs {}",
                        m[r][c],
                        expect[r][c]
                    );
                }
            }
        }
    }

    #[test]
    fn quarter_turn_is_exact_integer_rotation() {
        let rp = RotationParams::from_angle(std::f64::consts::FRAC_PI_2).unwrap();
        let rot = rp.quantized(8);
        // p = -1 and u = 1 are exactly representable, so no rounding at all.
        assert_eq!(rot.p, LiftingFactor::new(-1, 0));
        assert_eq!(rot.u, LiftingFactor::new(1, 0));
        assert_eq!(rotate3_forward((3, 4), &rot), (-4, 3));
        assert_eq!(rotate3_inverse((-4, 3), &rot), (3, 4));
        assert_eq!(rotate3_forward((0, 0), &rot), (0, 0));
    }

    #[test]
    fn rotation_tracks_float_rotation_within_two() {
        let alpha = 3.0 * std::f64::consts::PI / 8.0;
        let rot = RotationParams::from_angle(alpha).unwrap().quantized(8);
        let (x, y) = rotate3_forward((100, 0), &rot);
        let fx = (100.0 * alpha.cos()).round() as i64;
        let fy = (100.0 * alpha.sin()).round() as i64;
        assert_eq!((fx, fy), (38, 92));
        assert!((x - fx).abs() <= 2 && (y - fy).abs() <= 2, "got ({x}, {y})");
    }

    #[test]
    fn rotation_round_trip_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..100_000 {
            let alpha = rng.random_range(0.1..3.0_f64);
            let rp = match RotationParams::from_angle(alpha) {
                Ok(rp) => rp,
                Err(_) => continue,
            };
            let rot = rp.quantized(rng.random_range(0..=8));
            let pair = (
                rng.random_range(-(1i64 << 16)..=(1i64 << 16)),
                rng.random_range(-(1i64 << 16)..=(1i64 << 16)),
            );
            assert_eq!(rotate3_inverse(rotate3_forward(pair, &rot), &rot), pair);
        }
    }

    #[test]
    fn lifting_butterfly_examples() {
        assert_eq!(lb_forward(5, 3), (4, 2));
        assert_eq!(lb_forward(0, 0), (0, 0));
        // s = 4 + rnd(3/2) = 6
        assert_eq!(lb_forward(7, 4), (6, 3));
        assert_eq!(lb_inverse(6, 3), (7, 4));
        assert_eq!(lb_inverse(4, 2), (5, 3));
    }

    /// Step-by-step evaluation of the DCT network with the generic lifting
    /// primitives. Independent route used to cross-check the specialized
    /// add-and-shift implementation.
    fn dct4_via_generic_lifts(x: IntVec4) -> IntVec4 {
        let wide = |v: i32| v as i64;
        // stage 1 butterflies as lift pairs: d = a - b is a lift with k=-1,
        // m=0 on the first element; s = b + rnd(d/2) lifts the second.
        let minus_one = LiftingFactor::new(-1, 0);
        let bf = |a: i64, b: i64| {
            let (d, _) = lift_forward((a, b), minus_one, LiftTarget::First);
            let (_, s) = lift_forward((d, b), HALF, LiftTarget::Second);
            (s, d)
        };
        let (s0, d0) = bf(wide(x[0]), wide(x[3]));
        let (s1, d1) = bf(wide(x[1]), wide(x[2]));
        let (dc, x2) = bf(s0, s1);
        let (x1, _) = lift_forward((d0, d1), HALF, LiftTarget::First);
        // the subtractive lift is a forward use of the inverse step
        let (_, x3) = lift_inverse((x1, d1), HALF, LiftTarget::Second);
        [dc as i32, x1 as i32, x2 as i32, x3 as i32]
    }

    #[test]
    fn dct4_matches_generic_lift_composition() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..20_000 {
            let x: IntVec4 = core::array::from_fn(|_| rng.random_range(-255..=255));
            assert_eq!(i2i_dct4_forward(x), dct4_via_generic_lifts(x));
        }
    }

    #[test]
    fn dct4_constant_input_yields_dc_only() {
        for c in [-255, -128, -1, 0, 1, 7, 127, 255] {
            assert_eq!(i2i_dct4_forward([c; 4]), [c, 0, 0, 0]);
            assert_eq!(i2i_dct4_inverse([c, 0, 0, 0]), [c; 4]);
        }
    }

    #[test]
    fn dct4_fixed_vector() {
        // Worked by hand through the network:
        //   d0 = -30, d1 = -10, s0 = s1 = 25 => X0 = 25, X2 = 0
        //   X1 = -30 + rnd(-10/2) = -35, X3 = -10 - rnd(-35/2) = 7
        assert_eq!(i2i_dct4_forward([10, 20, 30, 40]), [25, -35, 0, 7]);
        assert_eq!(i2i_dct4_inverse([25, -35, 0, 7]), [10, 20, 30, 40]);
    }

    #[test]
    fn dct4_round_trip_corner_grid() {
        // Exhaustive over the 7^4 grid of extreme/sentinel values.
        let grid = [-255, -128, -1, 0, 1, 127, 255];
        for &a in &grid {
            for &b in &grid {
                for &c in &grid {
                    for &d in &grid {
                        let x = [a, b, c, d];
                        assert_eq!(i2i_dct4_inverse(i2i_dct4_forward(x)), x);
                    }
                }
            }
        }
    }

    #[test]
    fn dct4_round_trip_random_vectors() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for _ in 0..100_000 {
            let x: IntVec4 = core::array::from_fn(|_| rng.random_range(-MAX_DCT_INPUT..=MAX_DCT_INPUT));
            assert_eq!(i2i_dct4_inverse(i2i_dct4_forward(x)), x);
        }
    }

    #[test]
    fn dct4_1d_range_bounds_for_8bit_residuals() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..100_000 {
            let x: IntVec4 = core::array::from_fn(|_| rng.random_range(-255..=255));
            let y = i2i_dct4_forward(x);
            assert!(y[0].abs() <= 256 && y[2].abs() <= 511);
            assert!(y[1].abs() <= 1024 && y[3].abs() <= 1024);
        }
    }

    #[test]
    fn dct4_2d_round_trip_and_range() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        let mut max_coeff = 0i32;
        for _ in 0..10_000 {
            let b = Block4x4::new(
                core::array::from_fn(|_| rng.random_range(-255..=255)),
                Stage::Residual,
            );
            let coeff = i2i_dct4_2d_forward(&b);
            max_coeff = max_coeff.max(coeff.samples().iter().map(|v| v.abs()).max().unwrap());
            assert_eq!(i2i_dct4_2d_inverse(&coeff), b);
        }
        assert!(max_coeff <= 8191, "max 2D coefficient {max_coeff}");
    }

    #[test]
    fn dct4_2d_constant_block_is_single_dc() {
        let b = Block4x4::constant(77, Stage::Residual);
        let coeff = i2i_dct4_2d_forward(&b);
        assert_eq!(coeff.get(0, 0), 77);
        for i in 1..16 {
            assert_eq!(coeff.samples()[i], 0);
        }
        let z = Block4x4::zero(Stage::Residual);
        assert_eq!(i2i_dct4_2d_forward(&z).samples(), &[0; 16]);
    }

    #[test]
    fn float_reference_dc_and_parseval() {
        let y = dct4_float_reference([1.0; 4]);
        assert!((y[0] - 2.0).abs() < 1e-12);
        for v in &y[1..] {
            assert!(v.abs() < 1e-12);
        }

        let mut rng = ChaCha8Rng::seed_from_u64(47);
        for _ in 0..1_000 {
            let x: [f64; 4] = core::array::from_fn(|_| rng.random_range(-100.0..100.0));
            let y = dct4_float_reference(x);
            let ex: f64 = x.iter().map(|v| v * v).sum();
            let ey: f64 = y.iter().map(|v| v * v).sum();
            assert!((ex - ey).abs() < 1e-9 * ex.max(1.0));
        }
    }

    #[test]
    fn float_reference_alternating_energy_in_highest_bin() {
        let y = dct4_float_reference([1.0, -1.0, 1.0, -1.0]);
        assert!(y[0].abs() < 1e-12 && y[2].abs() < 1e-12);
        // The alternating vector is not a pure DCT-II basis vector; its
        // energy concentrates in (but is not exclusive to) the highest bin.
        assert!(y[3].abs() > y[1].abs());
        assert!(y[3] * y[3] > 0.8 * 4.0);
    }

    /// AR(1) 4-vectors: the stats backdrop for approximation-quality tests.
    fn ar1_vectors(n: usize, rho: f64, amp: f64, seed: u64) -> Vec<IntVec4> {
        use rand_distr::{Distribution, StandardNormal};
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let noise = (1.0 - rho * rho).sqrt();
        (0..n)
            .map(|_| {
                let mut v = [0f64; 4];
                v[0] = StandardNormal.sample(&mut rng);
                for i in 1..4 {
                    let e: f64 = StandardNormal.sample(&mut rng);
                    v[i] = rho * v[i - 1] + noise * e;
                }
                core::array::from_fn(|i| (amp * v[i]).round() as i32)
            })
            .collect()
    }

    #[test]
    fn energy_compaction_and_dct_likeness_on_correlated_input() {
        let vectors = ar1_vectors(10_000, 0.95, 64.0, 53);
        let mut mean_abs = [0f64; 4];
        let mut sums = [[0f64; 5]; 4]; // per-coeff: sum i, sum f, sum i*f, sum i^2, sum f^2
        for x in &vectors {
            let yi = i2i_dct4_forward(*x);
            let yf = dct4_float_reference(core::array::from_fn(|i| x[i] as f64));
            for k in 0..4 {
                mean_abs[k] += yi[k].abs() as f64;
                let (a, b) = (yi[k] as f64, yf[k]);
                sums[k][0] += a;
                sums[k][1] += b;
                sums[k][2] += a * b;
                sums[k][3] += a * a;
                sums[k][4] += b * b;
            }
        }
        let n = vectors.len() as f64;
        for m in &mut mean_abs {
            *m /= n;
        }
        assert!(mean_abs[0] >= mean_abs[2], "E|X0| >= E|X2|: {mean_abs:?}");
        assert!(
            mean_abs[0] >= mean_abs[1] && mean_abs[1] >= mean_abs[3],
            "E|X0| >= E|X1| >= E|X3|: {mean_abs:?}"
        );
        for k in 0..4 {
            let cov = sums[k][2] / n - sums[k][0] / n * (sums[k][1] / n);
            let va = sums[k][3] / n - (sums[k][0] / n).powi(2);
            let vb = sums[k][4] / n - (sums[k][1] / n).powi(2);
            let corr = (cov / (va * vb).sqrt()).abs();
            assert!(corr > 0.9, "coefficient {k}: |corr| = {corr:.4}");
        }
    }
}
