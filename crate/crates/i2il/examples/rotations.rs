//! Plane rotations from three lifting steps.
//!
//! A rotation by any angle factors into three shear (lifting) steps whose
//! rounded integer versions are still exactly invertible. This example
//! rotates integer points by a sweep of angles, compares against the real
//! rotation, and undoes everything bit exactly.
//!
//! Run with `cargo run --example rotations`.

use i2il::transforms::{rotate3_forward, rotate3_inverse, RotationParams};

fn main() {
    let point = (240i64, -75i64);
    println!("rotating {point:?} with factors quantized to k/256:");
    println!(
        "{:>8} {:>16} {:>16} {:>10}",
        "angle", "integer", "exact", "restored"
    );
    for deg in [15, 30, 45, 67, 90, 120, 150] {
        let alpha = f64::from(deg).to_radians();
        let rp = RotationParams::from_angle(alpha).expect("sin nonzero");
        let rot = rp.quantized(8);
        let (xi, yi) = rotate3_forward(point, &rot);
        let xf = point.0 as f64 * alpha.cos() - point.1 as f64 * alpha.sin();
        let yf = point.0 as f64 * alpha.sin() + point.1 as f64 * alpha.cos();
        let back = rotate3_inverse((xi, yi), &rot);
        println!(
            "{deg:>7}° ({xi:>6}, {yi:>6}) ({xf:>7.1}, {yf:>7.1}) {:>10}",
            if back == point { "exact" } else { "BROKEN" }
        );
    }

    // 90 degrees is special: p = -1 and u = 1 are integers, so the integer
    // rotation is not an approximation at all.
    let rot = RotationParams::from_angle(std::f64::consts::FRAC_PI_2)
        .unwrap()
        .quantized(8);
    println!();
    println!(
        "90° factors reduce to p = {}/{}, u = {}/{} -> rotation is exact: {:?} -> {:?}",
        rot.p.numerator(),
        1 << rot.p.shift(),
        rot.u.numerator(),
        1 << rot.u.shift(),
        (3, 4),
        rotate3_forward((3, 4), &rot)
    );
}
