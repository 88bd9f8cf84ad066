//! The i2i DCT next to its floating-point twin.
//!
//! Shows that the integer transform tracks the real DCT closely, keeps the
//! DC coefficient an average instead of a sum, and inverts exactly where the
//! float transform would accumulate rounding error.
//!
//! Run with `cargo run --example transform_roundtrip`.

use i2il::transforms::{
    dct4_float_reference, i2i_dct4_2d_forward, i2i_dct4_2d_inverse, i2i_dct4_forward,
    i2i_dct4_inverse,
};
use i2il::{Block4x4, Stage};

fn main() {
    println!("1D transform on a few vectors:");
    for x in [[10, 20, 30, 40], [100, 100, 100, 100], [7, -3, 12, -8], [255, 0, 255, 0]] {
        let yi = i2i_dct4_forward(x);
        let yf = dct4_float_reference(x.map(f64::from));
        let back = i2i_dct4_inverse(yi);
        println!("  x      = {x:?}");
        println!("  i2i    = {yi:?}");
        println!(
            "  float  = [{:7.2}, {:7.2}, {:7.2}, {:7.2}]  (orthonormal scale)",
            yf[0], yf[1], yf[2], yf[3]
        );
        println!("  invert = {back:?}  exact: {}", back == x);
        println!();
    }

    // 2D: a residual block with a diagonal edge
    let mut res = Block4x4::zero(Stage::Residual);
    for r in 0..4 {
        for c in 0..4 {
            res.set(r, c, if r + c >= 3 { 24 } else { -13 });
        }
    }
    let coeff = i2i_dct4_2d_forward(&res);
    let back = i2i_dct4_2d_inverse(&coeff);
    println!("2D transform of a diagonal-edge residual block:");
    for r in 0..4 {
        println!("  {:>12?}   ->   {:?}", res.row(r), coeff.row(r));
    }
    println!("  exact round trip: {}", back == res);
}
