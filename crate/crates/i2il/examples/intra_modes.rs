//! The six 4x4 intra predictors on one set of reference samples.
//!
//! Run with `cargo run --example intra_modes`.

use i2il::intra::{predict, IntraMode, ReferenceSamples};

fn main() {
    // A bright top edge fading right, a dark left edge fading down.
    let refs = ReferenceSamples {
        top: [200, 190, 180, 170, 160, 150, 140, 130],
        left: [90, 70, 50, 30],
        corner: 210,
        top_available: true,
        left_available: true,
    };

    println!("references:");
    println!("  corner {}  top {:?}", refs.corner, refs.top);
    println!("  left {:?}", refs.left);
    println!();

    for mode in IntraMode::ALL {
        println!("{mode:?} (mode {}):", mode.bits());
        let pred = predict(&refs, mode);
        for r in 0..4 {
            let row = pred.row(r);
            println!("  {:>4} {:>4} {:>4} {:>4}", row[0], row[1], row[2], row[3]);
        }
        println!();
    }
}
