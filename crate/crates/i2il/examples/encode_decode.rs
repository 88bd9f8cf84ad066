//! Full image round trips over all four systems.
//!
//! Encodes a synthetic composite scene, decodes it back, verifies equality,
//! and prints coded sizes. Pass a path to a PGM file to use your own image:
//! `cargo run --example encode_decode -- photo.pgm`.

use i2il::codec::{decode_image, encode_image, SystemId};
use i2il::pgm::read_pgm;
use i2il::synth;

fn main() {
    let (name, plane) = match std::env::args().nth(1) {
        Some(path) => match read_pgm(&path) {
            Ok(p) => (path, p),
            Err(e) => {
                eprintln!("error: {path}: {e}");
                std::process::exit(1);
            }
        },
        None => ("synthetic scene".to_string(), synth::scene(160, 160, 33)),
    };

    println!("input: {name} ({}x{})", plane.width(), plane.height());
    let raw_bits = plane.width() * plane.height() * 8;
    println!("raw size: {} bits ({} bytes)", raw_bits, raw_bits / 8);
    println!();

    let mut none_bits = 0usize;
    for system in SystemId::ALL {
        let bytes = encode_image(&plane, system);
        let decoded = decode_image(&bytes).expect("own stream decodes");
        assert_eq!(decoded, plane, "round trip must be lossless");
        let bits = bytes.len() * 8;
        if system == SystemId::None {
            none_bits = bits;
        }
        println!(
            "{:>10}: {:>8} bits  {:.4} bpp  {:+.2}% vs none  (lossless: yes)",
            system.name(),
            bits,
            bits as f64 / (plane.width() * plane.height()) as f64,
            100.0 * (1.0 - bits as f64 / none_bits as f64),
        );
    }
}
