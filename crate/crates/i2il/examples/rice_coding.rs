//! Rice codewords and the exhaustive per-block parameter search.
//!
//! Run with `cargo run --example rice_coding`.

use i2il::entropy::{
    block_cost, choose_k, rice_decode, rice_encode, signed_to_unsigned, BitReader, BitWriter,
    RiceParam,
};

fn bits_of(bytes: &[u8], n: usize) -> String {
    (0..n)
        .map(|i| if bytes[i / 8] >> (7 - i % 8) & 1 == 1 { '1' } else { '0' })
        .collect()
}

fn main() {
    println!("single codewords (unary quotient, 0, then k remainder bits):");
    for (u, k) in [(0u32, 0u8), (3, 1), (9, 2), (200, 4), (20_000, 0)] {
        let k = RiceParam::new(k);
        let mut w = BitWriter::new();
        rice_encode(u, k, &mut w);
        let n = w.bit_len();
        let bytes = w.finish();
        let mut r = BitReader::new(&bytes);
        let back = rice_decode(&mut r, k).unwrap();
        println!("  u={u:<6} k={}  {:>2} bits  {}  (decodes to {back})", k.k(), n, bits_of(&bytes, n));
    }

    // A typical transformed residual block: one big DC, decaying ACs.
    let block: [i32; 16] = [187, -41, 12, -3, 35, -18, 6, 1, -9, 4, -2, 0, 3, -1, 0, 0];
    println!();
    println!("cost of one coefficient block for every k:");
    for k in 0..=RiceParam::MAX {
        let k = RiceParam::new(k);
        println!("  k={}  {:>4} bits", k.k(), block_cost(&block, k));
    }
    let (best, cost) = choose_k(&block);
    println!("chosen: k={} at {cost} bits", best.k());

    // The cost model is exact: write the block and count.
    let mut w = BitWriter::new();
    for &v in &block {
        rice_encode(signed_to_unsigned(v), best, &mut w);
    }
    println!("actually written: {} bits", w.bit_len());
}
