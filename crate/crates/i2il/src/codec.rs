//! The lossless block codec: per-block mode decision, residual routing for
//! the four systems, and the normative bitstream.
//!
//! # Bitstream layout
//!
//! ```text
//! header (11 bytes):
//!   magic   4 bytes  "I2IL"
//!   version 1 byte   = 1
//!   system  1 byte   0=none 1=rdpcm 2=i2i 3=i2i-rdpcm
//!   width   2 bytes  big endian, original (uncropped) width,  >= 1
//!   height  2 bytes  big endian, original height, >= 1
//!   depth   1 byte   = 8
//! payload (MSB-first bits, zero-padded to a byte at the very end):
//!   per 4x4 block in raster order over the padded grid:
//!     mode     3 bits
//!     k        3 bits
//!     16 Rice codewords in raster scan order
//! ```
//!
//! No routing flags exist in the stream: how a block's residual was
//! processed is inferred from the system byte and the block's intra mode,
//! so horizontal/vertical RDPCM costs no side information.

use thiserror::Error;

use crate::entropy::{
    choose_k, rice_decode, rice_encode, signed_to_unsigned, unsigned_to_signed, BitReader,
    BitWriter, RiceParam, Truncated,
};
use crate::intra::{predict, prepare_references, reconstruct, residual, IntraMode, ReferenceSamples};
use crate::plane::ImagePlane;
use crate::rdpcm::{rdpcm_forward, rdpcm_inverse, RdpcmDirection};
use crate::transforms::{i2i_dct4_2d_forward, i2i_dct4_2d_inverse};
use crate::{Block4x4, Stage};

pub const MAGIC: [u8; 4] = *b"I2IL";
pub const FORMAT_VERSION: u8 = 1;
pub const BIT_DEPTH: u8 = 8;
pub const HEADER_LEN: usize = 11;

/// Bits of side information per block: 3 for the mode, 3 for `k`.
pub const BLOCK_SIDE_BITS: u32 = 6;

/// Residual-processing system. Selects how 4x4 prediction residuals are
/// treated before entropy coding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SystemId {
    /// Residual entropy coded as-is.
    None = 0,
    /// Horizontal/vertical RDPCM in the matching intra modes, raw otherwise.
    Rdpcm = 1,
    /// 2D i2i DCT in every intra mode.
    I2i = 2,
    /// RDPCM in horizontal/vertical modes, i2i DCT in all others.
    I2iRdpcm = 3,
}

impl SystemId {
    pub const ALL: [SystemId; 4] = [SystemId::None, SystemId::Rdpcm, SystemId::I2i, SystemId::I2iRdpcm];

    pub fn from_byte(b: u8) -> Option<SystemId> {
        match b {
            0 => Some(SystemId::None),
            1 => Some(SystemId::Rdpcm),
            2 => Some(SystemId::I2i),
            3 => Some(SystemId::I2iRdpcm),
            _ => None,
        }
    }

    pub fn byte(self) -> u8 {
        self as u8
    }

    pub fn name(self) -> &'static str {
        match self {
            SystemId::None => "none",
            SystemId::Rdpcm => "rdpcm",
            SystemId::I2i => "i2i",
            SystemId::I2iRdpcm => "i2i-rdpcm",
        }
    }

    pub fn from_name(name: &str) -> Option<SystemId> {
        match name {
            "none" => Some(SystemId::None),
            "rdpcm" => Some(SystemId::Rdpcm),
            "i2i" => Some(SystemId::I2i),
            "i2i-rdpcm" => Some(SystemId::I2iRdpcm),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DecodeError {
    #[error("bad magic bytes (not an i2il stream)")]
    BadMagic,
    #[error("unsupported format version {0}")]
    UnsupportedVersion(u8),
    #[error("invalid system identifier {0}")]
    InvalidSystem(u8),
    #[error("unsupported bit depth {0}")]
    UnsupportedBitDepth(u8),
    #[error("invalid dimensions {width}x{height}")]
    InvalidDimensions { width: u16, height: u16 },
    #[error("invalid intra mode {0}")]
    InvalidMode(u8),
    #[error("trailing data after the last block")]
    TrailingData,
    #[error(transparent)]
    Truncated(#[from] Truncated),
}

/// Stream header: system plus the original plane dimensions. Magic, version
/// and bit depth are fixed constants checked on decode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StreamHeader {
    pub system: SystemId,
    pub width: u16,
    pub height: u16,
}

impl StreamHeader {
    pub fn write_to(&self, out: &mut Vec<u8>) {
        out.extend_from_slice(&MAGIC);
        out.push(FORMAT_VERSION);
        out.push(self.system.byte());
        out.extend_from_slice(&self.width.to_be_bytes());
        out.extend_from_slice(&self.height.to_be_bytes());
        out.push(BIT_DEPTH);
    }

    pub fn parse(bytes: &[u8]) -> Result<StreamHeader, DecodeError> {
        if bytes.len() < HEADER_LEN {
            return Err(Truncated.into());
        }
        if bytes[0..4] != MAGIC {
            return Err(DecodeError::BadMagic);
        }
        if bytes[4] != FORMAT_VERSION {
            return Err(DecodeError::UnsupportedVersion(bytes[4]));
        }
        let system = SystemId::from_byte(bytes[5]).ok_or(DecodeError::InvalidSystem(bytes[5]))?;
        let width = u16::from_be_bytes([bytes[6], bytes[7]]);
        let height = u16::from_be_bytes([bytes[8], bytes[9]]);
        if bytes[10] != BIT_DEPTH {
            return Err(DecodeError::UnsupportedBitDepth(bytes[10]));
        }
        if width == 0 || height == 0 {
            return Err(DecodeError::InvalidDimensions { width, height });
        }
        Ok(StreamHeader { system, width, height })
    }
}

/// Pipeline stage a residual lands in after routing, as a function of the
/// system and intra mode only (never signaled).
pub fn routed_stage(system: SystemId, mode: IntraMode) -> Stage {
    let hv = matches!(mode, IntraMode::Horizontal | IntraMode::Vertical);
    match system {
        SystemId::None => Stage::Residual,
        SystemId::Rdpcm => {
            if hv {
                Stage::Rdpcm
            } else {
                Stage::Residual
            }
        }
        SystemId::I2i => Stage::Coeff,
        SystemId::I2iRdpcm => {
            if hv {
                Stage::Rdpcm
            } else {
                Stage::Coeff
            }
        }
    }
}

/// RDPCM direction inferred from the intra mode (only meaningful for the
/// horizontal/vertical modes).
fn inferred_direction(mode: IntraMode) -> RdpcmDirection {
    match mode {
        IntraMode::Horizontal => RdpcmDirection::Horizontal,
        IntraMode::Vertical => RdpcmDirection::Vertical,
        _ => unreachable!("rdpcm direction is only inferred for h/v modes"),
    }
}

/// Process a prediction residual according to the system/mode routing
/// table. The result's stage tag records what happened.
pub fn route_residual(res: &Block4x4, mode: IntraMode, system: SystemId) -> Block4x4 {
    debug_assert_eq!(res.stage(), Stage::Residual);
    match routed_stage(system, mode) {
        Stage::Residual => *res,
        Stage::Rdpcm => rdpcm_forward(res, inferred_direction(mode)),
        Stage::Coeff => i2i_dct4_2d_forward(res),
        Stage::Pixels => unreachable!(),
    }
}

/// Exact inverse of [`route_residual`] for the same `(system, mode)` pair.
pub fn unroute_residual(processed: &Block4x4, mode: IntraMode, system: SystemId) -> Block4x4 {
    debug_assert_eq!(processed.stage(), routed_stage(system, mode));
    match processed.stage() {
        Stage::Residual => *processed,
        Stage::Rdpcm => rdpcm_inverse(processed, inferred_direction(mode)),
        Stage::Coeff => i2i_dct4_2d_inverse(processed),
        Stage::Pixels => unreachable!(),
    }
}

/// Outcome of coding one block.
#[derive(Debug, Clone, Copy)]
pub struct EncodedBlock {
    pub mode: IntraMode,
    pub k: RiceParam,
    /// Exact size of the block's payload in bits, side information included.
    pub bits: u32,
    /// Reconstructed pixels; equals the source exactly.
    pub recon: Block4x4,
}

/// Choose the cheapest `(mode, k)` for one source block under the exact bit
/// cost model and emit the block. Ties break to the smaller mode index, then
/// the smaller `k`.
pub fn encode_block(
    src: &Block4x4,
    refs: &ReferenceSamples,
    system: SystemId,
    w: &mut BitWriter,
) -> EncodedBlock {
    debug_assert_eq!(src.stage(), Stage::Pixels);
    let mut best: Option<(u32, IntraMode, RiceParam, Block4x4, Block4x4)> = None;
    for mode in IntraMode::ALL {
        let pred = predict(refs, mode);
        let res = residual(src, &pred);
        let routed = route_residual(&res, mode, system);
        let (k, payload_bits) = choose_k(routed.samples());
        let cost = BLOCK_SIDE_BITS + payload_bits;
        if best.as_ref().is_none_or(|b| cost < b.0) {
            best = Some((cost, mode, k, routed, pred));
        }
    }
    let (bits, mode, k, routed, pred) = best.expect("six candidate modes");

    let start = w.bit_len();
    w.write_bits(u32::from(mode.bits()), 3);
    w.write_bits(k.k(), 3);
    for &v in routed.samples() {
        rice_encode(signed_to_unsigned(v), k, w);
    }
    debug_assert_eq!(w.bit_len() - start, bits as usize, "cost model must match written bits");

    let recon = reconstruct(&pred, &unroute_residual(&routed, mode, system));
    debug_assert_eq!(recon, *src, "lossless reconstruction");
    EncodedBlock { mode, k, bits, recon }
}

/// Parse one block and reconstruct its pixels.
pub fn decode_block(
    r: &mut BitReader<'_>,
    refs: &ReferenceSamples,
    system: SystemId,
) -> Result<Block4x4, DecodeError> {
    let mode_bits = r.read_bits(3)? as u8;
    let mode = IntraMode::from_bits(mode_bits).ok_or(DecodeError::InvalidMode(mode_bits))?;
    let k = RiceParam::new(r.read_bits(3)? as u8);
    let mut samples = [0i32; 16];
    for s in &mut samples {
        *s = unsigned_to_signed(rice_decode(r, k)?);
    }
    let routed = Block4x4::new(samples, routed_stage(system, mode));
    let res = unroute_residual(&routed, mode, system);
    let pred = predict(refs, mode);
    Ok(reconstruct(&pred, &res))
}

fn read_block(plane: &ImagePlane, bx: usize, by: usize) -> Block4x4 {
    let mut b = Block4x4::zero(Stage::Pixels);
    for r in 0..4 {
        for c in 0..4 {
            b.set(r, c, i32::from(plane.get(bx * 4 + c, by * 4 + r)));
        }
    }
    b
}

fn write_block(plane: &mut ImagePlane, bx: usize, by: usize, block: &Block4x4) {
    for r in 0..4 {
        for c in 0..4 {
            plane.set(bx * 4 + c, by * 4 + r, block.get(r, c).clamp(0, 255) as u8);
        }
    }
}

/// Encode a plane under one system. The plane is padded to the 4x4 grid by
/// edge replication; the original dimensions travel in the header so the
/// decoder can crop back.
pub fn encode_image(plane: &ImagePlane, system: SystemId) -> Vec<u8> {
    assert!(plane.width() <= u16::MAX as usize && plane.height() <= u16::MAX as usize);
    let padded = plane.padded_to_block_grid();
    let (bw, bh) = padded.block_grid();

    let mut out = Vec::new();
    StreamHeader {
        system,
        width: plane.width() as u16,
        height: plane.height() as u16,
    }
    .write_to(&mut out);

    let mut recon = ImagePlane::new(padded.width(), padded.height());
    let mut w = BitWriter::new();
    for by in 0..bh {
        for bx in 0..bw {
            let refs = prepare_references(&recon, bx, by);
            let src = read_block(&padded, bx, by);
            let coded = encode_block(&src, &refs, system, &mut w);
            write_block(&mut recon, bx, by, &coded.recon);
        }
    }
    out.extend_from_slice(&w.finish());
    out
}

/// Decode a stream produced by [`encode_image`]. Reproduces the input plane
/// bit exactly for every system.
pub fn decode_image(bytes: &[u8]) -> Result<ImagePlane, DecodeError> {
    let header = StreamHeader::parse(bytes)?;
    let width = usize::from(header.width);
    let height = usize::from(header.height);
    let (bw, bh) = (width.div_ceil(4), height.div_ceil(4));

    let mut recon = ImagePlane::new(bw * 4, bh * 4);
    let mut r = BitReader::new(&bytes[HEADER_LEN..]);
    for by in 0..bh {
        for bx in 0..bw {
            let refs = prepare_references(&recon, bx, by);
            let block = decode_block(&mut r, &refs, header.system)?;
            write_block(&mut recon, bx, by, &block);
        }
    }
    if !r.remainder_is_padding() {
        return Err(DecodeError::TrailingData);
    }
    Ok(recon.cropped(width, height))
}

/// Coded size of one plane under one system.
#[derive(Debug, Clone, Copy)]
pub struct SystemReport {
    pub system: SystemId,
    pub bits: usize,
    pub bits_per_pixel: f64,
    /// Percent bitrate reduction relative to the `none` system.
    pub reduction_pct: f64,
}

/// Encode the plane under all four systems and report sizes and percent
/// reduction against the raw-residual baseline.
pub fn bitrate_report(plane: &ImagePlane) -> [SystemReport; 4] {
    let pixels = (plane.width() * plane.height()) as f64;
    let sizes: Vec<usize> = SystemId::ALL
        .iter()
        .map(|&sys| encode_image(plane, sys).len() * 8)
        .collect();
    let base = sizes[0] as f64;
    core::array::from_fn(|i| SystemReport {
        system: SystemId::ALL[i],
        bits: sizes[i],
        bits_per_pixel: sizes[i] as f64 / pixels,
        reduction_pct: 100.0 * (1.0 - sizes[i] as f64 / base),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_plane(width: usize, height: usize, seed: u64) -> ImagePlane {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        ImagePlane::from_samples(width, height, (0..width * height).map(|_| rng.random()).collect())
    }

    #[test]
    fn routing_table_matches_the_four_systems() {
        use IntraMode::*;
        for mode in IntraMode::ALL {
            let hv = matches!(mode, Horizontal | Vertical);
            assert_eq!(routed_stage(SystemId::None, mode), Stage::Residual);
            assert_eq!(
                routed_stage(SystemId::Rdpcm, mode),
                if hv { Stage::Rdpcm } else { Stage::Residual }
            );
            assert_eq!(routed_stage(SystemId::I2i, mode), Stage::Coeff);
            assert_eq!(
                routed_stage(SystemId::I2iRdpcm, mode),
                if hv { Stage::Rdpcm } else { Stage::Coeff }
            );
        }
    }

    #[test]
    fn route_unroute_is_identity_for_all_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(103);
        for _ in 0..2_000 {
            let res = Block4x4::new(
                core::array::from_fn(|_| rng.random_range(-255..=255)),
                Stage::Residual,
            );
            for system in SystemId::ALL {
                for mode in IntraMode::ALL {
                    let routed = route_residual(&res, mode, system);
                    assert_eq!(routed.stage(), routed_stage(system, mode));
                    assert_eq!(unroute_residual(&routed, mode, system), res);
                }
            }
        }
    }

    #[test]
    fn rdpcm_direction_follows_intra_mode() {
        // A residual constant along rows but varying down columns: vertical
        // differencing cancels it, horizontal leaves it untouched.
        let mut res = Block4x4::zero(Stage::Residual);
        for r in 0..4 {
            res.set_row(r, [10 * r as i32; 4]);
        }
        let v = route_residual(&res, IntraMode::Vertical, SystemId::Rdpcm);
        assert_eq!(v.row(0), [0; 4]);
        assert_eq!(v.row(1), [10; 4]);
        assert_eq!(v.row(2), [10; 4]);
        let h = route_residual(&res, IntraMode::Horizontal, SystemId::Rdpcm);
        for r in 0..4 {
            assert_eq!(h.row(r), [10 * r as i32, 0, 0, 0]);
        }
    }

    #[test]
    fn constant_block_codes_in_22_bits() {
        let src = Block4x4::constant(90, Stage::Pixels);
        let refs = crate::intra::ReferenceSamples::flat(90);
        for system in SystemId::ALL {
            let mut w = BitWriter::new();
            let coded = encode_block(&src, &refs, system, &mut w);
            assert_eq!(coded.bits, 22, "system {system:?}");
            assert_eq!(w.bit_len(), 22);
        }
    }

    #[test]
    fn encode_block_cost_equals_written_bits() {
        let mut rng = ChaCha8Rng::seed_from_u64(107);
        for _ in 0..2_000 {
            let src = Block4x4::new(core::array::from_fn(|_| rng.random_range(0..=255)), Stage::Pixels);
            let refs = crate::intra::ReferenceSamples {
                top: core::array::from_fn(|_| rng.random_range(0..=255)),
                left: core::array::from_fn(|_| rng.random_range(0..=255)),
                corner: rng.random_range(0..=255),
                top_available: true,
                left_available: true,
            };
            for system in SystemId::ALL {
                let mut w = BitWriter::new();
                let coded = encode_block(&src, &refs, system, &mut w);
                assert_eq!(w.bit_len(), coded.bits as usize);
                assert_eq!(coded.recon, src);

                // decode it back through the block parser
                let bytes = w.finish();
                let mut r = BitReader::new(&bytes);
                let decoded = decode_block(&mut r, &refs, system).unwrap();
                assert_eq!(decoded, src);
            }
        }
    }

    #[test]
    fn mode_decision_is_optimal_over_all_mode_k_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(109);
        for _ in 0..300 {
            let src = Block4x4::new(core::array::from_fn(|_| rng.random_range(0..=255)), Stage::Pixels);
            let refs = crate::intra::ReferenceSamples {
                top: core::array::from_fn(|_| rng.random_range(0..=255)),
                left: core::array::from_fn(|_| rng.random_range(0..=255)),
                corner: rng.random_range(0..=255),
                top_available: true,
                left_available: true,
            };
            for system in SystemId::ALL {
                let mut w = BitWriter::new();
                let coded = encode_block(&src, &refs, system, &mut w);
                for mode in IntraMode::ALL {
                    let pred = predict(&refs, mode);
                    let routed = route_residual(&residual(&src, &pred), mode, system);
                    for kb in 0..=RiceParam::MAX {
                        let cost = BLOCK_SIDE_BITS + crate::entropy::block_cost(routed.samples(), RiceParam::new(kb));
                        assert!(cost >= coded.bits, "found cheaper ({mode:?}, k={kb})");
                    }
                }
            }
        }
    }

    #[test]
    fn image_round_trip_all_systems() {
        for (w, h, seed) in [(16, 16, 1u64), (20, 12, 2), (33, 17, 3), (7, 5, 4)] {
            let plane = random_plane(w, h, seed);
            for system in SystemId::ALL {
                let bytes = encode_image(&plane, system);
                let decoded = decode_image(&bytes).unwrap();
                assert_eq!(decoded, plane, "{w}x{h} under {system:?}");
            }
        }
    }

    #[test]
    fn one_by_one_image_round_trips_via_padding() {
        let plane = ImagePlane::from_samples(1, 1, vec![173]);
        for system in SystemId::ALL {
            let decoded = decode_image(&encode_image(&plane, system)).unwrap();
            assert_eq!(decoded, plane);
        }
    }

    #[test]
    fn constant_image_stream_is_header_plus_one_tiny_block() {
        let plane = ImagePlane::from_samples(4, 4, vec![128; 16]);
        let bytes = encode_image(&plane, SystemId::None);
        // 11-byte header + ceil(22 / 8) = 3 payload bytes
        assert_eq!(bytes.len(), HEADER_LEN + 3);
        assert_eq!(decode_image(&bytes).unwrap(), plane);
    }

    #[test]
    fn streams_are_byte_identical_across_runs() {
        let plane = random_plane(24, 24, 5);
        for system in SystemId::ALL {
            assert_eq!(encode_image(&plane, system), encode_image(&plane, system));
        }
    }

    #[test]
    fn header_field_validation() {
        let plane = random_plane(8, 8, 6);
        let good = encode_image(&plane, SystemId::I2i);

        let mut bad = good.clone();
        bad[0] = b'X';
        assert_eq!(decode_image(&bad), Err(DecodeError::BadMagic));

        let mut bad = good.clone();
        bad[4] = 2;
        assert_eq!(decode_image(&bad), Err(DecodeError::UnsupportedVersion(2)));

        let mut bad = good.clone();
        bad[5] = 4;
        assert_eq!(decode_image(&bad), Err(DecodeError::InvalidSystem(4)));

        let mut bad = good.clone();
        bad[10] = 10;
        assert_eq!(decode_image(&bad), Err(DecodeError::UnsupportedBitDepth(10)));

        let mut bad = good.clone();
        bad[6] = 0;
        bad[7] = 0;
        assert_eq!(
            decode_image(&bad),
            Err(DecodeError::InvalidDimensions { width: 0, height: 8 })
        );

        assert_eq!(decode_image(&good[..5]), Err(DecodeError::Truncated(Truncated)));
    }

    #[test]
    fn payload_validation() {
        let plane = random_plane(8, 8, 7);
        let good = encode_image(&plane, SystemId::Rdpcm);

        // truncated payload
        assert!(matches!(
            decode_image(&good[..good.len() - 1]),
            Err(DecodeError::Truncated(_)) | Err(DecodeError::TrailingData)
        ));

        // a whole extra byte after the last block
        let mut extra = good.clone();
        extra.push(0);
        assert_eq!(decode_image(&extra), Err(DecodeError::TrailingData));

        // nonzero padding bits: the constant 4x4 stream ends with 22 payload
        // bits, so the final byte carries two padding zeros
        let constant = ImagePlane::from_samples(4, 4, vec![128; 16]);
        let mut dirty = encode_image(&constant, SystemId::None);
        *dirty.last_mut().unwrap() |= 1;
        assert_eq!(decode_image(&dirty), Err(DecodeError::TrailingData));
    }

    #[test]
    fn reserved_mode_bits_are_a_decode_error() {
        // Handcraft: valid header for a 4x4 image, then mode=6 (110)
        let mut bytes = Vec::new();
        StreamHeader { system: SystemId::None, width: 4, height: 4 }.write_to(&mut bytes);
        let mut w = BitWriter::new();
        w.write_bits(6, 3);
        w.write_bits(0, 3);
        for _ in 0..16 {
            rice_encode(0, RiceParam::new(0), &mut w);
        }
        bytes.extend_from_slice(&w.finish());
        assert_eq!(decode_image(&bytes), Err(DecodeError::InvalidMode(6)));
    }

    #[test]
    fn bitrate_report_baseline_is_zero_reduction() {
        let plane = random_plane(16, 16, 8);
        let report = bitrate_report(&plane);
        assert_eq!(report[0].system, SystemId::None);
        assert_eq!(report[0].reduction_pct, 0.0);
        for r in &report {
            assert_eq!(r.bits % 8, 0);
            assert!(r.bits_per_pixel > 0.0);
        }
    }
}
