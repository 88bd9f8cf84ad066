//! Benchmark runs: encode a set of planes under a set of systems, verify
//! every round trip, and report sizes as CSV.
//!
//! CSV columns, in order:
//!
//! | column            | meaning                                          |
//! |-------------------|--------------------------------------------------|
//! | `input`           | input name (file stem or generator name)         |
//! | `system`          | `none`, `rdpcm`, `i2i`, or `i2i-rdpcm`           |
//! | `bits`            | coded stream size in bits (header included)      |
//! | `bits_per_pixel`  | `bits / (width * height)` of the original plane  |
//! | `reduction_pct`   | `100 * (1 - bits / bits_none)`, 0.00 for `none`  |
//! | `encode_ms`       | wall-clock encode time (informational only)      |
//! | `decode_ms`       | wall-clock decode time (informational only)      |
//!
//! A record is only emitted after the decoded plane compared equal to the
//! input; a mismatch aborts the whole run. Timing aside, the CSV is
//! deterministic for fixed inputs.

use std::time::Instant;

use thiserror::Error;

use crate::codec::{decode_image, encode_image, DecodeError, SystemId};
use crate::plane::ImagePlane;

pub const CSV_HEADER: &str = "input,system,bits,bits_per_pixel,reduction_pct,encode_ms,decode_ms";

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("lossless verification failed for '{input}' under system {system}")]
    LosslessMismatch { input: String, system: &'static str },
    #[error("decoding '{input}' under system {system} failed: {source}")]
    DecodeFailed {
        input: String,
        system: &'static str,
        source: DecodeError,
    },
}

/// One verified benchmark measurement.
#[derive(Debug, Clone)]
pub struct BenchRecord {
    pub input: String,
    pub system: SystemId,
    pub bits: usize,
    pub bits_per_pixel: f64,
    pub reduction_pct: f64,
    pub encode_ms: f64,
    pub decode_ms: f64,
}

impl BenchRecord {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{:.4},{:.2},{:.3},{:.3}",
            self.input,
            self.system.name(),
            self.bits,
            self.bits_per_pixel,
            self.reduction_pct,
            self.encode_ms,
            self.decode_ms
        )
    }
}

/// Encode every input under every requested system, verifying each round
/// trip. The `none` baseline is always measured so the reduction column is
/// well defined even when it is not among the requested systems.
pub fn run_bench(
    inputs: &[(String, ImagePlane)],
    systems: &[SystemId],
) -> Result<Vec<BenchRecord>, BenchError> {
    let mut records = Vec::with_capacity(inputs.len() * systems.len());
    for (name, plane) in inputs {
        let pixels = (plane.width() * plane.height()) as f64;

        let measure = |system: SystemId| -> Result<BenchRecord, BenchError> {
            let t0 = Instant::now();
            let bytes = encode_image(plane, system);
            let encode_ms = t0.elapsed().as_secs_f64() * 1e3;
            let t1 = Instant::now();
            let decoded = decode_image(&bytes).map_err(|source| BenchError::DecodeFailed {
                input: name.clone(),
                system: system.name(),
                source,
            })?;
            let decode_ms = t1.elapsed().as_secs_f64() * 1e3;
            if decoded != *plane {
                return Err(BenchError::LosslessMismatch {
                    input: name.clone(),
                    system: system.name(),
                });
            }
            Ok(BenchRecord {
                input: name.clone(),
                system,
                bits: bytes.len() * 8,
                bits_per_pixel: bytes.len() as f64 * 8.0 / pixels,
                reduction_pct: 0.0, // filled in below
                encode_ms,
                decode_ms,
            })
        };

        let baseline = measure(SystemId::None)?;
        let base_bits = baseline.bits as f64;
        for &system in systems {
            let mut rec = if system == SystemId::None { baseline.clone() } else { measure(system)? };
            rec.reduction_pct = 100.0 * (1.0 - rec.bits as f64 / base_bits);
            records.push(rec);
        }
    }
    Ok(records)
}

/// Render records as a CSV document with the fixed header.
pub fn to_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for rec in records {
        out.push_str(&rec.csv_row());
        out.push('\n');
    }
    out
}
