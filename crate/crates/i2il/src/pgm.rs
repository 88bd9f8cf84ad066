//! Binary PGM (P5) reading and writing, the only image format the tools
//! speak. Maxval must be 255; header comments are accepted.

use std::fs;
use std::io;
use std::path::Path;

use thiserror::Error;

use crate::plane::ImagePlane;

#[derive(Debug, Error)]
pub enum PgmError {
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("not a binary PGM (P5) file")]
    BadMagic,
    #[error("malformed PGM header")]
    BadHeader,
    #[error("unsupported maxval {0} (only 255)")]
    BadMaxval(u32),
    #[error("invalid dimensions {0}x{1}")]
    BadDimensions(u32, u32),
    #[error("pixel payload truncated")]
    Truncated,
}

/// Pull the next whitespace-separated integer token, skipping `#` comments.
fn next_token(bytes: &[u8], pos: &mut usize) -> Result<u32, PgmError> {
    loop {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
        if *pos < bytes.len() && bytes[*pos] == b'#' {
            while *pos < bytes.len() && bytes[*pos] != b'\n' {
                *pos += 1;
            }
            continue;
        }
        break;
    }
    let start = *pos;
    while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
        *pos += 1;
    }
    if *pos == start {
        return Err(PgmError::BadHeader);
    }
    std::str::from_utf8(&bytes[start..*pos])
        .ok()
        .and_then(|s| s.parse().ok())
        .ok_or(PgmError::BadHeader)
}

pub fn parse_pgm(bytes: &[u8]) -> Result<ImagePlane, PgmError> {
    if bytes.len() < 2 || &bytes[0..2] != b"P5" {
        return Err(PgmError::BadMagic);
    }
    let mut pos = 2;
    let width = next_token(bytes, &mut pos)?;
    let height = next_token(bytes, &mut pos)?;
    let maxval = next_token(bytes, &mut pos)?;
    if maxval != 255 {
        return Err(PgmError::BadMaxval(maxval));
    }
    if width == 0 || height == 0 || width > u16::MAX as u32 || height > u16::MAX as u32 {
        return Err(PgmError::BadDimensions(width, height));
    }
    // exactly one whitespace byte separates the header from the samples
    if pos >= bytes.len() || !bytes[pos].is_ascii_whitespace() {
        return Err(PgmError::BadHeader);
    }
    pos += 1;
    let n = width as usize * height as usize;
    if bytes.len() < pos + n {
        return Err(PgmError::Truncated);
    }
    Ok(ImagePlane::from_samples(
        width as usize,
        height as usize,
        bytes[pos..pos + n].to_vec(),
    ))
}

pub fn read_pgm(path: impl AsRef<Path>) -> Result<ImagePlane, PgmError> {
    parse_pgm(&fs::read(path)?)
}

pub fn encode_pgm(plane: &ImagePlane) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", plane.width(), plane.height()).into_bytes();
    out.extend_from_slice(plane.samples());
    out
}

pub fn write_pgm(plane: &ImagePlane, path: impl AsRef<Path>) -> Result<(), PgmError> {
    fs::write(path, encode_pgm(plane))?;
    Ok(())
}
