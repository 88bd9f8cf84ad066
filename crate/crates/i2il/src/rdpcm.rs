//! Residual DPCM: pixel-wise differencing of a prediction-residual block
//! along the horizontal or vertical direction.
//!
//! The first column (or row) is kept as an anchor; every other sample has
//! its left (or upper) neighbor subtracted. The inverse is the running sum,
//! so the pair is exactly invertible on any integer block.

use crate::{Block4x4, Stage};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RdpcmDirection {
    Horizontal,
    Vertical,
}

/// Difference each sample against its left (horizontal) or upper (vertical)
/// neighbor. For 8-bit residual input the output stays in `[-510, 510]`.
pub fn rdpcm_forward(block: &Block4x4, dir: RdpcmDirection) -> Block4x4 {
    debug_assert_eq!(block.stage(), Stage::Residual);
    let mut out = block.retagged(Stage::Rdpcm);
    match dir {
        RdpcmDirection::Horizontal => {
            for r in 0..4 {
                for c in (1..4).rev() {
                    out.set(r, c, block.get(r, c) - block.get(r, c - 1));
                }
            }
        }
        RdpcmDirection::Vertical => {
            for c in 0..4 {
                for r in (1..4).rev() {
                    out.set(r, c, block.get(r, c) - block.get(r - 1, c));
                }
            }
        }
    }
    out
}

/// Undo [`rdpcm_forward`] by accumulating the differences.
pub fn rdpcm_inverse(block: &Block4x4, dir: RdpcmDirection) -> Block4x4 {
    debug_assert_eq!(block.stage(), Stage::Rdpcm);
    let mut out = block.retagged(Stage::Residual);
    match dir {
        RdpcmDirection::Horizontal => {
            for r in 0..4 {
                for c in 1..4 {
                    out.set(r, c, out.get(r, c) + out.get(r, c - 1));
                }
            }
        }
        RdpcmDirection::Vertical => {
            for c in 0..4 {
                for r in 1..4 {
                    out.set(r, c, out.get(r, c) + out.get(r - 1, c));
                }
            }
        }
    }
    out
}
