//! 4x4 intra prediction with a reduced six-mode set.
//!
//! Blocks are coded in raster order, so the row above and the column to the
//! left of the current block are already reconstructed when it is predicted.
//! Reference preparation substitutes for samples outside the image; after it
//! runs, every predictor has a full set of 13 references (8 top including
//! above-right, 4 left, 1 corner).

use crate::plane::ImagePlane;
use crate::{Block4x4, Stage};

/// Prediction mode for a 4x4 block. Serialized as a 3-bit field; values 6
/// and 7 are decoder errors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntraMode {
    Dc = 0,
    Vertical = 1,
    Horizontal = 2,
    Planar = 3,
    DiagDownLeft = 4,
    DiagDownRight = 5,
}

impl IntraMode {
    pub const COUNT: usize = 6;

    pub const ALL: [IntraMode; 6] = [
        IntraMode::Dc,
        IntraMode::Vertical,
        IntraMode::Horizontal,
        IntraMode::Planar,
        IntraMode::DiagDownLeft,
        IntraMode::DiagDownRight,
    ];

    pub fn from_bits(v: u8) -> Option<IntraMode> {
        match v {
            0 => Some(IntraMode::Dc),
            1 => Some(IntraMode::Vertical),
            2 => Some(IntraMode::Horizontal),
            3 => Some(IntraMode::Planar),
            4 => Some(IntraMode::DiagDownLeft),
            5 => Some(IntraMode::DiagDownRight),
            _ => None,
        }
    }

    pub fn bits(self) -> u8 {
        self as u8
    }
}

/// Prepared reference samples for one block: top row `T[0..7]` (the last
/// four are above-right), left column `L[0..3]`, and the corner `C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReferenceSamples {
    pub top: [i32; 8],
    pub left: [i32; 4],
    pub corner: i32,
    pub top_available: bool,
    pub left_available: bool,
}

impl ReferenceSamples {
    /// All references equal to `value`, both sides flagged available.
    /// Handy for tests and synthetic setups.
    pub fn flat(value: i32) -> Self {
        Self {
            top: [value; 8],
            left: [value; 4],
            corner: value,
            top_available: true,
            left_available: true,
        }
    }
}

/// Gather references for the block at grid position (`bx`, `by`) from the
/// reconstructed plane, applying the substitution rules for unavailable
/// samples: above-right falls back to `T[3]`, a missing top row to `L[0]`
/// (else 128), a missing left column to `T[0]` (else 128), and the corner to
/// `T[0]`, then `L[0]`, then 128.
pub fn prepare_references(recon: &ImagePlane, bx: usize, by: usize) -> ReferenceSamples {
    let x0 = bx * 4;
    let y0 = by * 4;
    let top_available = by > 0;
    let left_available = bx > 0;

    let mut top = [0i32; 8];
    let mut left = [0i32; 4];

    if top_available {
        for (j, t) in top.iter_mut().enumerate() {
            let x = x0 + j;
            *t = if x < recon.width() {
                i32::from(recon.get(x, y0 - 1))
            } else {
                i32::from(recon.get(x0 + 3, y0 - 1))
            };
        }
    }
    if left_available {
        for (i, l) in left.iter_mut().enumerate() {
            *l = i32::from(recon.get(x0 - 1, y0 + i));
        }
    }
    if !top_available {
        top = [if left_available { left[0] } else { 128 }; 8];
    }
    if !left_available {
        left = [if top_available { top[0] } else { 128 }; 4];
    }

    let corner = if top_available && left_available {
        i32::from(recon.get(x0 - 1, y0 - 1))
    } else if top_available {
        top[0]
    } else if left_available {
        left[0]
    } else {
        128
    };

    ReferenceSamples {
        top,
        left,
        corner,
        top_available,
        left_available,
    }
}

/// Predict a 4x4 pixel block from prepared references.
pub fn predict(refs: &ReferenceSamples, mode: IntraMode) -> Block4x4 {
    let t = &refs.top;
    let l = &refs.left;
    let mut out = Block4x4::zero(Stage::Pixels);
    match mode {
        IntraMode::Dc => {
            let v = match (refs.top_available, refs.left_available) {
                (true, true) => (t[..4].iter().sum::<i32>() + l.iter().sum::<i32>() + 4) / 8,
                (true, false) => (t[..4].iter().sum::<i32>() + 2) / 4,
                (false, true) => (l.iter().sum::<i32>() + 2) / 4,
                (false, false) => 128,
            };
            out = Block4x4::constant(v, Stage::Pixels);
        }
        IntraMode::Vertical => {
            for r in 0..4 {
                out.set_row(r, [t[0], t[1], t[2], t[3]]);
            }
        }
        IntraMode::Horizontal => {
            for r in 0..4 {
                out.set_row(r, [l[r]; 4]);
            }
        }
        IntraMode::Planar => {
            for r in 0..4 {
                for c in 0..4 {
                    let (ri, ci) = (r as i32, c as i32);
                    let v = ((3 - ci) * l[r] + (ci + 1) * t[4] + (3 - ri) * t[c] + (ri + 1) * l[3] + 4) >> 3;
                    out.set(r, c, v);
                }
            }
        }
        IntraMode::DiagDownLeft => {
            for r in 0..4 {
                for c in 0..4 {
                    let v = (t[(r + c).min(6)] + 2 * t[(r + c + 1).min(7)] + t[(r + c + 2).min(7)] + 2) >> 2;
                    out.set(r, c, v);
                }
            }
        }
        IntraMode::DiagDownRight => {
            // Extended reference line E[-4..7]: E[-1] = corner,
            // E[-2 - i] = L[i], E[j] = T[j] for j >= 0.
            let mut e = [0i32; 12];
            e[0] = l[2];
            e[1] = l[1];
            e[2] = l[0];
            e[3] = refs.corner;
            e[4..12].copy_from_slice(t);
            for r in 0..4 {
                for c in 0..4 {
                    let j = (c as i32 - r as i32 + 4) as usize; // E index of c - r
                    let v = (e[j - 1] + 2 * e[j] + e[j + 1] + 2) >> 2;
                    out.set(r, c, v);
                }
            }
        }
    }
    out
}

/// Elementwise `block - pred`.
pub fn residual(block: &Block4x4, pred: &Block4x4) -> Block4x4 {
    debug_assert_eq!(block.stage(), Stage::Pixels);
    debug_assert_eq!(pred.stage(), Stage::Pixels);
    let mut out = Block4x4::zero(Stage::Residual);
    for i in 0..16 {
        out.set(i / 4, i % 4, block.samples()[i] - pred.samples()[i]);
    }
    out
}

/// Elementwise `pred + residual`; exact inverse of [`residual`].
pub fn reconstruct(pred: &Block4x4, res: &Block4x4) -> Block4x4 {
    debug_assert_eq!(pred.stage(), Stage::Pixels);
    debug_assert_eq!(res.stage(), Stage::Residual);
    let mut out = Block4x4::zero(Stage::Pixels);
    for i in 0..16 {
        out.set(i / 4, i % 4, pred.samples()[i] + res.samples()[i]);
    }
    out
}
