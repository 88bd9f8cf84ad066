//! 4x4 integer blocks, the unit every pipeline stage operates on.

/// Which pipeline stage a block's samples belong to.
///
/// The tag travels with the block so routing mistakes (e.g. feeding
/// coefficients to the pixel reconstruction) surface in debug builds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    /// Pixel samples, `[0, 255]` at bit depth 8.
    Pixels,
    /// Prediction residual, `[-255, 255]` at bit depth 8.
    Residual,
    /// Residual after horizontal or vertical DPCM, `[-510, 510]`.
    Rdpcm,
    /// 2D i2i DCT coefficients, `|v| <= 8191` for 8-bit residual input.
    Coeff,
}

/// A 4x4 block of integers in row-major order plus its stage tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block4x4 {
    samples: [i32; 16],
    stage: Stage,
}

impl Block4x4 {
    pub fn new(samples: [i32; 16], stage: Stage) -> Self {
        Self { samples, stage }
    }

    pub fn zero(stage: Stage) -> Self {
        Self { samples: [0; 16], stage }
    }

    pub fn constant(value: i32, stage: Stage) -> Self {
        Self { samples: [value; 16], stage }
    }

    pub fn stage(&self) -> Stage {
        self.stage
    }

    pub fn samples(&self) -> &[i32; 16] {
        &self.samples
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> i32 {
        self.samples[row * 4 + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: i32) {
        self.samples[row * 4 + col] = value;
    }

    pub fn row(&self, row: usize) -> [i32; 4] {
        let base = row * 4;
        [
            self.samples[base],
            self.samples[base + 1],
            self.samples[base + 2],
            self.samples[base + 3],
        ]
    }

    pub fn col(&self, col: usize) -> [i32; 4] {
        [
            self.samples[col],
            self.samples[4 + col],
            self.samples[8 + col],
            self.samples[12 + col],
        ]
    }

    pub fn set_row(&mut self, row: usize, values: [i32; 4]) {
        self.samples[row * 4..row * 4 + 4].copy_from_slice(&values);
    }

    pub fn set_col(&mut self, col: usize, values: [i32; 4]) {
        for (row, v) in values.into_iter().enumerate() {
            self.samples[row * 4 + col] = v;
        }
    }

    /// Same samples under a different stage tag.
    pub fn retagged(&self, stage: Stage) -> Self {
        Self { samples: self.samples, stage }
    }

    pub fn transposed(&self) -> Self {
        let mut out = *self;
        for r in 0..4 {
            for c in 0..4 {
                out.samples[c * 4 + r] = self.samples[r * 4 + c];
            }
        }
        out
    }
}
