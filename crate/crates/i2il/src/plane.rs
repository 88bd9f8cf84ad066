//! Single-component 8-bit image planes and the 4x4 block grid padding the
//! codec works on.

/// A row-major 8-bit luma plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImagePlane {
    width: usize,
    height: usize,
    samples: Vec<u8>,
}

impl ImagePlane {
    /// All-zero plane. Panics on zero dimensions; the codec requires
    /// `width, height >= 1`.
    pub fn new(width: usize, height: usize) -> Self {
        assert!(width >= 1 && height >= 1, "plane dimensions must be >= 1");
        Self {
            width,
            height,
            samples: vec![0; width * height],
        }
    }

    pub fn from_samples(width: usize, height: usize, samples: Vec<u8>) -> Self {
        assert!(width >= 1 && height >= 1, "plane dimensions must be >= 1");
        assert_eq!(samples.len(), width * height);
        Self { width, height, samples }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn samples(&self) -> &[u8] {
        &self.samples
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> u8 {
        self.samples[y * self.width + x]
    }

    #[inline]
    pub fn set(&mut self, x: usize, y: usize, value: u8) {
        self.samples[y * self.width + x] = value;
    }

    pub fn row(&self, y: usize) -> &[u8] {
        &self.samples[y * self.width..(y + 1) * self.width]
    }

    /// Pad to dimensions that are multiples of 4 by replicating the last
    /// column and row. Returns a clone when already aligned.
    pub fn padded_to_block_grid(&self) -> ImagePlane {
        let pw = self.width.div_ceil(4) * 4;
        let ph = self.height.div_ceil(4) * 4;
        if pw == self.width && ph == self.height {
            return self.clone();
        }
        let mut out = ImagePlane::new(pw, ph);
        for y in 0..ph {
            let sy = y.min(self.height - 1);
            for x in 0..pw {
                let sx = x.min(self.width - 1);
                out.set(x, y, self.get(sx, sy));
            }
        }
        out
    }

    /// Crop the top-left `width x height` region (undoes the padding).
    pub fn cropped(&self, width: usize, height: usize) -> ImagePlane {
        assert!(width <= self.width && height <= self.height);
        let mut out = ImagePlane::new(width, height);
        for y in 0..height {
            for x in 0..width {
                out.set(x, y, self.get(x, y));
            }
        }
        out
    }

    /// Block grid dimensions of the padded plane, in 4x4 units.
    pub fn block_grid(&self) -> (usize, usize) {
        (self.width.div_ceil(4), self.height.div_ceil(4))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn padding_replicates_edges_and_crop_undoes_it() {
        let p = ImagePlane::from_samples(2, 3, vec![1, 2, 3, 4, 5, 6]);
        let padded = p.padded_to_block_grid();
        assert_eq!((padded.width(), padded.height()), (4, 4));
        assert_eq!(padded.row(0), &[1, 2, 2, 2]);
        assert_eq!(padded.row(2), &[5, 6, 6, 6]);
        assert_eq!(padded.row(3), &[5, 6, 6, 6]);
        assert_eq!(padded.cropped(2, 3), p);
    }

    #[test]
    fn aligned_plane_pads_to_itself() {
        let p = ImagePlane::from_samples(4, 4, (0..16).collect());
        assert_eq!(p.padded_to_block_grid(), p);
    }

    #[test]
    fn one_by_one_pads_to_constant_block() {
        let p = ImagePlane::from_samples(1, 1, vec![200]);
        let padded = p.padded_to_block_grid();
        assert!(padded.samples().iter().all(|&s| s == 200));
        assert_eq!(padded.cropped(1, 1), p);
    }
}
