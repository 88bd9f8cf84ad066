//! Lossless intra image codec built around an integer-to-integer (i2i)
//! 4-point DCT.
//!
//! Classic block codecs drop the transform entirely in lossless mode and
//! entropy code the raw prediction residual. This crate instead processes
//! 4x4 residual blocks with a lifting-based DCT approximation that maps
//! integers to integers without growing the dynamic range, so perfect
//! reconstruction is preserved. Four residual pipelines are implemented and
//! can be compared against each other:
//!
//! | system      | hor/ver intra modes | other intra modes |
//! |-------------|---------------------|-------------------|
//! | `none`      | raw residual        | raw residual      |
//! | `rdpcm`     | h/v RDPCM           | raw residual      |
//! | `i2i`       | i2i DCT             | i2i DCT           |
//! | `i2i-rdpcm` | h/v RDPCM           | i2i DCT           |
//!
//! The coding pipeline per 4x4 block is: intra prediction (6 modes) ->
//! residual -> residual processing per the table above -> Rice coding into
//! an MSB-first bitstream. Everything is exactly invertible, so
//! `decode(encode(x)) == x` for every image and every system.
//!
//! The `examples/` directory is the best starting point; each example is a
//! small runnable tour of one capability:
//!
//! * `transform_roundtrip` — the i2i DCT against its floating-point twin
//! * `rotations` — lifting plane rotations and their exact inversion
//! * `intra_modes` — the six 4x4 intra predictors
//! * `rice_coding` — Rice codewords and the per-block parameter search
//! * `encode_decode` — full image round trips over all four systems
//! * `ar1_sweep` — coding gain as a function of residual correlation
//!
//! A thin command-line front end (`i2il`) exposes `encode`, `decode`,
//! `bench`, and `gen-ar1` subcommands on PGM images.

pub mod ar1;
pub mod bench;
pub mod block;
pub mod codec;
pub mod entropy;
pub mod intra;
pub mod pgm;
pub mod plane;
pub mod rdpcm;
pub mod synth;
pub mod transforms;

pub use block::{Block4x4, Stage};
pub use codec::{decode_image, encode_image, SystemId};
pub use plane::ImagePlane;
