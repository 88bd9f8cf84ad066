//! Rice coding of signed coefficients over an MSB-first bitstream.
//!
//! Values are mapped to non-negative integers (zigzag), split into a unary
//! quotient and a `k`-bit remainder, and written most significant bit first.
//! A quotient of 16 or more escapes to a raw 16-bit field so codeword length
//! stays bounded for the full coefficient range. The cost model below is
//! exact — the number of bits it predicts is the number of bits written —
//! which keeps encoder decisions reproducible bit for bit.

use thiserror::Error;

/// Unary quotients of this size and above are escaped.
pub const ESCAPE_QUOTIENT: u32 = 16;
/// Raw payload width of an escaped value.
pub const ESCAPE_PAYLOAD_BITS: u32 = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("bitstream truncated")]
pub struct Truncated;

/// MSB-first bit accumulator backed by a byte buffer.
#[derive(Debug, Default)]
pub struct BitWriter {
    buf: Vec<u8>,
    cur: u8,
    used: u8,
}

impl BitWriter {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn write_bit(&mut self, bit: bool) {
        self.cur = (self.cur << 1) | u8::from(bit);
        self.used += 1;
        if self.used == 8 {
            self.buf.push(self.cur);
            self.cur = 0;
            self.used = 0;
        }
    }

    /// Write the low `n` bits of `value`, most significant first.
    pub fn write_bits(&mut self, value: u32, n: u32) {
        debug_assert!(n <= 32);
        for i in (0..n).rev() {
            self.write_bit((value >> i) & 1 == 1);
        }
    }

    /// Total bits written so far.
    pub fn bit_len(&self) -> usize {
        self.buf.len() * 8 + usize::from(self.used)
    }

    /// Zero-pad to a byte boundary and return the buffer.
    pub fn finish(mut self) -> Vec<u8> {
        if self.used > 0 {
            self.buf.push(self.cur << (8 - self.used));
        }
        self.buf
    }
}

/// MSB-first bit cursor over a byte slice.
#[derive(Debug)]
pub struct BitReader<'a> {
    data: &'a [u8],
    pos: usize, // absolute bit index
}

impl<'a> BitReader<'a> {
    pub fn new(data: &'a [u8]) -> Self {
        Self { data, pos: 0 }
    }

    #[inline]
    pub fn read_bit(&mut self) -> Result<bool, Truncated> {
        let byte = self.pos / 8;
        if byte >= self.data.len() {
            return Err(Truncated);
        }
        let bit = (self.data[byte] >> (7 - self.pos % 8)) & 1;
        self.pos += 1;
        Ok(bit == 1)
    }

    pub fn read_bits(&mut self, n: u32) -> Result<u32, Truncated> {
        debug_assert!(n <= 32);
        let mut v = 0u32;
        for _ in 0..n {
            v = (v << 1) | u32::from(self.read_bit()?);
        }
        Ok(v)
    }

    /// Bits left before the end of the byte slice.
    pub fn bits_remaining(&self) -> usize {
        self.data.len() * 8 - self.pos
    }

    /// True if every bit from the cursor to the end of the stream is zero
    /// padding inside the final byte.
    pub fn remainder_is_padding(&self) -> bool {
        let rem = self.bits_remaining();
        if rem >= 8 {
            return false;
        }
        let mut probe = BitReader { data: self.data, pos: self.pos };
        for _ in 0..rem {
            if probe.read_bit() != Ok(false) {
                return false;
            }
        }
        true
    }
}

/// Rice parameter `k` in `[0, 7]`, serialized as 3 bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct RiceParam(u8);

impl RiceParam {
    pub const MAX: u8 = 7;

    pub fn new(k: u8) -> Self {
        assert!(k <= Self::MAX, "rice parameter out of range: {k}");
        Self(k)
    }

    pub fn k(self) -> u32 {
        u32::from(self.0)
    }

    pub fn bits(self) -> u8 {
        self.0
    }
}

/// Zigzag map to non-negative integers: `0, -1, 1, -2, 2, ...` becomes
/// `0, 1, 2, 3, 4, ...`.
#[inline]
pub fn signed_to_unsigned(v: i32) -> u32 {
    debug_assert!(v.abs() <= 1 << 15);
    if v >= 0 {
        (2 * v) as u32
    } else {
        (-2 * v - 1) as u32
    }
}

#[inline]
pub fn unsigned_to_signed(u: u32) -> i32 {
    if u % 2 == 0 {
        (u / 2) as i32
    } else {
        -(((u + 1) / 2) as i32)
    }
}

/// Exact bit length of the codeword [`rice_encode`] emits for `u`.
#[inline]
pub fn rice_cost(u: u32, k: RiceParam) -> u32 {
    let q = u >> k.k();
    if q < ESCAPE_QUOTIENT {
        q + 1 + k.k()
    } else {
        ESCAPE_QUOTIENT + ESCAPE_PAYLOAD_BITS
    }
}

/// Write one Rice codeword: unary quotient (`q` ones, one zero) followed by
/// the `k` low bits of `u`, or the escape form (16 ones, then `u` as a raw
/// 16-bit field) when the quotient reaches 16. Requires `u < 2^16`.
pub fn rice_encode(u: u32, k: RiceParam, w: &mut BitWriter) {
    debug_assert!(u < 1 << ESCAPE_PAYLOAD_BITS);
    let q = u >> k.k();
    if q < ESCAPE_QUOTIENT {
        for _ in 0..q {
            w.write_bit(true);
        }
        w.write_bit(false);
        w.write_bits(u, k.k());
    } else {
        for _ in 0..ESCAPE_QUOTIENT {
            w.write_bit(true);
        }
        w.write_bits(u, ESCAPE_PAYLOAD_BITS);
    }
}

/// Exact inverse of [`rice_encode`].
pub fn rice_decode(r: &mut BitReader<'_>, k: RiceParam) -> Result<u32, Truncated> {
    let mut q = 0u32;
    while q < ESCAPE_QUOTIENT {
        if !r.read_bit()? {
            return Ok((q << k.k()) | r.read_bits(k.k())?);
        }
        q += 1;
    }
    r.read_bits(ESCAPE_PAYLOAD_BITS)
}

/// Cost in bits of coding all 16 mapped coefficients with parameter `k`.
pub fn block_cost(values: &[i32; 16], k: RiceParam) -> u32 {
    values.iter().map(|&v| rice_cost(signed_to_unsigned(v), k)).sum()
}

/// Exhaustively pick the `k` minimizing the coded size of a coefficient
/// block; ties go to the smallest `k`. Returns the parameter and the exact
/// cost in bits.
pub fn choose_k(values: &[i32; 16]) -> (RiceParam, u32) {
    let mut best = (RiceParam::new(0), block_cost(values, RiceParam::new(0)));
    for k in 1..=RiceParam::MAX {
        let k = RiceParam::new(k);
        let cost = block_cost(values, k);
        if cost < best.1 {
            best = (k, cost);
        }
    }
    best
}
