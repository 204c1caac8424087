/// A finished bit sequence with an exact length, stored MSB-first.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BitStream {
    bytes: Vec<u8>,
    bit_len: u64,
}

impl BitStream {
    pub fn bit_len(&self) -> u64 {
        self.bit_len
    }

    /// Backing bytes; bits past `bit_len` in the last byte are zero.
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.bytes
    }

    pub fn reader(&self) -> BitReader<'_> {
        BitReader::with_len(&self.bytes, self.bit_len)
    }
}

#[derive(Debug, Default)]
pub struct BitWriter {
    bytes: Vec<u8>,
    bit_len: u64,
}

impl BitWriter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bit_len(&self) -> u64 {
        self.bit_len
    }

    pub fn push(&mut self, bit: bool) {
        let offset = (self.bit_len % 8) as u8;
        if offset == 0 {
            self.bytes.push(0);
        }
        if bit {
            *self.bytes.last_mut().unwrap() |= 0x80 >> offset;
        }
        self.bit_len += 1;
    }

    /// Writes the low `count` bits of `value`, most significant first.
    pub fn write_bits(&mut self, value: u64, count: u32) {
        debug_assert!(count <= 64);
        for i in (0..count).rev() {
            self.push((value >> i) & 1 == 1);
        }
    }

    /// Elias gamma: `floor(log2 x)` zeros, then `x` in binary.
    ///
    /// # Panics
    ///
    /// Panics if `value` is zero.
    pub fn write_gamma(&mut self, value: u64) {
        assert!(value != 0, "gamma codes start at 1");
        let width = 64 - value.leading_zeros();
        self.write_bits(0, width - 1);
        self.write_bits(value, width);
    }

    pub fn finish(self) -> BitStream {
        BitStream {
            bytes: self.bytes,
            bit_len: self.bit_len,
        }
    }
}

/// Length in bits of the gamma code of `value` (nonzero).
pub fn gamma_len(value: u64) -> u64 {
    debug_assert!(value != 0);
    2 * (63 - value.leading_zeros() as u64) + 1
}

#[derive(Debug, Clone)]
pub struct BitReader<'a> {
    bytes: &'a [u8],
    pos: u64,
    len: u64,
}

impl<'a> BitReader<'a> {
    pub fn new(bytes: &'a [u8]) -> Self {
        Self::with_len(bytes, bytes.len() as u64 * 8)
    }

    pub fn with_len(bytes: &'a [u8], len: u64) -> Self {
        debug_assert!(len <= bytes.len() as u64 * 8);
        BitReader { bytes, pos: 0, len }
    }

    pub fn position(&self) -> u64 {
        self.pos
    }

    pub fn remaining(&self) -> u64 {
        self.len - self.pos
    }

    pub fn read_bit(&mut self) -> Option<bool> {
        if self.pos >= self.len {
            return None;
        }
        let byte = self.bytes[(self.pos / 8) as usize];
        let bit = byte & (0x80 >> (self.pos % 8)) != 0;
        self.pos += 1;
        Some(bit)
    }

    pub fn read_bits(&mut self, count: u32) -> Option<u64> {
        if self.remaining() < count as u64 {
            return None;
        }
        let mut value = 0;
        for _ in 0..count {
            value = (value << 1) | self.read_bit()? as u64;
        }
        Some(value)
    }

    /// Reads one gamma code. `None` on end of stream or when the code would
    /// not fit in 64 bits.
    pub fn read_gamma(&mut self) -> Option<u64> {
        let mut zeros = 0;
        while !self.read_bit()? {
            zeros += 1;
            if zeros > 63 {
                return None;
            }
        }
        let low = self.read_bits(zeros)?;
        Some((1u64 << zeros) | low)
    }
}

pub fn write_leb128(out: &mut Vec<u8>, mut value: u64) {
    loop {
        let byte = (value & 0x7f) as u8;
        value >>= 7;
        if value == 0 {
            out.push(byte);
            return;
        }
        out.push(byte | 0x80);
    }
}

/// Decodes an unsigned LEB128 value, returning it with the number of bytes
/// consumed. `None` if the input ends early or overflows 64 bits.
pub fn read_leb128(bytes: &[u8]) -> Option<(u64, usize)> {
    let mut value = 0u64;
    for (i, &byte) in bytes.iter().enumerate().take(10) {
        let low = (byte & 0x7f) as u64;
        if i == 9 && low > 1 {
            return None;
        }
        value |= low << (7 * i);
        if byte & 0x80 == 0 {
            return Some((value, i + 1));
        }
    }
    None
}
