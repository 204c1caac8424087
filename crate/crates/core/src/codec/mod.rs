//! Bit-exact serialization of compacted binary tries.
//!
//! File layout (`.ctrie`):
//!
//! | field      | encoding                                                        |
//! |------------|-----------------------------------------------------------------|
//! | magic      | 4 bytes `CTRI`                                                  |
//! | version    | 1 byte, `1`                                                     |
//! | n          | unsigned LEB128                                                 |
//! | T          | unsigned LEB128 (trie measure)                                  |
//! | structure  | `2n-1` bits, preorder, `1` internal / `0` external              |
//! | boundaries | Elias gamma of `|c|+1` for every node, preorder                 |
//! | payload    | all compacted paths concatenated in preorder, `T-2n+2` bits     |
//! | padding    | zero bits up to the next byte boundary                          |
//!
//! Bits are packed most-significant first within each byte, and preorder
//! visits child `0` before child `1`.

mod bits;
mod format;
mod report;

pub use bits::{gamma_len, read_leb128, write_leb128, BitReader, BitStream, BitWriter};
pub use format::{
    decode, decode_bytes, encode, measured_size_bits, CodecError, EncodedTrie, SectionSizes, MAGIC,
    VERSION,
};
pub use report::{bound_report, BoundReport};
