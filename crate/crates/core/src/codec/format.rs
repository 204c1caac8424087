use thiserror::Error;

use super::bits::{read_leb128, write_leb128, BitReader, BitWriter};
use crate::strings::{Alphabet, Symbol, SymbolString};
use crate::trie::Trie;

pub const MAGIC: [u8; 4] = *b"CTRI";
pub const VERSION: u8 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("codec is binary-only; trie alphabet has {sigma} symbols")]
    NotBinary { sigma: u32 },
    #[error("bad magic bytes, not a .ctrie stream")]
    BadMagic,
    #[error("unsupported version {0}")]
    UnsupportedVersion(u8),
    #[error("malformed header: {0}")]
    BadHeader(&'static str),
    #[error("structure bits do not form a binary tree with {n} external nodes (at bit {at})")]
    InvalidShape { n: u64, at: u64 },
    #[error("boundary section ended after {decoded} of {expected} codes")]
    BoundaryUnderflow { decoded: u64, expected: u64 },
    #[error("compacted paths total {actual} bits but the header implies {expected}")]
    PayloadLengthMismatch { expected: u64, actual: u64 },
    #[error("payload needs {needed} bits but only {available} remain")]
    PayloadUnderflow { needed: u64, available: u64 },
    #[error("padding bits are not all zero")]
    NonzeroPadding,
    #[error("{0} trailing bytes after the padded stream")]
    TrailingBytes(u64),
}

/// Bit counts of the three body sections; header and padding excluded.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SectionSizes {
    pub structure: u64,
    pub boundaries: u64,
    pub payload: u64,
}

impl SectionSizes {
    pub fn total(&self) -> u64 {
        self.structure + self.boundaries + self.payload
    }
}

/// A validated `.ctrie` byte stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodedTrie {
    n: u64,
    measure: u64,
    header_len: usize,
    sizes: SectionSizes,
    bytes: Vec<u8>,
}

impl EncodedTrie {
    /// Validates a full `.ctrie` stream.
    pub fn from_bytes(bytes: Vec<u8>) -> Result<Self, CodecError> {
        let scan = scan(&bytes)?;
        Ok(EncodedTrie {
            n: scan.n,
            measure: scan.measure,
            header_len: scan.header_len,
            sizes: scan.sizes,
            bytes,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn measure(&self) -> u64 {
        self.measure
    }

    pub fn header_len(&self) -> usize {
        self.header_len
    }

    pub fn sizes(&self) -> SectionSizes {
        self.sizes
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.bytes
    }
}

pub fn encode(trie: &Trie) -> Result<EncodedTrie, CodecError> {
    let sigma = trie.alphabet().sigma();
    if sigma != 2 {
        return Err(CodecError::NotBinary { sigma });
    }
    let n = trie.external_count() as u64;
    let measure: u64 = trie
        .nodes()
        .map(|(_, node)| node.compacted_path().len() as u64 + 1)
        .sum::<u64>()
        - 1;

    let mut bytes = MAGIC.to_vec();
    bytes.push(VERSION);
    write_leb128(&mut bytes, n);
    write_leb128(&mut bytes, measure);
    let header_len = bytes.len();

    let mut w = BitWriter::new();
    for (_, node) in trie.nodes() {
        w.push(!node.is_external());
    }
    let structure = w.bit_len();
    for (_, node) in trie.nodes() {
        w.write_gamma(node.compacted_path().len() as u64 + 1);
    }
    let boundaries = w.bit_len() - structure;
    for (_, node) in trie.nodes() {
        for &symbol in node.compacted_path().symbols() {
            w.push(symbol == 1);
        }
    }
    let payload = w.bit_len() - structure - boundaries;
    bytes.extend_from_slice(w.finish().as_bytes());

    Ok(EncodedTrie {
        n,
        measure,
        header_len,
        sizes: SectionSizes {
            structure,
            boundaries,
            payload,
        },
        bytes,
    })
}

pub fn decode(encoded: &EncodedTrie) -> Result<Trie, CodecError> {
    decode_bytes(&encoded.bytes)
}

pub fn decode_bytes(bytes: &[u8]) -> Result<Trie, CodecError> {
    let scan = scan(bytes)?;
    Ok(Trie::from_preorder(Alphabet::BINARY, scan.records))
}

pub fn measured_size_bits(encoded: &EncodedTrie) -> SectionSizes {
    encoded.sizes
}

struct Scan {
    n: u64,
    measure: u64,
    header_len: usize,
    sizes: SectionSizes,
    records: Vec<(SymbolString, Vec<Symbol>)>,
}

fn scan(bytes: &[u8]) -> Result<Scan, CodecError> {
    if bytes.len() < 4 || bytes[..4] != MAGIC {
        return Err(CodecError::BadMagic);
    }
    match bytes.get(4) {
        None => return Err(CodecError::BadHeader("missing version byte")),
        Some(&VERSION) => {}
        Some(&v) => return Err(CodecError::UnsupportedVersion(v)),
    }
    let mut offset = 5;
    let (n, used) = read_leb128(&bytes[offset..]).ok_or(CodecError::BadHeader("bad n varint"))?;
    offset += used;
    let (measure, used) =
        read_leb128(&bytes[offset..]).ok_or(CodecError::BadHeader("bad measure varint"))?;
    offset += used;
    if n == 0 {
        return Err(CodecError::BadHeader("n must be positive"));
    }
    let node_count = n
        .checked_mul(2)
        .map(|x| x - 1)
        .ok_or(CodecError::BadHeader("n too large"))?;
    if measure < node_count - 1 {
        return Err(CodecError::BadHeader("measure below 2n-2"));
    }
    let header_len = offset;
    let mut r = BitReader::new(&bytes[header_len..]);

    // Preorder shape: `open` counts subtrees still to be read.
    let mut internal = Vec::new();
    let mut open: u64 = 1;
    for i in 0..node_count {
        if open == 0 {
            return Err(CodecError::InvalidShape { n, at: i });
        }
        let bit = r.read_bit().ok_or(CodecError::InvalidShape { n, at: i })?;
        open = open - 1 + if bit { 2 } else { 0 };
        internal.push(bit);
    }
    if open != 0 {
        return Err(CodecError::InvalidShape { n, at: node_count });
    }
    let structure = r.position();

    let mut lengths = Vec::with_capacity(internal.len());
    for decoded in 0..node_count {
        let code = r.read_gamma().ok_or(CodecError::BoundaryUnderflow {
            decoded,
            expected: node_count,
        })?;
        lengths.push(code - 1);
    }
    let boundaries = r.position() - structure;

    let expected = measure - (node_count - 1);
    let actual = lengths
        .iter()
        .try_fold(0u64, |acc, &l| acc.checked_add(l))
        .unwrap_or(u64::MAX);
    if actual != expected {
        return Err(CodecError::PayloadLengthMismatch { expected, actual });
    }
    if r.remaining() < expected {
        return Err(CodecError::PayloadUnderflow {
            needed: expected,
            available: r.remaining(),
        });
    }

    let mut records = Vec::with_capacity(internal.len());
    for (&is_internal, &len) in internal.iter().zip(&lengths) {
        let path: SymbolString = (0..len)
            .map(|_| {
                r.read_bit()
                    .map(Symbol::from)
                    .expect("payload length checked")
            })
            .collect();
        let children = if is_internal { vec![0, 1] } else { Vec::new() };
        records.push((path, children));
    }
    let payload = r.position() - structure - boundaries;

    let rest = r.remaining();
    if rest >= 8 {
        return Err(CodecError::TrailingBytes(rest / 8));
    }
    if r.read_bits(rest as u32) != Some(0) {
        return Err(CodecError::NonzeroPadding);
    }

    Ok(Scan {
        n,
        measure,
        header_len,
        sizes: SectionSizes {
            structure,
            boundaries,
            payload,
        },
        records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strings::StringSet;

    /// Packs a `0`/`1` text into MSB-first bytes, zero padded.
    fn pack(bits: &str) -> Vec<u8> {
        let bits: Vec<u8> = bits
            .bytes()
            .filter(|b| *b != b' ')
            .map(|b| b - b'0')
            .collect();
        bits.chunks(8)
            .map(|chunk| {
                chunk
                    .iter()
                    .enumerate()
                    .fold(0u8, |acc, (i, &b)| acc | (b << (7 - i)))
            })
            .collect()
    }

    fn header(n: u8, t: u8) -> Vec<u8> {
        let mut h = b"CTRI".to_vec();
        h.extend([1, n, t]);
        h
    }

    fn trie(bits: &[&str]) -> Trie {
        Trie::build(&StringSet::from_bits(bits).unwrap())
    }

    #[test]
    fn singleton_bytes() {
        let e = encode(&trie(&["01"])).unwrap();
        let mut expected = header(1, 2);
        expected.extend(pack("0 011 01"));
        assert_eq!(e.as_bytes(), expected);
        assert_eq!(
            measured_size_bits(&e),
            SectionSizes {
                structure: 1,
                boundaries: 3,
                payload: 2
            }
        );
    }

    #[test]
    fn two_leaves_bytes() {
        let e = encode(&trie(&["0", "1"])).unwrap();
        let mut expected = header(2, 2);
        expected.extend(pack("100 111"));
        assert_eq!(e.as_bytes(), expected);
        assert_eq!(measured_size_bits(&e).total(), 6);
    }

    #[test]
    fn fig1_bytes() {
        let t = trie(&["001001010", "00100110100100010", "001001101001001"]);
        let e = encode(&t).unwrap();
        let mut expected = header(3, 21);
        expected.extend(pack("10100 00111 011 0001000 011 1 001001 10 0100100 10 "));
        assert_eq!(e.as_bytes(), expected);
        let sizes = measured_size_bits(&e);
        assert_eq!(
            sizes,
            SectionSizes {
                structure: 5,
                boundaries: 19,
                payload: 17
            }
        );
        assert_eq!(decode(&e).unwrap(), t);
        assert_eq!(EncodedTrie::from_bytes(e.as_bytes().to_vec()).unwrap(), e);
    }

    #[test]
    fn empty_string_singleton_round_trip() {
        let t = trie(&[""]);
        let e = encode(&t).unwrap();
        assert_eq!(e.sizes().total(), 2);
        assert_eq!(decode(&e).unwrap(), t);
    }

    #[test]
    fn rejects_non_binary() {
        let set = StringSet::new(
            Alphabet::new(3).unwrap(),
            vec![vec![0].into(), vec![1].into(), vec![2].into()],
        )
        .unwrap();
        assert_eq!(
            encode(&Trie::build(&set)).unwrap_err(),
            CodecError::NotBinary { sigma: 3 }
        );
    }

    #[test]
    fn header_errors() {
        assert_eq!(decode_bytes(b"CTR").unwrap_err(), CodecError::BadMagic);
        assert_eq!(
            decode_bytes(b"XTRI\x01\x01\x00\x00").unwrap_err(),
            CodecError::BadMagic
        );
        assert_eq!(
            decode_bytes(b"CTRI\x02\x01\x00\x00").unwrap_err(),
            CodecError::UnsupportedVersion(2)
        );
        assert!(matches!(
            decode_bytes(b"CTRI\x01").unwrap_err(),
            CodecError::BadHeader(_)
        ));
        assert!(matches!(
            decode_bytes(b"CTRI\x01\x00\x00\x00").unwrap_err(),
            CodecError::BadHeader(_)
        ));
        assert!(matches!(
            decode_bytes(b"CTRI\x01\x03\x01\x00").unwrap_err(),
            CodecError::BadHeader(_)
        ));
    }

    #[test]
    fn invalid_shape() {
        // Two internals and one external cannot close a binary tree.
        let mut bytes = header(2, 2);
        bytes.extend(pack("110 111"));
        assert!(matches!(
            decode_bytes(&bytes).unwrap_err(),
            CodecError::InvalidShape { n: 2, .. }
        ));
        // Tree closes after one bit but three were declared.
        let mut bytes = header(2, 2);
        bytes.extend(pack("010 111"));
        assert_eq!(
            decode_bytes(&bytes).unwrap_err(),
            CodecError::InvalidShape { n: 2, at: 1 }
        );
    }

    #[test]
    fn truncated_payload() {
        let t = trie(&["001001010", "00100110100100010", "001001101001001"]);
        let bytes = encode(&t).unwrap().into_bytes();
        let short = &bytes[..bytes.len() - 1];
        assert_eq!(
            decode_bytes(short).unwrap_err(),
            CodecError::PayloadUnderflow {
                needed: 17,
                available: 16
            }
        );
    }

    #[test]
    fn truncated_boundaries() {
        let t = trie(&["001001010", "00100110100100010", "001001101001001"]);
        let bytes = encode(&t).unwrap().into_bytes();
        assert!(matches!(
            decode_bytes(&bytes[..header(3, 21).len() + 1]).unwrap_err(),
            CodecError::BoundaryUnderflow { expected: 5, .. }
        ));
    }

    #[test]
    fn payload_length_mismatch() {
        // {"01"} but header claims T = 3.
        let mut bytes = header(1, 3);
        bytes.extend(pack("0 011 01"));
        assert_eq!(
            decode_bytes(&bytes).unwrap_err(),
            CodecError::PayloadLengthMismatch {
                expected: 3,
                actual: 2
            }
        );
    }

    #[test]
    fn padding_errors() {
        let mut bytes = header(1, 2);
        bytes.extend(pack("0 011 01 01"));
        assert_eq!(
            decode_bytes(&bytes).unwrap_err(),
            CodecError::NonzeroPadding
        );
        let mut bytes = header(1, 2);
        bytes.extend(pack("0 011 01"));
        bytes.push(0);
        assert_eq!(
            decode_bytes(&bytes).unwrap_err(),
            CodecError::TrailingBytes(1)
        );
    }
}
