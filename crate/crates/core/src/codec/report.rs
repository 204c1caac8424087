use super::format::{encode, CodecError, SectionSizes};
use crate::trie::Trie;

/// Achieved encoded size set against the information bound
/// `T + log2 C(T, 2n-2)`.
///
/// The format spends one extra structure bit over a `2n-2`-bit tree code and
/// uses gamma codes instead of an enumerative code for the path boundaries,
/// so the measured size normally exceeds the bound.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub n: u64,
    pub measure: u64,
    pub bound_bits: f64,
    pub measured: SectionSizes,
}

impl BoundReport {
    pub fn measured_bits(&self) -> u64 {
        self.measured.total()
    }

    /// `measured / bound`; `None` when the bound is zero.
    pub fn ratio(&self) -> Option<f64> {
        (self.bound_bits > 0.0).then(|| self.measured_bits() as f64 / self.bound_bits)
    }

    pub fn overshoot_bits(&self) -> f64 {
        self.measured_bits() as f64 - self.bound_bits
    }
}

pub fn bound_report(trie: &Trie) -> Result<BoundReport, CodecError> {
    let encoded = encode(trie)?;
    let stats = trie.stats();
    let bound_bits = stats
        .space_bound_bits()
        .expect("stats of a binary trie always satisfy T >= 2n-2");
    Ok(BoundReport {
        n: stats.n,
        measure: stats.measure,
        bound_bits,
        measured: encoded.sizes(),
    })
}
