//! Extent-based statistics of a compacted trie.

use thiserror::Error;

use crate::trie::Trie;

/// Extent statistics of a compacted trie.
///
/// All fields are exact integers. Per-degree tables are indexed by child
/// count `d` in `0..=sigma`; index 1 is always zero since internal nodes
/// branch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrieStats {
    pub sigma: u32,
    /// Number of external nodes (the set size `n`).
    pub n: u64,
    /// Sum of external extent lengths; equals the total length of the set.
    pub external_extents: u64,
    /// Sum of internal extent lengths.
    pub internal_extents: u64,
    /// Trie measure: sum over all nodes of `|compacted path| + 1`, minus one.
    pub measure: u64,
    /// `extent_by_degree[d]`: sum of extent lengths of nodes with `d` children.
    pub extent_by_degree: Vec<u64>,
    /// `nodes_by_degree[d]`: number of nodes with `d` children.
    pub nodes_by_degree: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum StatsError {
    #[error("statistics are over an alphabet of size {sigma}; a binary alphabet is required")]
    NotBinary { sigma: u32 },
    #[error("bound requires at least two strings, got {n}")]
    TooFewStrings { n: u64 },
    #[error("trie measure {measure} is below 2n-2 for n = {n}; statistics are corrupt")]
    MeasureTooSmall { measure: u64, n: u64 },
}

impl TrieStats {
    /// Average string length as the exact pair `(E, n)`.
    pub fn ell_exact(&self) -> (u64, u64) {
        (self.external_extents, self.n)
    }

    pub fn ell(&self) -> f64 {
        self.external_extents as f64 / self.n as f64
    }

    /// Total length of all compacted paths, `T - (node count - 1)`.
    pub fn compacted_path_total(&self) -> u64 {
        let nodes: u64 = self.nodes_by_degree.iter().sum();
        self.measure + 1 - nodes
    }

    /// Information bound `T + log2 C(T, 2n-2)` in bits for a binary trie.
    ///
    /// The binomial is evaluated as a sum of `log2` ratios over the smaller
    /// of `k` and `T - k`, which keeps the absolute error far below 1e-9 bits
    /// for tries of any practical size.
    pub fn space_bound_bits(&self) -> Result<f64, StatsError> {
        if self.sigma != 2 {
            return Err(StatsError::NotBinary { sigma: self.sigma });
        }
        let structure = 2 * self.n - 2;
        if self.measure < structure {
            return Err(StatsError::MeasureTooSmall {
                measure: self.measure,
                n: self.n,
            });
        }
        Ok(self.measure as f64 + log2_binomial(self.measure, structure))
    }
}

/// `log2 C(n, k)` for `k <= n`.
pub fn log2_binomial(n: u64, k: u64) -> f64 {
    assert!(k <= n, "C({n}, {k}) is not defined");
    let k = k.min(n - k);
    // Pair numerator and denominator factors to keep each term small.
    (1..=k)
        .map(|i| ((n - k + i) as f64 / i as f64).log2())
        .sum()
}

impl Trie {
    /// Computes all statistics in one preorder pass.
    pub fn stats(&self) -> TrieStats {
        let sigma = self.alphabet().sigma();
        let width = sigma as usize + 1;
        let mut extent_by_degree = vec![0u64; width];
        let mut nodes_by_degree = vec![0u64; width];
        let mut extent_len: Vec<u64> = Vec::with_capacity(self.node_count());
        let mut measure = 0u64;

        for (_, node) in self.nodes() {
            let name_len = match node.parent() {
                None => 0,
                Some((parent, _)) => extent_len[parent.index()] + 1,
            };
            let c = node.compacted_path().len() as u64;
            let len = name_len + c;
            extent_len.push(len);
            measure += c + 1;
            let d = node.degree();
            extent_by_degree[d] += len;
            nodes_by_degree[d] += 1;
        }

        // Each node contributes |c| + 1, the root has no incoming edge.
        measure -= 1;
        let external_extents = extent_by_degree[0];
        TrieStats {
            sigma,
            n: self.external_count() as u64,
            external_extents,
            internal_extents: extent_by_degree[1..].iter().sum(),
            measure,
            extent_by_degree,
            nodes_by_degree,
        }
    }
}
