//! Exact checks of the extent identities and the average-extent bound.
//!
//! Every check is integer arithmetic; the identities are exact theorems, so a
//! false result means the statistics (or the code producing them) are wrong.

use crate::stats::{StatsError, TrieStats};

/// Checks `E = I + T` for a binary trie.
pub fn verify_binary_identity(st: &TrieStats) -> Result<bool, StatsError> {
    if st.sigma != 2 {
        return Err(StatsError::NotBinary { sigma: st.sigma });
    }
    Ok(st.external_extents as u128 == st.internal_extents as u128 + st.measure as u128)
}

/// Outcome of the generalized identity check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneralIdentity {
    /// `Y(0) = sum_{d>=2} (d-1) Y(d) + T`
    pub extent_identity: bool,
    /// `sum_{d>=2} (d-1) n(d) = n(0) - 1`
    pub degree_identity: bool,
}

impl GeneralIdentity {
    pub fn holds(self) -> bool {
        self.extent_identity && self.degree_identity
    }
}

/// Checks the identity for tries over any alphabet, together with the
/// degree-count identity it relies on.
pub fn verify_general_identity(st: &TrieStats) -> GeneralIdentity {
    let weighted = |table: &[u64]| -> u128 {
        table
            .iter()
            .enumerate()
            .skip(2)
            .map(|(d, &v)| (d as u128 - 1) * v as u128)
            .sum()
    };
    let y0 = st.extent_by_degree.first().copied().unwrap_or(0) as u128;
    let n0 = st.nodes_by_degree.first().copied().unwrap_or(0) as u128;
    // Degree 1 never occurs in a compacted trie; a nonzero count is a defect.
    let no_unary = st.nodes_by_degree.get(1).copied().unwrap_or(0) == 0;
    GeneralIdentity {
        extent_identity: y0 == weighted(&st.extent_by_degree) + st.measure as u128,
        degree_identity: no_unary && n0 >= 1 && weighted(&st.nodes_by_degree) == n0 - 1,
    }
}

/// Checks `I/(n-1) <= E/n - 3/2 + 1/n` by cross-multiplication:
/// `2 n I <= (n-1)(2E - 3n + 2)`.
pub fn verify_corollary_bound(st: &TrieStats) -> Result<bool, StatsError> {
    if st.n < 2 {
        return Err(StatsError::TooFewStrings { n: st.n });
    }
    let n = st.n as i128;
    let e = st.external_extents as i128;
    let i = st.internal_extents as i128;
    Ok(2 * n * i <= (n - 1) * (2 * e - 3 * n + 2))
}
