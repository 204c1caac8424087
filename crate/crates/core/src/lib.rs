//! Compacted tries over finite alphabets.
//!
//! Builds the compacted trie of a prefix-free string set, computes its
//! extent statistics (external and internal extent sums, the trie measure,
//! and per-degree tables), checks the exact identities that relate them, and
//! serializes binary tries with a compact bit-level codec.
//!
//! ```
//! use trie_extent::{verify_binary_identity, StringSet, Trie};
//!
//! let set = StringSet::from_bits(&["001001010", "00100110100100010", "001001101001001"]).unwrap();
//! let stats = Trie::build(&set).stats();
//! assert_eq!((stats.external_extents, stats.internal_extents, stats.measure), (41, 20, 21));
//! assert!(verify_binary_identity(&stats).unwrap());
//! ```

pub mod codec;
pub mod oracle;
pub mod stats;
pub mod strings;
pub mod trie;
pub mod verify;

pub use stats::{log2_binomial, StatsError, TrieStats};
pub use strings::{Alphabet, StringSet, StringSetError, Symbol, SymbolString};
pub use trie::{build_trie, NodeId, Trie, TrieNode};
pub use verify::{
    verify_binary_identity, verify_corollary_bound, verify_general_identity, GeneralIdentity,
};
