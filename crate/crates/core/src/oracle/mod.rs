//! Independent reference implementations and random instance generation.
//!
//! Nothing here reuses the compacted-trie code paths: the uncompacted trie
//! and the definition-level statistics are built directly from the strings,
//! so they can serve as oracles for [`crate::trie`] and [`crate::stats`].

mod definition;
mod generate;
mod uncompacted;

pub use definition::stats_by_definition;
pub use generate::{
    generate_complete_code, generate_prefix_free, linear_trie_set, GeneratorConfig, GeneratorError,
};
pub use uncompacted::{build_uncompacted, edge_count, UncompactedTrie};
