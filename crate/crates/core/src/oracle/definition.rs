use std::collections::{BTreeMap, BTreeSet};

use crate::stats::TrieStats;
use crate::strings::{StringSet, Symbol};

/// Computes the trie statistics straight from the definitions.
///
/// The compacted nodes are the prefixes that are either elements of the set
/// or branch (are followed by at least two distinct symbols). Each extent is
/// recomputed as the longest common prefix of the strings it prefixes, and a
/// node's name is its nearest node ancestor's extent plus one edge symbol.
pub fn stats_by_definition(set: &StringSet) -> TrieStats {
    let strings: Vec<&[Symbol]> = set.strings().iter().map(|s| s.symbols()).collect();
    let members: BTreeSet<&[Symbol]> = strings.iter().copied().collect();

    let mut prefixes: BTreeSet<&[Symbol]> = BTreeSet::new();
    for s in &strings {
        for k in 0..=s.len() {
            prefixes.insert(&s[..k]);
        }
    }

    // node prefix -> (extent length, degree)
    let mut nodes: BTreeMap<&[Symbol], (usize, usize)> = BTreeMap::new();
    for &p in &prefixes {
        let below: Vec<&[Symbol]> = strings
            .iter()
            .copied()
            .filter(|s| s.starts_with(p))
            .collect();
        let next: BTreeSet<Symbol> = below
            .iter()
            .filter(|s| s.len() > p.len())
            .map(|s| s[p.len()])
            .collect();
        if !members.contains(p) && next.len() < 2 {
            continue;
        }
        let extent = below[1..].iter().fold(below[0].len(), |acc, s| {
            acc.min(
                below[0]
                    .iter()
                    .zip(s.iter())
                    .take_while(|(a, b)| a == b)
                    .count(),
            )
        });
        nodes.insert(p, (extent, next.len()));
    }

    let sigma = set.alphabet().sigma();
    let mut extent_by_degree = vec![0u64; sigma as usize + 1];
    let mut nodes_by_degree = vec![0u64; sigma as usize + 1];
    let mut measure = 0u64;
    for (&p, &(extent, degree)) in &nodes {
        let name = (0..p.len())
            .rev()
            .find_map(|k| {
                nodes
                    .get(&p[..k])
                    .map(|&(parent_extent, _)| parent_extent + 1)
            })
            .unwrap_or(0);
        let compacted = extent - name;
        measure += compacted as u64 + 1;
        extent_by_degree[degree] += extent as u64;
        nodes_by_degree[degree] += 1;
    }

    TrieStats {
        sigma,
        n: strings.len() as u64,
        external_extents: extent_by_degree[0],
        internal_extents: extent_by_degree[1..].iter().sum(),
        measure: measure - 1,
        extent_by_degree,
        nodes_by_degree,
    }
}
