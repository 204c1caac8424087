use std::collections::BTreeMap;

use crate::strings::{StringSet, Symbol};

#[derive(Debug, Clone, Default)]
struct PlainNode {
    children: BTreeMap<Symbol, usize>,
    terminal: bool,
}

/// The standard trie with one node per distinct prefix of the set.
#[derive(Debug, Clone)]
pub struct UncompactedTrie {
    nodes: Vec<PlainNode>,
}

impl UncompactedTrie {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> u64 {
        self.nodes.len() as u64 - 1
    }

    pub fn leaf_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.children.is_empty()).count()
    }

    pub fn terminal_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.terminal).count()
    }

    /// Whether the terminal nodes are exactly the leaves.
    pub fn terminals_are_leaves(&self) -> bool {
        self.nodes
            .iter()
            .all(|n| n.terminal == n.children.is_empty())
    }

    /// Classical external and internal path lengths of the plain tree:
    /// depth sums over leaves and over branching nodes. Only meaningful when
    /// the tree has no unary nodes.
    pub fn path_lengths(&self) -> (u64, u64) {
        let mut external = 0;
        let mut internal = 0;
        let mut stack = vec![(0usize, 0u64)];
        while let Some((id, depth)) = stack.pop() {
            let node = &self.nodes[id];
            if node.children.is_empty() {
                external += depth;
            } else {
                internal += depth;
            }
            stack.extend(node.children.values().map(|&c| (c, depth + 1)));
        }
        (external, internal)
    }

    /// Whether every non-leaf node has at least two children.
    pub fn is_branching(&self) -> bool {
        self.nodes.iter().all(|n| n.children.len() != 1)
    }
}

pub fn build_uncompacted(set: &StringSet) -> UncompactedTrie {
    let mut nodes = vec![PlainNode::default()];
    for s in set.strings() {
        let mut cur = 0;
        for &symbol in s.symbols() {
            let next = nodes.len();
            cur = *nodes[cur].children.entry(symbol).or_insert(next);
            if cur == next {
                nodes.push(PlainNode::default());
            }
        }
        nodes[cur].terminal = true;
    }
    UncompactedTrie { nodes }
}

pub fn edge_count(trie: &UncompactedTrie) -> u64 {
    trie.edge_count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sets() {
        let u = build_uncompacted(&StringSet::from_bits(&["0", "1"]).unwrap());
        assert_eq!((u.node_count(), edge_count(&u)), (3, 2));

        let u = build_uncompacted(&StringSet::from_bits(&["00", "01", "10", "11"]).unwrap());
        assert_eq!((u.node_count(), edge_count(&u)), (7, 6));
        assert_eq!(u.path_lengths(), (8, 2));
        assert!(u.is_branching());

        let u = build_uncompacted(&StringSet::from_bits(&["0110"]).unwrap());
        assert_eq!(edge_count(&u), 4);
        assert!(u.terminals_are_leaves());
        assert!(!u.is_branching());
    }

    #[test]
    fn fig1_edges() {
        let set =
            StringSet::from_bits(&["001001010", "00100110100100010", "001001101001001"]).unwrap();
        let u = build_uncompacted(&set);
        assert_eq!(edge_count(&u), 21);
        assert_eq!(u.leaf_count(), 3);
        assert_eq!(u.terminal_count(), 3);
    }
}
