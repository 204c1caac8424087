//! Compacted tries built from prefix-free string sets.
//!
//! Nodes live in an arena in preorder (children visited in ascending symbol
//! order), so a [`NodeId`] is simply a preorder index. The arena layout is
//! what makes statistics a single forward pass: a node's parent always
//! precedes it.

use std::fmt;

use crate::strings::{Alphabet, StringSet, Symbol, SymbolString};

/// Preorder index of a node inside its [`Trie`]. Only meaningful for the
/// trie that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeId(usize);

impl NodeId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrieNode {
    compacted_path: SymbolString,
    children: Vec<(Symbol, NodeId)>,
    parent: Option<(NodeId, Symbol)>,
}

impl TrieNode {
    pub fn compacted_path(&self) -> &SymbolString {
        &self.compacted_path
    }

    /// Children in ascending symbol order, keyed by edge symbol.
    pub fn children(&self) -> &[(Symbol, NodeId)] {
        &self.children
    }

    pub fn child(&self, symbol: Symbol) -> Option<NodeId> {
        self.children
            .binary_search_by_key(&symbol, |&(s, _)| s)
            .ok()
            .map(|i| self.children[i].1)
    }

    /// Parent and the edge symbol leading here; `None` for the root.
    pub fn parent(&self) -> Option<(NodeId, Symbol)> {
        self.parent
    }

    pub fn degree(&self) -> usize {
        self.children.len()
    }

    pub fn is_external(&self) -> bool {
        self.children.is_empty()
    }
}

/// An immutable compacted trie.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trie {
    alphabet: Alphabet,
    nodes: Vec<TrieNode>,
    external_count: usize,
}

impl Trie {
    /// Builds the compacted trie of `set`.
    ///
    /// A singleton yields one external node carrying the whole string. Larger
    /// sets get a root labelled with their longest common prefix `p` and one
    /// child per symbol `a` such that `pa` prefixes some element, each built
    /// from the residual strings.
    pub fn build(set: &StringSet) -> Trie {
        struct Task {
            lo: usize,
            hi: usize,
            depth: usize,
            parent: Option<(NodeId, Symbol)>,
        }

        let strings = set.strings();
        let mut nodes: Vec<TrieNode> = Vec::with_capacity(2 * strings.len());
        let mut stack = vec![Task {
            lo: 0,
            hi: strings.len(),
            depth: 0,
            parent: None,
        }];

        while let Some(Task {
            lo,
            hi,
            depth,
            parent,
        }) = stack.pop()
        {
            let id = NodeId(nodes.len());
            if let Some((p, symbol)) = parent {
                nodes[p.0].children.push((symbol, id));
            }

            if hi - lo == 1 {
                nodes.push(TrieNode {
                    compacted_path: SymbolString::from(&strings[lo].symbols()[depth..]),
                    children: Vec::new(),
                    parent,
                });
                continue;
            }

            // The set is sorted, so the first and last residuals share exactly
            // the prefix common to the whole range.
            let first = &strings[lo].symbols()[depth..];
            let last = &strings[hi - 1].symbols()[depth..];
            let lcp = first.iter().zip(last).take_while(|(a, b)| a == b).count();
            let branch = depth + lcp;
            nodes.push(TrieNode {
                compacted_path: SymbolString::from(&first[..lcp]),
                children: Vec::new(),
                parent,
            });

            // Prefix-freeness guarantees every string in the range extends
            // past the branching position.
            let mut groups = Vec::new();
            let mut start = lo;
            while start < hi {
                let symbol = strings[start].symbols()[branch];
                let mut end = start + 1;
                while end < hi && strings[end].symbols()[branch] == symbol {
                    end += 1;
                }
                groups.push(Task {
                    lo: start,
                    hi: end,
                    depth: branch + 1,
                    parent: Some((id, symbol)),
                });
                start = end;
            }
            debug_assert!(groups.len() >= 2);
            stack.extend(groups.into_iter().rev());
        }

        Trie {
            alphabet: set.alphabet(),
            nodes,
            external_count: strings.len(),
        }
    }

    /// Assembles a trie from preorder node records `(compacted_path, child symbols)`.
    /// The caller guarantees a well-formed preorder shape.
    pub(crate) fn from_preorder(
        alphabet: Alphabet,
        records: Vec<(SymbolString, Vec<Symbol>)>,
    ) -> Trie {
        let mut nodes: Vec<TrieNode> = Vec::with_capacity(records.len());
        // Pending edges, innermost last: (parent, remaining child symbols reversed).
        let mut open: Vec<(NodeId, Vec<Symbol>)> = Vec::new();
        let mut external_count = 0;
        for (compacted_path, child_symbols) in records {
            let id = NodeId(nodes.len());
            let parent = loop {
                match open.last_mut() {
                    None => break None,
                    Some((p, pending)) => match pending.pop() {
                        Some(symbol) => break Some((*p, symbol)),
                        None => {
                            open.pop();
                        }
                    },
                }
            };
            if let Some((p, symbol)) = parent {
                nodes[p.0].children.push((symbol, id));
            }
            if child_symbols.is_empty() {
                external_count += 1;
            } else {
                open.push((id, child_symbols.iter().rev().copied().collect()));
            }
            nodes.push(TrieNode {
                compacted_path,
                children: Vec::new(),
                parent,
            });
        }
        Trie {
            alphabet,
            nodes,
            external_count,
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn root(&self) -> NodeId {
        NodeId(0)
    }

    /// # Panics
    ///
    /// Panics if `id` does not belong to this trie.
    pub fn node(&self, id: NodeId) -> &TrieNode {
        &self.nodes[id.0]
    }

    /// Nodes in preorder.
    pub fn nodes(&self) -> impl ExactSizeIterator<Item = (NodeId, &TrieNode)> + '_ {
        self.nodes.iter().enumerate().map(|(i, n)| (NodeId(i), n))
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Number of external nodes, i.e. the size of the source set.
    pub fn external_count(&self) -> usize {
        self.external_count
    }

    /// The path from the root to `id`, excluding `id` itself: the node's
    /// name.
    pub fn name(&self, id: NodeId) -> SymbolString {
        let mut pieces: Vec<(&SymbolString, Symbol)> = Vec::new();
        let mut cur = id;
        while let Some((parent, symbol)) = self.node(cur).parent {
            pieces.push((&self.node(parent).compacted_path, symbol));
            cur = parent;
        }
        let mut name = SymbolString::new();
        for (path, symbol) in pieces.into_iter().rev() {
            name.extend_from_slice(path.symbols());
            name.push(symbol);
        }
        name
    }

    /// The longest common prefix of the strings below `id`: its name
    /// followed by its compacted path.
    pub fn extent(&self, id: NodeId) -> SymbolString {
        let mut extent = self.name(id);
        extent.extend_from_slice(self.node(id).compacted_path.symbols());
        extent
    }

    /// Recovers the source set by reading the labelled root-to-leaf paths.
    pub fn strings(&self) -> StringSet {
        let mut out = Vec::with_capacity(self.external_count);
        // Preorder with ascending children visits leaves in lexicographic
        // order, so the extents come out sorted.
        let mut prefix: Vec<Symbol> = Vec::new();
        let mut marks: Vec<usize> = Vec::with_capacity(self.nodes.len());
        for node in &self.nodes {
            match node.parent {
                None => prefix.clear(),
                Some((parent, symbol)) => {
                    prefix.truncate(marks[parent.0]);
                    prefix.push(symbol);
                }
            }
            prefix.extend_from_slice(node.compacted_path.symbols());
            marks.push(prefix.len());
            if node.is_external() {
                out.push(SymbolString::from(prefix.as_slice()));
            }
        }
        StringSet::from_sorted_unchecked(self.alphabet, out)
    }
}

/// Same as [`Trie::build`].
pub fn build_trie(set: &StringSet) -> Trie {
    Trie::build(set)
}
