//! Alphabets, symbol strings and validated prefix-free string sets.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// A symbol id. Symbols of an alphabet of size `sigma` are `0..sigma`.
pub type Symbol = u32;

/// A finite alphabet of `sigma` dense symbol ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet {
    sigma: u32,
}

impl Alphabet {
    /// The two-symbol alphabet.
    pub const BINARY: Alphabet = Alphabet { sigma: 2 };

    pub fn new(sigma: u32) -> Result<Self, StringSetError> {
        if sigma == 0 {
            return Err(StringSetError::EmptyAlphabet);
        }
        Ok(Alphabet { sigma })
    }

    pub fn sigma(self) -> u32 {
        self.sigma
    }

    pub fn is_binary(self) -> bool {
        self.sigma == 2
    }

    pub fn contains(self, symbol: Symbol) -> bool {
        symbol < self.sigma
    }
}

/// A finite sequence of symbols. The empty string is a valid value.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymbolString(Vec<Symbol>);

impl SymbolString {
    pub fn new() -> Self {
        SymbolString(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn push(&mut self, symbol: Symbol) {
        self.0.push(symbol);
    }

    pub fn extend_from_slice(&mut self, symbols: &[Symbol]) {
        self.0.extend_from_slice(symbols);
    }

    pub fn is_prefix_of(&self, other: &SymbolString) -> bool {
        other.0.starts_with(&self.0)
    }

    /// Parses a string of `0`/`1` characters.
    pub fn from_bits(bits: &str) -> Option<Self> {
        bits.chars()
            .map(|c| match c {
                '0' => Some(0),
                '1' => Some(1),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(SymbolString)
    }

    pub fn into_vec(self) -> Vec<Symbol> {
        self.0
    }
}

impl From<Vec<Symbol>> for SymbolString {
    fn from(symbols: Vec<Symbol>) -> Self {
        SymbolString(symbols)
    }
}

impl From<&[Symbol]> for SymbolString {
    fn from(symbols: &[Symbol]) -> Self {
        SymbolString(symbols.to_vec())
    }
}

impl FromIterator<Symbol> for SymbolString {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        SymbolString(iter.into_iter().collect())
    }
}

impl AsRef<[Symbol]> for SymbolString {
    fn as_ref(&self) -> &[Symbol] {
        &self.0
    }
}

/// Binary strings print as `0`/`1` runs; wider alphabets print as
/// dot-separated ids.
impl fmt::Display for SymbolString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&s| s < 2) {
            for s in &self.0 {
                write!(f, "{s}")?;
            }
            Ok(())
        } else {
            let mut first = true;
            for s in &self.0 {
                if !first {
                    f.write_str(".")?;
                }
                first = false;
                write!(f, "{s}")?;
            }
            Ok(())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StringSetError {
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,
    #[error("string set is empty")]
    Empty,
    #[error("string {index} has symbol {symbol} at position {position}, outside alphabet of size {sigma}")]
    SymbolOutOfRange {
        index: usize,
        position: usize,
        symbol: Symbol,
        sigma: u32,
    },
    #[error("strings {first} and {second} are identical")]
    Duplicate { first: usize, second: usize },
    #[error("string {prefix} is a proper prefix of string {longer}")]
    PrefixViolation { prefix: usize, longer: usize },
}

impl StringSetError {
    /// Input indices (0-based) of the offending strings, if any.
    pub fn offending_indices(&self) -> Vec<usize> {
        match *self {
            StringSetError::SymbolOutOfRange { index, .. } => vec![index],
            StringSetError::Duplicate { first, second } => vec![first, second],
            StringSetError::PrefixViolation { prefix, longer } => vec![prefix, longer],
            _ => Vec::new(),
        }
    }
}

/// A nonempty, duplicate-free, prefix-free set of strings over an alphabet.
///
/// Strings are kept in ascending lexicographic order, so two sets holding the
/// same strings compare equal regardless of input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringSet {
    alphabet: Alphabet,
    strings: Vec<SymbolString>,
}

impl StringSet {
    /// Validates `strings` and builds the set.
    ///
    /// Validation inserts every string into a provisional uncompacted trie, so
    /// it runs in time linear in the total length. Error indices refer to
    /// positions in the input order.
    pub fn new(alphabet: Alphabet, strings: Vec<SymbolString>) -> Result<Self, StringSetError> {
        if strings.is_empty() {
            return Err(StringSetError::Empty);
        }
        for (index, s) in strings.iter().enumerate() {
            if let Some((position, &symbol)) = s
                .symbols()
                .iter()
                .enumerate()
                .find(|(_, &c)| !alphabet.contains(c))
            {
                return Err(StringSetError::SymbolOutOfRange {
                    index,
                    position,
                    symbol,
                    sigma: alphabet.sigma(),
                });
            }
        }
        check_prefix_free(&strings)?;
        let mut strings = strings;
        strings.sort_unstable();
        Ok(StringSet { alphabet, strings })
    }

    /// Convenience constructor for binary strings written as `0`/`1` text.
    ///
    /// # Panics
    ///
    /// Panics if any element contains a character other than `0` or `1`.
    pub fn from_bits<S: AsRef<str>>(strings: &[S]) -> Result<Self, StringSetError> {
        let parsed = strings
            .iter()
            .map(|s| SymbolString::from_bits(s.as_ref()).expect("not a 0/1 string"))
            .collect();
        StringSet::new(Alphabet::BINARY, parsed)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// Strings in ascending lexicographic order.
    pub fn strings(&self) -> &[SymbolString] {
        &self.strings
    }

    pub fn len(&self) -> usize {
        self.strings.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.strings.is_empty()
    }

    /// Sum of string lengths.
    pub fn total_length(&self) -> u64 {
        self.strings.iter().map(|s| s.len() as u64).sum()
    }

    pub(crate) fn from_sorted_unchecked(alphabet: Alphabet, strings: Vec<SymbolString>) -> Self {
        debug_assert!(strings.windows(2).all(|w| w[0] < w[1]));
        StringSet { alphabet, strings }
    }
}

struct ProbeNode {
    children: BTreeMap<Symbol, usize>,
    // First input string that passed through this node.
    witness: usize,
    terminal: Option<usize>,
}

fn check_prefix_free(strings: &[SymbolString]) -> Result<(), StringSetError> {
    let mut nodes = vec![ProbeNode {
        children: BTreeMap::new(),
        witness: 0,
        terminal: None,
    }];
    for (index, s) in strings.iter().enumerate() {
        let mut cur = 0;
        for &symbol in s.symbols() {
            if let Some(prefix) = nodes[cur].terminal {
                return Err(StringSetError::PrefixViolation {
                    prefix,
                    longer: index,
                });
            }
            cur = match nodes[cur].children.get(&symbol) {
                Some(&next) => next,
                None => {
                    nodes.push(ProbeNode {
                        children: BTreeMap::new(),
                        witness: index,
                        terminal: None,
                    });
                    let next = nodes.len() - 1;
                    nodes[cur].children.insert(symbol, next);
                    next
                }
            };
        }
        let node = &mut nodes[cur];
        if let Some(first) = node.terminal {
            return Err(StringSetError::Duplicate {
                first,
                second: index,
            });
        }
        if !node.children.is_empty() {
            return Err(StringSetError::PrefixViolation {
                prefix: index,
                longer: node.witness,
            });
        }
        node.terminal = Some(index);
    }
    Ok(())
}
