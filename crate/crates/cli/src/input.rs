//! Line-oriented string set input.

use std::io::Read;
use std::path::Path;

use clap::ValueEnum;
use serde::Serialize;
use trie_extent::{Alphabet, StringSet, Symbol, SymbolString};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    /// Lines of `0`/`1` characters over the binary alphabet.
    Bits,
    /// Lines of UTF-8 text; each distinct byte becomes a symbol, numbered in
    /// order of first appearance.
    Text,
}

/// What a symbol id stands for in the input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymbolLabel {
    pub id: Symbol,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub byte: Option<u8>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub sentinel: bool,
}

#[derive(Debug, Clone)]
pub struct LoadedSet {
    pub set: StringSet,
    pub symbols: Vec<SymbolLabel>,
}

/// Reads from `path`, or stdin when `path` is `None` or `-`.
pub fn read_source(path: Option<&Path>) -> Result<Vec<u8>, CliError> {
    match path {
        Some(p) if p != Path::new("-") => std::fs::read(p).map_err(|e| CliError::io(p, e)),
        _ => {
            let mut buf = Vec::new();
            std::io::stdin()
                .read_to_end(&mut buf)
                .map_err(|e| CliError::io("<stdin>", e))?;
            Ok(buf)
        }
    }
}

/// Splits on `\n`, dropping one trailing newline and any `\r` before it.
fn lines(data: &[u8]) -> Vec<&[u8]> {
    if data.is_empty() {
        return Vec::new();
    }
    let body = data.strip_suffix(b"\n").unwrap_or(data);
    body.split(|&b| b == b'\n')
        .map(|l| l.strip_suffix(b"\r").unwrap_or(l))
        .collect()
}

pub fn parse(data: &[u8], format: Format, sentinel: bool) -> Result<LoadedSet, CliError> {
    let raw = lines(data);
    let (mut strings, mut symbols): (Vec<Vec<Symbol>>, Vec<SymbolLabel>) = match format {
        Format::Bits => {
            let mut out = Vec::with_capacity(raw.len());
            for (i, line) in raw.iter().enumerate() {
                let parsed = line
                    .iter()
                    .map(|&b| match b {
                        b'0' => Ok(0),
                        b'1' => Ok(1),
                        _ => Err(CliError::Input(format!(
                            "line {}: expected only 0/1 characters, found {:?}",
                            i + 1,
                            b as char
                        ))),
                    })
                    .collect::<Result<Vec<Symbol>, _>>()?;
                out.push(parsed);
            }
            let labels = b"01"
                .iter()
                .enumerate()
                .map(|(id, &byte)| SymbolLabel {
                    id: id as Symbol,
                    byte: Some(byte),
                    sentinel: false,
                })
                .collect();
            (out, labels)
        }
        Format::Text => {
            let mut table: [Option<Symbol>; 256] = [None; 256];
            let mut labels = Vec::new();
            let mut out = Vec::with_capacity(raw.len());
            for (i, line) in raw.iter().enumerate() {
                if std::str::from_utf8(line).is_err() {
                    return Err(CliError::Input(format!("line {}: not valid UTF-8", i + 1)));
                }
                let mapped = line
                    .iter()
                    .map(|&b| {
                        *table[b as usize].get_or_insert_with(|| {
                            labels.push(SymbolLabel {
                                id: labels.len() as Symbol,
                                byte: Some(b),
                                sentinel: false,
                            });
                            labels.len() as Symbol - 1
                        })
                    })
                    .collect();
                out.push(mapped);
            }
            (out, labels)
        }
    };

    if sentinel {
        let id = symbols.len() as Symbol;
        for s in &mut strings {
            s.push(id);
        }
        symbols.push(SymbolLabel {
            id,
            byte: None,
            sentinel: true,
        });
    }

    let alphabet =
        Alphabet::new(symbols.len().max(1) as u32).map_err(|e| CliError::Input(e.to_string()))?;
    let set = StringSet::new(
        alphabet,
        strings.into_iter().map(SymbolString::from).collect(),
    )
    .map_err(|e| {
        let lines = e.offending_indices().iter().map(|i| i + 1).collect();
        let message = match e {
            trie_extent::StringSetError::Empty => "input contains no strings".to_string(),
            trie_extent::StringSetError::PrefixViolation { prefix, longer } => format!(
                "prefix violation: line {} is a proper prefix of line {}",
                prefix + 1,
                longer + 1
            ),
            trie_extent::StringSetError::Duplicate { first, second } => {
                format!(
                    "duplicate: lines {} and {} are identical",
                    first + 1,
                    second + 1
                )
            }
            trie_extent::StringSetError::SymbolOutOfRange {
                index,
                position,
                symbol,
                sigma,
            } => format!(
                "line {}: symbol {symbol} at column {} is outside the alphabet of size {sigma}",
                index + 1,
                position + 1
            ),
            trie_extent::StringSetError::EmptyAlphabet => e.to_string(),
        };
        CliError::Invalid { message, lines }
    })?;
    Ok(LoadedSet { set, symbols })
}

/// Renders a set as lines; symbols map through `symbols` when given,
/// otherwise as `0`/`1`.
pub fn render(set: &StringSet, symbols: Option<&[u8]>) -> Vec<u8> {
    let mut out = Vec::new();
    for s in set.strings() {
        for &sym in s.symbols() {
            out.push(match symbols {
                Some(table) => table[sym as usize],
                None => b'0' + sym as u8,
            });
        }
        out.push(b'\n');
    }
    out
}
