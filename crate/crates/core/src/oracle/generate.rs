use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::strings::{Alphabet, StringSet, Symbol, SymbolString};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("sigma must be at least 2, got {0}")]
    Sigma(u32),
    #[error("n_max must be at least 1")]
    NMax,
    #[error("len_max must be at least 1")]
    LenMax,
    #[error("a linear trie needs at least 2 strings, got {0}")]
    LinearTooSmall(usize),
}

/// Parameters of the random set generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorConfig {
    sigma: u32,
    n_max: usize,
    len_max: usize,
    seed: u64,
}

impl GeneratorConfig {
    pub fn new(
        sigma: u32,
        n_max: usize,
        len_max: usize,
        seed: u64,
    ) -> Result<Self, GeneratorError> {
        if sigma < 2 {
            return Err(GeneratorError::Sigma(sigma));
        }
        if n_max == 0 {
            return Err(GeneratorError::NMax);
        }
        if len_max == 0 {
            return Err(GeneratorError::LenMax);
        }
        Ok(GeneratorConfig {
            sigma,
            n_max,
            len_max,
            seed,
        })
    }

    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn len_max(&self) -> usize {
        self.len_max
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn with_seed(self, seed: u64) -> Self {
        GeneratorConfig { seed, ..self }
    }
}

/// Samples a prefix-free set as the leaves of a randomly grown trie.
///
/// Growth starts from the empty string and repeatedly either extends a leaf
/// by one symbol (which later becomes part of a compacted path) or splits it
/// into 2..=sigma children. A final pass appends random tails to some leaves.
/// The target size is drawn uniformly from `1..=n_max`; it may be missed
/// when `len_max` leaves too little room.
pub fn generate_prefix_free(cfg: &GeneratorConfig) -> StringSet {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let target = rng.random_range(1..=cfg.n_max);
    let mut leaves: Vec<Vec<Symbol>> = vec![Vec::new()];

    while leaves.len() < target {
        let Some(i) = pick_expandable(&mut rng, &leaves, cfg.len_max) else {
            break;
        };
        let mut leaf = leaves.swap_remove(i);
        if rng.random_bool(0.3) {
            leaf.push(rng.random_range(0..cfg.sigma));
            leaves.push(leaf);
            continue;
        }
        let room = target - leaves.len();
        let max_degree = (cfg.sigma as usize).min(room);
        let degree = rng.random_range(2..=max_degree);
        for symbol in index::sample(&mut rng, cfg.sigma as usize, degree) {
            let mut child = leaf.clone();
            child.push(symbol as Symbol);
            leaves.push(child);
        }
    }

    for leaf in &mut leaves {
        if leaf.len() < cfg.len_max && rng.random_bool(0.5) {
            let extra = rng.random_range(0..=cfg.len_max - leaf.len());
            leaf.extend((0..extra).map(|_| rng.random_range(0..cfg.sigma)));
        }
    }

    into_set(cfg.sigma, leaves)
}

/// Samples a set whose compacted trie has only empty compacted paths: every
/// split uses all `sigma` symbols and no leaf is ever extended. For `sigma = 2`
/// these are the complete prefix codes.
pub fn generate_complete_code(cfg: &GeneratorConfig) -> StringSet {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let target = rng.random_range(1..=cfg.n_max);
    let grow = cfg.sigma as usize - 1;
    let mut leaves: Vec<Vec<Symbol>> = vec![Vec::new()];
    while leaves.len() + grow <= target {
        let Some(i) = pick_expandable(&mut rng, &leaves, cfg.len_max) else {
            break;
        };
        let leaf = leaves.swap_remove(i);
        for symbol in 0..cfg.sigma {
            let mut child = leaf.clone();
            child.push(symbol);
            leaves.push(child);
        }
    }
    into_set(cfg.sigma, leaves)
}

/// `{0^k 1 : k = 0..n-2} ∪ {0^(n-1)}`: a left path with empty compacted paths.
pub fn linear_trie_set(n: usize) -> Result<StringSet, GeneratorError> {
    if n < 2 {
        return Err(GeneratorError::LinearTooSmall(n));
    }
    let mut strings: Vec<SymbolString> = (0..n - 1)
        .map(|k| {
            let mut s = vec![0; k];
            s.push(1);
            SymbolString::from(s)
        })
        .collect();
    strings.push(SymbolString::from(vec![0; n - 1]));
    Ok(StringSet::new(Alphabet::BINARY, strings).expect("linear family is prefix-free"))
}

fn pick_expandable(rng: &mut ChaCha8Rng, leaves: &[Vec<Symbol>], len_max: usize) -> Option<usize> {
    let open: Vec<usize> = (0..leaves.len())
        .filter(|&i| leaves[i].len() < len_max)
        .collect();
    if open.is_empty() {
        None
    } else {
        Some(open[rng.random_range(0..open.len())])
    }
}

fn into_set(sigma: u32, leaves: Vec<Vec<Symbol>>) -> StringSet {
    let alphabet = Alphabet::new(sigma).expect("sigma validated");
    StringSet::new(
        alphabet,
        leaves.into_iter().map(SymbolString::from).collect(),
    )
    .expect("leaves of a trie form a prefix-free set")
}
