use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use trie_extent::codec::{bound_report, decode_bytes, encode, BoundReport};
use trie_extent::oracle::{
    build_uncompacted, generate_prefix_free, linear_trie_set, stats_by_definition, GeneratorConfig,
};
use trie_extent::{StringSet, Trie};

use crate::error::CliError;
use crate::input::{self, Format, LoadedSet};
use crate::report::{Encoded, StatsReport};

/// Byte used for symbol `i` in generated corpora; ascending, so symbol order
/// and byte order agree.
pub const SYMBOL_BYTES: &[u8] = b"0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";

fn source_name(path: Option<&Path>) -> String {
    path.map_or_else(|| "-".to_string(), |p| p.display().to_string())
}

fn load(path: Option<&Path>, format: Format, sentinel: bool) -> Result<LoadedSet, CliError> {
    input::parse(&input::read_source(path)?, format, sentinel)
}

fn print_json<T: serde::Serialize>(value: &T) {
    let mut out = std::io::stdout().lock();
    // A closed stdout (e.g. piped into `head`) is not an error worth reporting.
    if serde_json::to_writer_pretty(&mut out, value).is_ok() {
        let _ = writeln!(out);
    }
}

pub fn stats(
    path: Option<&Path>,
    format: Format,
    sentinel: bool,
    with_encoded: bool,
) -> Result<(), CliError> {
    let loaded = load(path, format, sentinel)?;
    let trie = Trie::build(&loaded.set);
    let st = trie.stats();
    let mut report = StatsReport::new(source_name(path), format, sentinel, loaded.symbols, &st);
    if with_encoded && trie.alphabet().is_binary() {
        report.encoded = Some(Encoded::from(&bound_report(&trie)?));
    }
    print_json(&report);
    if report.ok {
        Ok(())
    } else {
        Err(CliError::Identity(
            "an extent identity failed; this indicates a bug".to_string(),
        ))
    }
}

pub fn encode_file(
    path: Option<&Path>,
    out: &Path,
    format: Format,
    sentinel: bool,
) -> Result<(), CliError> {
    let loaded = load(path, format, sentinel)?;
    let trie = Trie::build(&loaded.set);
    let encoded = encode(&trie)?;
    let report: BoundReport = bound_report(&trie)?;
    fs::write(out, encoded.as_bytes()).map_err(|e| CliError::io(out, e))?;
    print_json(&Encoded::from(&report));
    Ok(())
}

pub fn decode_file(path: Option<&Path>, out: Option<&Path>) -> Result<(), CliError> {
    let bytes = input::read_source(path)?;
    let trie = decode_bytes(&bytes)?;
    let lines = input::render(&trie.strings(), None);
    match out {
        Some(p) => fs::write(p, &lines).map_err(|e| CliError::io(p, e)),
        None => std::io::stdout()
            .lock()
            .write_all(&lines)
            .map_err(|e| CliError::io("<stdout>", e)),
    }
}

pub struct GenArgs {
    pub sigma: u32,
    pub n_max: usize,
    pub len_max: usize,
    pub seed: u64,
    pub count: usize,
    pub out: PathBuf,
    pub linear: Option<usize>,
}

pub fn gen(args: &GenArgs) -> Result<(), CliError> {
    fs::create_dir_all(&args.out).map_err(|e| CliError::io(&args.out, e))?;
    let mut sets: Vec<(String, StringSet)> = Vec::new();
    if let Some(n) = args.linear {
        let set = linear_trie_set(n).map_err(|e| CliError::Config(e.to_string()))?;
        sets.push((format!("linear_{n}.txt"), set));
    } else {
        if args.sigma as usize > SYMBOL_BYTES.len() {
            return Err(CliError::Config(format!(
                "sigma {} exceeds the {} printable symbols available",
                args.sigma,
                SYMBOL_BYTES.len()
            )));
        }
        let cfg = GeneratorConfig::new(args.sigma, args.n_max, args.len_max, args.seed)
            .map_err(|e| CliError::Config(e.to_string()))?;
        for i in 0..args.count {
            let set = generate_prefix_free(&cfg.with_seed(args.seed.wrapping_add(i as u64)));
            sets.push((format!("gen_{}_{i:04}.txt", args.seed), set));
        }
    }
    for (name, set) in sets {
        let path = args.out.join(name);
        fs::write(&path, input::render(&set, Some(SYMBOL_BYTES)))
            .map_err(|e| CliError::io(&path, e))?;
        println!("{}", path.display());
    }
    Ok(())
}

/// Checks one loaded set: identities plus both oracle cross-checks.
/// Returns the list of failed checks.
pub fn check_set(set: &StringSet) -> Vec<String> {
    let trie = Trie::build(set);
    let st = trie.stats();
    let mut failures = Vec::new();
    if let Ok(false) = trie_extent::verify_binary_identity(&st) {
        failures.push("E != I + T".to_string());
    }
    let general = trie_extent::verify_general_identity(&st);
    if !general.extent_identity {
        failures.push("generalized extent identity".to_string());
    }
    if !general.degree_identity {
        failures.push("degree-count identity".to_string());
    }
    if st.sigma == 2 {
        if let Ok(false) = trie_extent::verify_corollary_bound(&st) {
            failures.push("average extent bound".to_string());
        }
    }
    let edges = build_uncompacted(set).edge_count();
    if edges != st.measure {
        failures.push(format!(
            "T = {} but uncompacted trie has {edges} edges",
            st.measure
        ));
    }
    if stats_by_definition(set) != st {
        failures.push("stats differ from definition-level oracle".to_string());
    }
    failures
}

pub fn verify(dir: &Path, format: Format, sentinel: bool) -> Result<(), CliError> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| CliError::io(dir, e))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    files.sort();

    let (mut passed, mut mismatched, mut unreadable) = (0usize, 0usize, 0usize);
    for path in &files {
        match load(Some(path), format, sentinel) {
            Err(e) => {
                unreadable += 1;
                println!("error {}: {e}", path.display());
            }
            Ok(loaded) => {
                let failures = check_set(&loaded.set);
                if failures.is_empty() {
                    passed += 1;
                    let st = Trie::build(&loaded.set).stats();
                    println!(
                        "ok    {}: n={} E={} I={} T={}",
                        path.display(),
                        st.n,
                        st.external_extents,
                        st.internal_extents,
                        st.measure
                    );
                } else {
                    mismatched += 1;
                    println!("FAIL  {}: {}", path.display(), failures.join("; "));
                }
            }
        }
    }
    println!(
        "verified {} files: {passed} ok, {mismatched} mismatched, {unreadable} unreadable",
        files.len()
    );
    if mismatched > 0 {
        Err(CliError::Identity(format!(
            "{mismatched} files failed verification"
        )))
    } else if unreadable > 0 {
        Err(CliError::Input(format!(
            "{unreadable} files could not be read"
        )))
    } else {
        Ok(())
    }
}
