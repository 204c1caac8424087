//! `trie-extent`: compacted-trie statistics, identity checks and codec.

mod commands;
mod error;
mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::input::Format;

#[derive(Debug, Parser)]
#[command(name = "trie-extent", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the JSON statistics report for a string set.
    Stats {
        /// Input file; stdin when omitted or `-`.
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Bits)]
        format: Format,
        /// Append a fresh terminator symbol to every line.
        #[arg(long)]
        sentinel: bool,
        /// Include the measured `.ctrie` size (binary sets only).
        #[arg(long)]
        encoded: bool,
    },
    /// Encode a binary string set into a `.ctrie` file.
    Encode {
        input: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Bits)]
        format: Format,
        #[arg(long)]
        sentinel: bool,
    },
    /// Decode a `.ctrie` file and print its strings in lexicographic order.
    Decode {
        input: Option<PathBuf>,
        /// Write the lines here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate random prefix-free corpora.
    Gen {
        #[arg(long, default_value_t = 2)]
        sigma: u32,
        #[arg(long, default_value_t = 64)]
        n_max: usize,
        #[arg(long, default_value_t = 32)]
        len_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Output directory.
        #[arg(long, default_value = ".")]
        out: PathBuf,
        /// Emit the linear-trie set with N strings instead of random sets.
        #[arg(long, value_name = "N")]
        linear: Option<usize>,
    },
    /// Cross-check every file in a directory against the oracles.
    Verify {
        dir: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Bits)]
        format: Format,
        #[arg(long)]
        sentinel: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Stats {
            input,
            format,
            sentinel,
            encoded,
        } => commands::stats(input.as_deref(), format, sentinel, encoded),
        Command::Encode {
            input,
            out,
            format,
            sentinel,
        } => commands::encode_file(input.as_deref(), &out, format, sentinel),
        Command::Decode { input, out } => commands::decode_file(input.as_deref(), out.as_deref()),
        Command::Gen {
            sigma,
            n_max,
            len_max,
            seed,
            count,
            out,
            linear,
        } => commands::gen(&commands::GenArgs {
            sigma,
            n_max,
            len_max,
            seed,
            count,
            out,
            linear,
        }),
        Command::Verify {
            dir,
            format,
            sentinel,
        } => commands::verify(&dir, format, sentinel),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("trie-extent: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
