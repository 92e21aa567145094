use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use planar_blocks::cli::{default_limit, run, Command, Format, RunConfig};

/// Graph decompositions, planarity certificates, automorphisms and Cayley graphs.
#[derive(Parser)]
#[command(name = "planar-blocks", version)]
struct Args {
    #[arg(value_enum)]
    command: Command,
    /// Edge-list file, or a presentation file for `cayley`.
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Process each connected component separately.
    #[arg(long)]
    per_component: bool,
    /// Suppress degree-2 vertices first and report the edge map.
    #[arg(long)]
    reduce: bool,
    /// Group-order bound for coset enumeration [env: PLANAR_BLOCKS_LIMIT].
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    limit: Option<u64>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let bytes = match std::fs::read(&args.input) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", args.input.display());
            return ExitCode::from(2);
        }
    };
    let cfg = RunConfig {
        command: args.command,
        input: args.input,
        format: args.format,
        per_component: args.per_component,
        reduce: args.reduce,
        limit: args.limit.map_or_else(default_limit, |n| n as usize),
    };
    let (code, out) = run(&cfg, &bytes);
    let _ = std::io::stdout().write_all(&out);
    ExitCode::from(code as u8)
}
