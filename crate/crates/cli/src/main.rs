use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use tutte_core::dispatch::{self, Source, Verdict};
use tutte_core::io::Structure;

const DEFAULT_SEED: u64 = 2024;

#[derive(Parser)]
#[command(name = "tutte", version, about = "Tutte-type invariants of minors systems and the identities they satisfy")]
struct Cli {
    /// Worker threads for parallel verification (defaults to all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute an invariant of the structure in a JSON file.
    Compute {
        invariant: String,
        #[arg(long)]
        input: PathBuf,
        /// Rational substitutions such as x=2,y=-1/3.
        #[arg(long)]
        vars: Option<String>,
    },
    /// Check an identity on an input file, on every structure up to a size, or on random instances.
    Verify {
        identity: String,
        #[arg(long, conflicts_with = "enumerate")]
        input: Option<PathBuf>,
        /// Largest instance size.
        #[arg(long, alias = "size")]
        enumerate: Option<usize>,
        /// Draw this many seeded random instances (sizes up to --enumerate) instead of enumerating.
        #[arg(long, requires = "enumerate")]
        random: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Print generators and relations of a Grothendieck monoid.
    Grothendieck {
        system: String,
        /// Comma-separated palette for the colored system.
        #[arg(long)]
        palette: Option<String>,
    },
    /// List every structure of a family on a given number of elements.
    Enumerate {
        family: String,
        #[arg(long, alias = "enumerate")]
        size: usize,
        /// Only one representative per isomorphism class.
        #[arg(long)]
        classes: bool,
    },
    /// List the available identity names.
    Identities,
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn load(path: &PathBuf) -> Result<Structure, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Structure::parse_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn run(cli: Cli) -> ExitCode {
    match cli.cmd {
        Cmd::Compute { invariant, input, vars } => {
            let s = match load(&input) {
                Ok(s) => s,
                Err(e) => return fail(e),
            };
            let vars = match vars.as_deref().map(dispatch::parse_vars).transpose() {
                Ok(v) => v.unwrap_or_default(),
                Err(e) => return fail(e),
            };
            match dispatch::compute(&s, &invariant, &vars) {
                Ok(c) if cli.format == Format::Json => println!("{}", pretty(&c.to_json())),
                Ok(c) => {
                    println!("{}", c.text);
                    if let Some(l) = &c.legend {
                        println!("legend: {l}");
                    }
                }
                Err(e) => return fail(e),
            }
            ExitCode::SUCCESS
        }
        Cmd::Verify { identity, input, enumerate, random, seed } => {
            let source = match (input, enumerate, random) {
                (Some(p), _, _) => match load(&p) {
                    Ok(s) => Source::Input(s),
                    Err(e) => return fail(e),
                },
                (None, Some(size), Some(count)) => Source::Random { size, count, seed },
                (None, Some(n), None) => Source::Enumerate(n),
                (None, None, _) => return fail("give --input, --enumerate N, or --enumerate N --random COUNT"),
            };
            let verdict = match dispatch::verify(&identity, &source) {
                Ok(v) => v,
                Err(e) => return fail(e),
            };
            if cli.format == Format::Json {
                let v = match &verdict {
                    Verdict::Pass { instances } => json!({"identity": identity, "result": "pass", "instances": instances}),
                    Verdict::Fail { instances, witness } => {
                        json!({"identity": identity, "result": "fail", "instances": instances, "witness": witness})
                    }
                    Verdict::Count { family, size, count } => {
                        json!({"identity": identity, "result": "pass", "family": family, "size": size, "count": count})
                    }
                };
                println!("{}", pretty(&v));
            } else {
                println!("{}", verdict.report());
            }
            if verdict.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Cmd::Grothendieck { system, palette } => {
            let palette = palette.unwrap_or_default();
            let colors: Vec<&str> = palette.split(',').filter(|c| !c.is_empty()).collect();
            match dispatch::grothendieck(&system, &colors) {
                Ok(text) => print!("{text}"),
                Err(e) => return fail(e),
            }
            ExitCode::SUCCESS
        }
        Cmd::Enumerate { family, size, classes } => {
            let list = match dispatch::enumerate(&family, size, classes) {
                Ok(l) => l,
                Err(e) => return fail(e),
            };
            if cli.format == Format::Json {
                println!("{}", pretty(&json!(list)));
            } else {
                for item in &list {
                    println!("{item}");
                }
                println!("{} structures", list.len());
            }
            ExitCode::SUCCESS
        }
        Cmd::Identities => {
            for (name, family) in dispatch::identity_names() {
                println!("{name:<26}{family}");
            }
            ExitCode::SUCCESS
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            return fail(e);
        }
    }
    run(cli)
}
