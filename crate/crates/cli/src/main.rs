use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use toric_stability::exact::rational::{parse_rational, Rational};
use toric_stability::subdivision::DEFAULT_SIMPLEX_CAP;
use toric_stability_cli::commands::{self, Failure, Options, EXIT_OK};
use toric_stability_cli::report::render;

/// Secondary polytopes and torus Chow stability of toric varieties, in exact
/// arithmetic.
#[derive(Parser)]
#[command(name = "toric-stability", version)]
struct Cli {
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Refuse to enumerate triangulations of configurations with more
    /// full-dimensional simplices than this.
    #[arg(long, global = true, default_value_t = DEFAULT_SIMPLEX_CAP)]
    cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that the points are all lattice points of their hull and
    /// affinely generate the lattice.
    Validate { path: PathBuf },
    /// Triangulations, GKZ vectors, the secondary polytope and its facets.
    Secondary {
        path: PathBuf,
        /// List every triangulation with its regularity witness.
        #[arg(long)]
        triangulations: bool,
        /// List coarse subdivisions with their facet equations.
        #[arg(long)]
        facets: bool,
        /// Comma-separated heights; also report the induced subdivision.
        #[arg(long, value_parser = parse_heights, allow_hyphen_values = true)]
        heights: Option<Heights>,
    },
    /// H-semistability, H-polystability and the diagonal point.
    Stability { path: PathBuf },
    /// Ehrhart polynomial, h-vector and the lattice point bound.
    Ehrhart { path: PathBuf },
    /// Run everything on each `.conf` document of a directory.
    Corpus {
        dir: PathBuf,
        /// Worker threads (default: all cores).
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(Clone)]
struct Heights(Vec<Rational>);

fn parse_heights(s: &str) -> Result<Heights, String> {
    s.split(',')
        .enumerate()
        .map(|(i, t)| {
            parse_rational(t).ok_or_else(|| format!("item {}: `{t}` is not a rational", i + 1))
        })
        .collect::<Result<_, _>>()
        .map(Heights)
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| e.to_string()),
    }
}

fn run(cli: Cli) -> Result<(i32, String), (Failure, String)> {
    let mut opts = Options {
        cap: cli.cap,
        ..Options::default()
    };
    let with_path = |path: &PathBuf| {
        let label = path.display().to_string();
        move |f: Failure| (f, label.clone())
    };
    match cli.command {
        Command::Validate { path } => {
            let doc = commands::load(&path).map_err(with_path(&path))?;
            let (report, config) = commands::validate(&doc);
            let code = if config.is_some() {
                EXIT_OK
            } else {
                commands::EXIT_INVALID
            };
            if let Some(v) = &report.violation {
                eprintln!("{}: {v}", path.display());
            }
            Ok((code, render(&report)))
        }
        Command::Secondary {
            path,
            triangulations,
            facets,
            heights,
        } => {
            opts.triangulations = triangulations;
            opts.facets = facets;
            opts.heights = heights.map(|h| h.0);
            let doc = commands::load(&path).map_err(with_path(&path))?;
            let r = commands::secondary(&doc, &opts).map_err(with_path(&path))?;
            Ok((EXIT_OK, render(&r)))
        }
        Command::Stability { path } => {
            let doc = commands::load(&path).map_err(with_path(&path))?;
            let r = commands::stability(&doc, &opts).map_err(with_path(&path))?;
            Ok((EXIT_OK, render(&r)))
        }
        Command::Ehrhart { path } => {
            let doc = commands::load(&path).map_err(with_path(&path))?;
            let r = commands::ehrhart(&doc).map_err(with_path(&path))?;
            Ok((EXIT_OK, render(&r)))
        }
        Command::Corpus { dir, threads } => {
            opts.triangulations = true;
            opts.facets = true;
            let mut pool = rayon::ThreadPoolBuilder::new();
            if let Some(t) = threads {
                pool = pool.num_threads(t);
            }
            let pool = pool.build().map_err(|e| {
                (
                    Failure::Input(format!("--threads: {e}")),
                    dir.display().to_string(),
                )
            })?;
            let (code, report) = pool
                .install(|| commands::corpus(&dir, &opts))
                .map_err(with_path(&dir))?;
            Ok((code, render(&report)))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                commands::EXIT_PARSE
            } else {
                EXIT_OK
            } as u8);
        }
    };
    let output = cli.output.clone();
    let code = match run(cli) {
        Ok((code, text)) => match emit(&output, &text) {
            Ok(()) => code,
            Err(e) => {
                eprintln!("error: {e}");
                commands::EXIT_PARSE
            }
        },
        Err((failure, path)) => {
            if let Failure::Invalid(report) = &failure {
                if let Err(e) = emit(&output, report) {
                    eprintln!("error: {e}");
                }
            }
            eprintln!("{path}: {}", failure.message());
            failure.code()
        }
    };
    ExitCode::from(code as u8)
}
