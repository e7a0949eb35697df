use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gpi_core::algebra::io::{emit_algebra, parse_algebra};
use gpi_core::catalog::{self, build_spec};
use gpi_core::codim::{classify, codim_sequence, Budget};
use gpi_core::envelope::Envelope;
use gpi_core::exponent::{exponent_report, SearchMode, SearchOptions, DEFAULT_ASSIGNMENT_CAP};
use gpi_core::harness::{run_suite, HarnessOptions, SUITES};
use gpi_core::poly::{parse, LabelMap};
use gpi_core::report::{self, Format};
use gpi_core::GradedAlgebra;

/// Polynomial identities of group-graded algebras and their Grassmann envelopes.
#[derive(Parser)]
#[command(name = "gpi", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Report format.
    #[arg(long = "out", global = true, value_enum, default_value_t = Out::Text)]
    out: Out,
    /// Write the report here instead of standard output.
    #[arg(long, short = 'o', global = true)]
    output: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_parser = positive::<usize>)]
    jobs: Option<usize>,
    /// Seed for randomized cross-checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// JSON file mapping degree labels to residue tuples, e.g. {"a": [1, 0]}.
    #[arg(long, global = true)]
    labels: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Out {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Full,
    Template,
}

#[derive(Subcommand)]
enum Command {
    /// Graded, central and proper central codimensions for n = 1..N.
    Codim {
        #[arg(long)]
        algebra: String,
        #[arg(long, value_parser = positive::<usize>)]
        n: usize,
        /// Refuse degrees above this.
        #[arg(long, default_value_t = 6, value_parser = positive::<usize>)]
        max_degree: usize,
    },
    /// Graded exponent, and optionally a certified bound for the proper central exponent.
    Exponent {
        #[arg(long)]
        algebra: String,
        /// Search for proper central polynomials.
        #[arg(long)]
        delta: bool,
        #[arg(long, value_enum, default_value_t = Mode::Template)]
        mode: Mode,
        #[arg(long, default_value_t = 4, value_parser = positive::<usize>)]
        max_degree: usize,
        /// Largest number of assignments checked per candidate polynomial.
        #[arg(long, default_value_t = DEFAULT_ASSIGNMENT_CAP, value_parser = positive::<u128>)]
        assignment_cap: u128,
    },
    /// Runs a verification suite (or `all`).
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, value_parser = positive::<usize>)]
        max_degree: Option<usize>,
    },
    /// The catalog of named algebras.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Decides whether a polynomial is an identity, a proper central polynomial, or neither.
    Classify {
        #[arg(long)]
        algebra: String,
        /// Polynomial text, e.g. "[x1:g, x2:g] x3:1".
        #[arg(long)]
        poly: String,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Families with an example instance each.
    List,
    /// Writes an instance as an algebra file.
    Export { spec: String },
}

fn positive<T>(s: &str) -> Result<T, String>
where
    T: std::str::FromStr + PartialEq + From<u8>,
    T::Err: std::fmt::Display,
{
    match s.parse::<T>() {
        Ok(n) if n == T::from(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

/// Failures that map to exit status 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

fn load(source: &str) -> Result<GradedAlgebra, Usage> {
    if let Some(spec) = source.strip_prefix("catalog:") {
        return Ok(build_spec(spec)?.body);
    }
    let text = std::fs::read_to_string(source).map_err(|e| Usage(format!("{source}: {e}")))?;
    parse_algebra(&text).map_err(|e| Usage(format!("{source}: {e}")))
}

fn labels_for(a: &GradedAlgebra, common: &Common) -> Result<LabelMap, Usage> {
    match &common.labels {
        None => Ok(LabelMap::standard(&a.group)),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| Usage(format!("{}: {e}", p.display())))?;
            LabelMap::from_json(&a.group, &text).map_err(|e| Usage(format!("{}: {e}", p.display())))
        }
    }
}

/// Report text and whether every check passed.
fn run(cli: &Cli) -> Result<(String, bool), Usage> {
    let c = &cli.common;
    let format = match c.out {
        Out::Json => Format::Json,
        Out::Csv => Format::Csv,
        Out::Text => Format::Text,
    };
    Ok(match &cli.command {
        Command::Codim { algebra, n, max_degree } => {
            let a = load(algebra)?;
            let labels = labels_for(&a, c)?;
            let env = Envelope::new(a.clone());
            let reports = codim_sequence(&env, *n, &Budget::from_env(*max_degree))?;
            (report::codim(&a, &reports, &labels, format), true)
        }
        Command::Exponent { algebra, delta, mode, max_degree, assignment_cap } => {
            let a = load(algebra)?;
            let labels = labels_for(&a, c)?;
            let mode = match mode {
                Mode::Full => SearchMode::Full,
                Mode::Template => SearchMode::Template,
            };
            let mut opts = SearchOptions::new(mode, *max_degree);
            opts.assignment_cap = *assignment_cap;
            let r = exponent_report(&a, delta.then_some(&opts))?;
            let ok = r.consistent();
            (report::exponent(&a, &r, *delta, &labels, format), ok)
        }
        Command::Verify { suite, max_degree } => {
            let opts = HarnessOptions { max_degree: *max_degree, seed: c.seed, ..Default::default() };
            let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite.as_str()] };
            let mut text = String::new();
            let mut ok = true;
            let mut docs = Vec::new();
            for name in names {
                let r = run_suite(name, &opts)?;
                ok &= r.passed;
                match format {
                    Format::Json => docs.push(r),
                    _ => text.push_str(&report::suite(&r, format)),
                }
            }
            if format == Format::Json {
                text = if docs.len() == 1 {
                    report::suite(&docs[0], format)
                } else {
                    serde_json::to_string_pretty(&docs).expect("serializes") + "\n"
                };
            }
            (text, ok)
        }
        Command::Catalog { action: CatalogAction::List } => (report::catalog(&catalog::list(), format), true),
        Command::Catalog { action: CatalogAction::Export { spec } } => {
            let spec = spec.strip_prefix("catalog:").unwrap_or(spec);
            (emit_algebra(&build_spec(spec)?.body), true)
        }
        Command::Classify { algebra, poly } => {
            let a = load(algebra)?;
            let labels = labels_for(&a, c)?;
            let f = parse(poly, &labels)?;
            let env = Envelope::new(a.clone());
            let v = classify(&env, &f);
            (report::classify(poly, &a, &v, &labels, format), true)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.common.jobs {
        gpi_core::par::set_workers(j);
    }
    match run(&cli) {
        Ok((text, ok)) => {
            let written = match &cli.common.output {
                Some(p) => std::fs::write(p, &text).map_err(|e| format!("{}: {e}", p.display())),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
