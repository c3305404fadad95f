use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cuspkit::pipeline::{self, Options, PipelineError, DEFAULT_PMAX, DEFAULT_SEED};
use cuspkit::poly::TermOrder;

/// Exact computations for quartic surfaces with three-divisible cusps.
///
/// Exit status: 0 verified, 1 verification failure, 2 input error,
/// 3 precondition violation.
#[derive(Parser)]
#[command(name = "cuspkit", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Term order: grevlex, lex or grlex.
    #[arg(long, global = true, default_value = "grevlex")]
    order: TermOrder,
    /// Largest exponent tried in radical membership tests.
    #[arg(long, global = true, default_value_t = DEFAULT_PMAX)]
    pmax: u32,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Gröbner basis of an ideal.
    Gb {
        /// Generators, comma separated (may be split across arguments).
        generators: Vec<String>,
        /// Read generators from a file (`-` for stdin).
        #[arg(long)]
        file: Option<PathBuf>,
        /// Comma-separated variable names (default x0,x1,x2,x3).
        #[arg(long)]
        vars: Option<String>,
    },
    /// Normal form of a polynomial modulo an ideal.
    Nf {
        /// The polynomial to reduce.
        #[arg(long, short)]
        poly: String,
        generators: Vec<String>,
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long)]
        vars: Option<String>,
    },
    /// Build the quartic of a family manifest (Lp, Lpp, Fp, Fpp, R).
    Construct {
        /// Manifest file (`-` for stdin).
        manifest: PathBuf,
        /// Also classify the candidates and run the singularity certificates.
        #[arg(long)]
        certify: bool,
    },
    /// Run a worked example end to end: ex61, ex62 or barth.
    VerifyExample {
        name: String,
        /// Parameter of the Barth quartic.
        #[arg(long)]
        k: Option<String>,
    },
    /// Cusp candidates of a family manifest.
    Cusps {
        manifest: PathBuf,
        /// Slicing hyperplane for concurrent-line configurations.
        #[arg(long)]
        hyperplane: Option<String>,
    },
    /// Dimension, weights and supports of a ternary code.
    Code {
        /// Generator words, e.g. 11111100 or 0011(-1)(-1)11.
        words: Vec<String>,
        #[arg(long = "generators", short = 'g')]
        generators: Vec<String>,
        #[arg(long)]
        length: Option<usize>,
        /// Griesmer claim `q,d,r` (repeatable).
        #[arg(long = "claim", value_parser = parse_claim)]
        claims: Vec<(u64, u32, u64)>,
    },
    /// Search for candidate three-divisible subsets of a point configuration.
    EnumerateSets {
        /// `;`-separated points such as `(1:0:-1:0); (0:0:0:1)`; default: Barth's eight points.
        #[arg(long)]
        points: Option<String>,
        /// Coordinate permutation `i0,i1,i2,i3` (repeatable).
        #[arg(long = "symmetry")]
        symmetries: Vec<String>,
    },
}

fn parse_claim(s: &str) -> Result<(u64, u32, u64), String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = || format!("expected q,d,r, got `{s}`");
    match parts.as_slice() {
        [q, d, r] => Ok((
            q.parse().map_err(|_| bad())?,
            d.parse().map_err(|_| bad())?,
            r.parse().map_err(|_| bad())?,
        )),
        _ => Err(bad()),
    }
}

fn read_source(path: &PathBuf) -> Result<String, PipelineError> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| PipelineError::Input(format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| PipelineError::Input(format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

fn ideal_text(generators: &[String], file: &Option<PathBuf>) -> Result<String, PipelineError> {
    let mut text = generators.join(",\n");
    if let Some(f) = file {
        if !text.is_empty() {
            text.push_str(",\n");
        }
        text.push_str(&read_source(f)?);
    }
    Ok(text)
}

fn run(cli: &Cli) -> pipeline::Outcome {
    let opts = Options {
        p_max: cli.global.pmax,
        order: cli.global.order,
        seed: cli.global.seed,
    };
    match &cli.command {
        Command::Gb { generators, file, vars } => {
            pipeline::groebner(&ideal_text(generators, file)?, vars.as_deref(), &opts)
        }
        Command::Nf {
            poly,
            generators,
            file,
            vars,
        } => pipeline::normal_form(poly, &ideal_text(generators, file)?, vars.as_deref(), &opts),
        Command::Construct { manifest, certify } => pipeline::construct(&read_source(manifest)?, *certify, &opts),
        Command::VerifyExample { name, k } => pipeline::verify_example(name, k.as_deref(), &opts),
        Command::Cusps { manifest, hyperplane } => pipeline::cusps(&read_source(manifest)?, hyperplane.as_deref()),
        Command::Code {
            words,
            generators,
            length,
            claims,
        } => {
            let all: Vec<String> = words.iter().chain(generators).cloned().collect();
            pipeline::code(&all, *length, claims)
        }
        Command::EnumerateSets { points, symmetries } => pipeline::enumerate_sets(points.as_deref(), symmetries),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.global.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::from(if report.verified { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
