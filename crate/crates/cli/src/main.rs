//! Command line interface for building projective planes, labeling them
//! over finite Abelian groups, and running the exhaustive verification
//! oracles.
//!
//! Exit codes: 0 when the command's verdict holds (axioms valid, labeling
//! magic, sweep consistent, ...), 1 for failed verdicts and domain errors
//! (single-line message on stderr), 2 for command line parse errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};

use magicplanes_core::acceptance;
use magicplanes_core::geometry::{build_plane, Plane};
use magicplanes_core::groups::{Classification, Labeling};
use magicplanes_core::incidence::IncidenceMatrix;
use magicplanes_core::magic::{magic_labeling, product_magic, v_line};
use magicplanes_core::oracle::{cyclic_exhaustive, DEFAULT_BOUND};

/// Environment variable overriding the default exhaustion bound.
const BOUND_ENV: &str = "MAGICPLANES_BOUND";

#[derive(Parser)]
#[command(
    name = "magicplanes",
    version,
    about = "Projective planes over finite fields and their magic labelings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build, validate, and inspect projective planes.
    #[command(subcommand)]
    Plane(PlaneCommand),
    /// Construct and verify labelings.
    #[command(subcommand)]
    Label(LabelCommand),
    /// Exhaustive sweeps and the acceptance suite.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum PlaneFormat {
    /// Plane JSON with explicit point labels and line point lists.
    #[default]
    Json,
    /// Plain 0/1 incidence rows, one line of the plane per text line.
    Incidence,
}

#[derive(Subcommand)]
enum PlaneCommand {
    /// Build the plane of prime power order q from homogeneous coordinates.
    Build {
        #[arg(long)]
        q: u64,
        /// Write the plane JSON here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Validate the plane axioms for a plane read from a file.
    Check {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: PlaneFormat,
    },
    /// Print the line-by-point incidence matrix of the plane of order q.
    Matrix {
        #[arg(long)]
        q: u64,
        /// Print the Gram matrix (pairwise line intersections) instead.
        #[arg(long)]
        gram: bool,
        /// Also print the Gram determinant next to its closed form.
        #[arg(long)]
        det: bool,
    },
}

#[derive(Subcommand)]
enum LabelCommand {
    /// The labeling carrying m/gcd(n,m) on one line and 0 elsewhere.
    Vline {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        line: usize,
        #[arg(long = "mod")]
        modulus: u64,
    },
    /// A magic labeling over (Z/n)^3, chosen by plane order.
    Magic {
        #[arg(long)]
        q: u64,
        /// Write the labeling JSON here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The magic labeling over (Z/n)^lines from incidence columns.
    Product {
        #[arg(long)]
        q: u64,
    },
    /// Verify a labeling file against a plane file.
    Verify {
        #[arg(long)]
        plane: PathBuf,
        #[arg(long)]
        labeling: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: PlaneFormat,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Enumerate every line-invariant labeling over Z/m and report CSV.
    Cyclic {
        #[arg(long)]
        q: u64,
        /// Moduli to sweep, comma separated.
        #[arg(long = "mod", value_delimiter = ',', required = true)]
        moduli: Vec<u64>,
        /// Ceiling on the search space m^points (overrides MAGICPLANES_BOUND).
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Run the full acceptance suite, one status line per criterion.
    Acceptance,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

/// Runs a command; `Ok(false)` means the command ran but its verdict failed.
fn run(command: Command) -> anyhow::Result<bool> {
    match command {
        Command::Plane(cmd) => run_plane(cmd),
        Command::Label(cmd) => run_label(cmd),
        Command::Oracle(cmd) => run_oracle(cmd),
    }
}

fn run_plane(cmd: PlaneCommand) -> anyhow::Result<bool> {
    match cmd {
        PlaneCommand::Build { q, out } => {
            let plane = build_plane(q)?;
            emit(&plane.to_json(), out.as_deref())?;
            Ok(true)
        }
        PlaneCommand::Check { input, format } => {
            let plane = read_plane(&input, format)?;
            let report = plane.validate_axioms();
            println!("{report}");
            Ok(report.is_valid())
        }
        PlaneCommand::Matrix { q, gram, det } => {
            let plane = build_plane(q)?;
            let matrix = IncidenceMatrix::from_plane(&plane);
            if gram {
                for row in matrix.gram() {
                    let cells: Vec<String> = row.iter().map(u64::to_string).collect();
                    println!("{}", cells.join(" "));
                }
            } else {
                print!("{}", matrix.to_text());
            }
            if det {
                let d = matrix.gram_determinant();
                println!("det {} = {}", d.computed, d.closed_form);
                return Ok(d.computed == d.closed_form);
            }
            Ok(true)
        }
    }
}

fn run_label(cmd: LabelCommand) -> anyhow::Result<bool> {
    match cmd {
        LabelCommand::Vline { q, line, modulus } => {
            let plane = Arc::new(build_plane(q)?);
            let labeling = v_line(&plane, line, modulus)?;
            print!("{}", labeling.to_json());
            println!("{}", labeling.verify());
            Ok(true)
        }
        LabelCommand::Magic { q, out } => {
            let plane = Arc::new(build_plane(q)?);
            let construction = magic_labeling(&plane)?;
            emit(&construction.labeling.to_json(), out.as_deref())?;
            if let Some(aux) = construction.aux_line {
                let labels: Vec<&str> = plane
                    .line_points(aux)
                    .iter()
                    .map(|&p| plane.point_label(p))
                    .collect();
                println!("auxiliary line {aux}: {}", labels.join(" "));
            }
            let report = construction.labeling.verify();
            println!("{report}");
            Ok(report.classification == Classification::Magic)
        }
        LabelCommand::Product { q } => {
            let plane = Arc::new(build_plane(q)?);
            print!("{}", product_magic(&plane)?.to_json());
            Ok(true)
        }
        LabelCommand::Verify { plane, labeling, format } => {
            let plane = Arc::new(read_plane(&plane, format)?);
            let text = fs::read_to_string(&labeling)
                .with_context(|| format!("reading {}", labeling.display()))?;
            let labeling = Labeling::from_json(&text, plane)?;
            let report = labeling.verify();
            println!("{report}");
            Ok(report.is_line_invariant)
        }
    }
}

fn run_oracle(cmd: OracleCommand) -> anyhow::Result<bool> {
    match cmd {
        OracleCommand::Cyclic { q, moduli, bound } => {
            let bound = resolve_bound(bound)?;
            let plane = Arc::new(build_plane(q)?);
            let verdicts = moduli
                .into_iter()
                .map(|m| cyclic_exhaustive(&plane, m, bound))
                .collect::<magicplanes_core::Result<Vec<_>>>()?;
            println!("m,count_line_invariant,max_image_size,gcd_n_m,magic_found");
            let mut all_consistent = true;
            for verdict in verdicts {
                println!(
                    "{},{},{},{},{}",
                    verdict.m,
                    verdict.count_line_invariant,
                    verdict.max_image_size,
                    verdict.gcd_n_m,
                    verdict.magic_found
                );
                all_consistent &= verdict.matches_theory();
            }
            Ok(all_consistent)
        }
        OracleCommand::Acceptance => {
            let mut all_passed = true;
            for result in acceptance::run_all() {
                println!("{}", result.status_line());
                all_passed &= result.passed;
            }
            Ok(all_passed)
        }
    }
}

fn read_plane(path: &Path, format: PlaneFormat) -> anyhow::Result<Plane> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let plane = match format {
        PlaneFormat::Json => Plane::from_json(&text)?,
        PlaneFormat::Incidence => Plane::from_incidence_text(&text)?,
    };
    Ok(plane)
}

fn emit(text: &str, out: Option<&Path>) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text)
            .with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn resolve_bound(flag: Option<u64>) -> anyhow::Result<u64> {
    if let Some(bound) = flag {
        return Ok(bound);
    }
    match std::env::var(BOUND_ENV) {
        Ok(raw) => raw
            .trim()
            .parse::<u64>()
            .with_context(|| format!("invalid {BOUND_ENV} value {raw:?}")),
        Err(_) => Ok(DEFAULT_BOUND),
    }
}
