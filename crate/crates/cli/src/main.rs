use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use deltashell_cli::commands::{self, Options};
use deltashell_cli::problem::ProblemFile;
use deltashell_cli::report::Report;
use deltashell_cli::CliError;

/// Spectral analysis of Schrödinger operators with concentric δ-shell
/// interactions: exact bound-state counts, certificates and criteria.
#[derive(Parser)]
#[command(name = "deltashell", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact bound-state count of one angular channel.
    Kappa(CommonArgs),
    /// Trace bound, norm certificate and positivity tests for a channel.
    Bounds(CommonArgs),
    /// Self-adjointness, semiboundedness and spectral-type verdicts.
    Criteria(CommonArgs),
    /// Total count over all channels in dimension n, with ledger.
    Total(CommonArgs),
    /// Grid sweep over one or two scalar parameters (CSV output).
    Sweep(CommonArgs),
    /// Cross-check the matrix count against the independent counters.
    OracleCheck(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Problem description file (TOML).
    problem: PathBuf,
    /// Emit the machine-readable JSON report instead of text.
    #[arg(long)]
    json: bool,
    /// Write CSV output (ledger or sweep grid) to this path.
    #[arg(long, value_name = "PATH")]
    csv: Option<PathBuf>,
    /// Zero-threshold override for signature computations.
    #[arg(long, value_name = "X")]
    tol: Option<f64>,
    /// Also run the oscillation oracle and report agreement.
    #[arg(long)]
    oracle: bool,
    /// Safety cap on the channel number for `total`.
    #[arg(long, value_name = "N")]
    lmax: Option<u32>,
    /// Domain cut for the finite-difference counter.
    #[arg(long, value_name = "L")]
    length: Option<f64>,
    /// Mesh width for the finite-difference counter.
    #[arg(long, value_name = "H")]
    mesh: Option<f64>,
}

impl CommonArgs {
    fn options(&self) -> Options {
        Options {
            tol: self.tol,
            oracle: self.oracle,
            lmax: self.lmax,
            length: self.length,
            mesh: self.mesh,
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let (args, command): (&CommonArgs, &str) = match &cli.command {
        Command::Kappa(a) => (a, "kappa"),
        Command::Bounds(a) => (a, "bounds"),
        Command::Criteria(a) => (a, "criteria"),
        Command::Total(a) => (a, "total"),
        Command::Sweep(a) => (a, "sweep"),
        Command::OracleCheck(a) => (a, "oracle-check"),
    };
    let problem = ProblemFile::load(&args.problem)?;
    let opts = args.options();

    let report: Report = match command {
        "kappa" => commands::run_kappa(&problem, &opts)?,
        "bounds" => commands::run_bounds(&problem, &opts)?,
        "criteria" => commands::run_criteria(&problem, &opts)?,
        "total" => commands::run_total(&problem, &opts)?,
        "sweep" => commands::run_sweep(&problem, &opts)?,
        _ => commands::run_oracle_check(&problem, &opts)?,
    };

    if let Some(path) = &args.csv {
        let body = match command {
            "total" => commands::ledger_csv(&report),
            "sweep" => commands::sweep_csv(&report),
            _ => None,
        };
        match body {
            Some(body) => std::fs::write(path, body).map_err(|e| CliError::Io {
                path: path.display().to_string(),
                source: e,
            })?,
            None => {
                return Err(CliError::invalid(format!(
                    "--csv is only meaningful for `total` and `sweep`, not `{command}`"
                )))
            }
        }
    }

    if args.json {
        println!("{}", report.to_json());
    } else if command == "sweep" && args.csv.is_none() {
        // sweeps are CSV-only output
        print!("{}", commands::sweep_csv(&report).unwrap_or_default());
    } else {
        print!("{}", report.render_human());
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
