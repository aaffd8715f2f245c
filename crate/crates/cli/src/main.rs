//! `saf`: SAF invariants, vanishing verdicts, nonlift certificates and the
//! Arnoux–Yoccoz family from the command line.
//!
//! Exit codes: 0 when a result was computed (whatever the verdict), 2 for
//! invalid input, 3 when an iteration cap was exceeded.

mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use saf_core::iet::DEFAULT_RETURN_CAP;

use commands::{CliResult, Display, OracleChoice, Output};

#[derive(Parser)]
#[command(name = "saf", version, about = "Exact SAF invariants of interval exchanges")]
struct Cli {
    /// Print the report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Also show 20-digit decimal approximations (display only).
    #[arg(long, global = true)]
    float: bool,
    /// Append wall-clock time to the report; output is then not reproducible.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// SAF invariant of an IET file.
    Saf {
        #[arg(long)]
        iet: PathBuf,
    },
    /// Decide SAF vanishing from the minimal polynomial of a stretch factor.
    Vanishing {
        /// Integer coefficients, constant first, e.g. `-1,-1,-1,1`.
        #[arg(long, allow_hyphen_values = true)]
        minpoly: String,
        /// Isolating interval `lo,hi` of the stretch factor; defaults to the
        /// largest real root.
        #[arg(long, allow_hyphen_values = true)]
        interval: Option<String>,
    },
    /// Certificate that a stretch factor is not a nonorientable lift.
    Nonlift {
        #[arg(long, allow_hyphen_values = true)]
        minpoly: String,
        #[arg(long)]
        genus: usize,
        #[arg(long, value_enum, default_value = "factorization")]
        oracle: OracleChoice,
    },
    /// Arnoux–Yoccoz lift for a genus; prints the IET file unless `--check`.
    Ay {
        #[arg(long)]
        genus: usize,
        /// Run the consistency checks and print a report.
        #[arg(long)]
        check: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// First-return map to `[0, sub)`.
    Induce {
        #[arg(long)]
        iet: PathBuf,
        /// Power-basis coordinates of the subinterval length.
        #[arg(long, allow_hyphen_values = true)]
        sub: String,
        #[arg(long, default_value_t = DEFAULT_RETURN_CAP)]
        cap: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Lift of a boundary involution: scale by 1/2, then rotate by half the new length.
    Lift {
        #[arg(long)]
        iet: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// `iet ∘ iet2` (apply `iet2` first).
    Compose {
        #[arg(long)]
        iet: PathBuf,
        #[arg(long)]
        iet2: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Inverse map.
    Inverse {
        #[arg(long)]
        iet: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Conjugate by `x -> s x`.
    Scale {
        #[arg(long)]
        iet: PathBuf,
        /// Power-basis coordinates of the factor.
        #[arg(long, allow_hyphen_values = true)]
        by: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare two IET files as maps.
    Diff {
        #[arg(long)]
        iet: PathBuf,
        #[arg(long)]
        iet2: PathBuf,
        /// Also look for a rotation conjugating the first onto the second.
        #[arg(long)]
        up_to_rotation: bool,
    },
}

fn run(cli: &Cli, echo: &str) -> CliResult<Output> {
    let display = Display { float: cli.float };
    match &cli.command {
        Command::Saf { iet } => commands::cmd_saf(echo, iet, display),
        Command::Vanishing { minpoly, interval } => {
            commands::cmd_vanishing(echo, minpoly, interval.as_deref(), display)
        }
        Command::Nonlift { minpoly, genus, oracle } => commands::cmd_nonlift(echo, minpoly, *genus, *oracle),
        Command::Ay { genus, check, out } => commands::cmd_ay(echo, *genus, *check, out.as_ref(), display),
        Command::Induce { iet, sub, cap, out } => commands::cmd_induce(echo, iet, sub, *cap, out.as_ref()),
        Command::Lift { iet, out } => commands::cmd_lift(echo, iet, out.as_ref()),
        Command::Compose { iet, iet2, out } => commands::cmd_compose(echo, iet, iet2, out.as_ref()),
        Command::Inverse { iet, out } => commands::cmd_inverse(echo, iet, out.as_ref()),
        Command::Scale { iet, by, out } => commands::cmd_scale(echo, iet, by, out.as_ref()),
        Command::Diff {
            iet,
            iet2,
            up_to_rotation,
        } => commands::cmd_diff(echo, iet, iet2, *up_to_rotation),
    }
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let cli = Cli::parse();
    let echo = std::iter::once("saf".to_string())
        .chain(args.into_iter().skip(1))
        .collect::<Vec<_>>()
        .join(" ");
    let start = Instant::now();
    let result = run(&cli, &echo);
    let elapsed = start.elapsed();
    let mut stdout = std::io::stdout().lock();
    let written = match result {
        Ok(Output::File(text)) => stdout.write_all(text.as_bytes()),
        Ok(Output::Report(mut r)) => {
            if cli.timing {
                r.timing_ms = Some(elapsed.as_secs_f64() * 1e3);
            }
            let text = if cli.json { r.to_json() } else { r.to_text() };
            stdout.write_all(text.as_bytes())
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match written.and_then(|_| stdout.flush()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: cannot write output: {e}");
            ExitCode::from(2)
        }
    }
}
