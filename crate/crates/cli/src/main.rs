use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cone_core::poly::OrderKind;

mod commands;
mod schema;
mod verify;

use commands::{Denominator, Format, Target, VarOrder};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] cone_core::Error),
}

#[derive(Parser)]
#[command(name = "cone", version, about = "Hilbert series and vanishing ideals of cones over classical groups")]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert series of the cone's coordinate ring.
    Hilbert {
        #[arg(long)]
        group: Target,
        #[arg(long, default_value_t = 20)]
        terms: usize,
        /// Print numerator and denominator instead of coefficients.
        #[arg(long)]
        closed_form: bool,
        /// Denominator exponents `a[,b]` for (1-t)^a (1-t^2)^b.
        #[arg(long)]
        denominator: Option<Denominator>,
    },
    /// Hilbert series of the U x U-invariants.
    Uxu {
        #[arg(long)]
        group: Target,
        #[arg(long, default_value_t = 20)]
        terms: usize,
        #[arg(long)]
        closed_form: bool,
        #[arg(long)]
        denominator: Option<Denominator>,
    },
    /// First negative coefficient of 1/H(-t).
    Koszul {
        #[arg(long)]
        group: Target,
        #[arg(long, default_value_t = 12)]
        max: usize,
    },
    /// Dimensions of the irreducibles of one degree.
    Dims {
        #[arg(long)]
        group: Target,
        #[arg(long)]
        degree: u64,
    },
    /// Partition labels of one degree.
    Labels {
        #[arg(long)]
        group: Target,
        #[arg(long)]
        degree: u64,
    },
    /// Quadratic generators of the vanishing ideal.
    Generators {
        #[arg(long)]
        group: Target,
    },
    /// Reduced Groebner basis of the vanishing ideal.
    Groebner {
        #[arg(long)]
        group: Target,
        #[arg(long, default_value = "degrevlex")]
        order: OrderKind,
        #[arg(long, value_enum, default_value = "row-major")]
        var_order: VarOrder,
    },
    /// Check every golden file and property; exit 1 on the first failure.
    Verify {
        #[arg(long, value_enum)]
        only: Option<verify::Module>,
        #[arg(long, default_value = "golden")]
        golden_dir: PathBuf,
        #[arg(long, default_value_t = 20240611)]
        seed: u64,
    },
}

fn run(cli: Cli) -> Result<(String, bool), CliError> {
    let f = cli.format;
    let out = match cli.command {
        Command::Hilbert {
            group,
            terms,
            closed_form,
            denominator,
        } => commands::hilbert(group, terms, closed_form, denominator, f)?,
        Command::Uxu {
            group,
            terms,
            closed_form,
            denominator,
        } => commands::uxu(group, terms, closed_form, denominator, f)?,
        Command::Koszul { group, max } => commands::koszul(group, max, f)?,
        Command::Dims { group, degree } => commands::dims(group, degree, f)?,
        Command::Labels { group, degree } => commands::labels(group, degree, f)?,
        Command::Generators { group } => commands::generators(group, f)?,
        Command::Groebner {
            group,
            order,
            var_order,
        } => commands::groebner(group, order, var_order, f)?,
        Command::Verify {
            only,
            golden_dir,
            seed,
        } => {
            let report = verify::run(&golden_dir, seed, only);
            let text = match f {
                Format::Text => verify::render_text(&report),
                Format::Json => commands::json(&report),
            };
            if let Some(bad) = report.items.iter().find(|r| !r.passed) {
                let file = bad.file.as_deref().map(|p| format!(" ({p})")).unwrap_or_default();
                eprintln!("verification failed: item {} {}{file}", bad.id, bad.name);
            }
            return Ok((text, report.passed));
        }
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
