use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gea_core::WitnessGoal;

mod commands;
mod report;

use report::{ExitClass, Run};

#[derive(Parser)]
#[command(name = "gea", version, about = "Check, order and represent finite generalized effect algebras")]
struct Cli {
    /// Print the run report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for sampled checks.
    #[arg(long, global = true, env = "GEA_SEED", default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Goal {
    Separate,
    Order,
}

impl From<Goal> for WitnessGoal {
    fn from(g: Goal) -> Self {
        match g {
            Goal::Separate => WitnessGoal::Separate,
            Goal::Order => WitnessGoal::Order,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check the generalized effect algebra axioms (and with --ea, the effect algebra axioms).
    Check {
        path: PathBuf,
        #[arg(long)]
        ea: bool,
    },
    /// Print the induced order.
    Order { path: PathBuf },
    /// Find a separating or order-determining set of generalized states.
    States {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "order")]
        goal: Goal,
    },
    /// Build and verify the diagonal operator representation.
    Represent {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "order")]
        goal: Goal,
        /// Write the representation JSON here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify a map between two algebras (paths in the map file are relative to it).
    Morphism { mapfile: PathBuf },
    /// Hilbert-space effect operators.
    #[command(subcommand)]
    Effects(Effects),
}

#[derive(Subcommand)]
enum Effects {
    /// Two orthogonal projections on C^2 and their inclusion into the effects.
    DemoExcd,
    /// A vector x with <x,Ax> > <x,Bx>, if A is not below B.
    Witness { a: PathBuf, b: PathBuf },
    /// Whether a matrix is an effect.
    Check { a: PathBuf },
}

fn main() -> ExitCode {
    let command: Vec<String> = std::env::args().skip(1).collect();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            let code = if e.use_stderr() { ExitClass::InputError.code() } else { 0 };
            return ExitCode::from(code);
        }
    };
    let mut run = Run::new(command, cli.seed);
    let outcome = match &cli.command {
        Command::Check { path, ea } => commands::check(&mut run, path, *ea),
        Command::Order { path } => commands::order(&mut run, path),
        Command::States { path, goal } => commands::states(&mut run, path, (*goal).into()),
        Command::Represent { path, goal, out } => {
            commands::represent(&mut run, path, (*goal).into(), out.as_deref(), cli.seed)
        }
        Command::Morphism { mapfile } => commands::morphism(&mut run, mapfile),
        Command::Effects(Effects::DemoExcd) => commands::demo(&mut run),
        Command::Effects(Effects::Witness { a, b }) => commands::witness(&mut run, a, b),
        Command::Effects(Effects::Check { a }) => commands::effect_check(&mut run, a),
    };
    let class = outcome.unwrap_or_else(|halt| halt.0);
    let report = run.finish(class);
    if cli.json {
        println!("{}", report::to_json(&report));
    } else {
        print!("{}", report::to_text(&report));
    }
    ExitCode::from(class.code())
}
