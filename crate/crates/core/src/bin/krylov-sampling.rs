use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use krylov_sampling::cli::{self, CommandOutcome, RunConfig};

#[derive(Parser)]
#[command(
    name = "krylov-sampling",
    version,
    about = "Measurable Krylov spaces: reproducible CSV experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Grade m and distinct eigenvalue count d for the seven builtin Hamiltonians.
    Table1(Overrides),
    /// Averaged reconstruction error r(l) of evolved states.
    Reconstruct(Overrides),
    /// Effective dimension m_eff(T) over a sweep of T.
    Effdim(Overrides),
    /// Spread complexity C_S(t) over the Lanczos basis.
    Spread(Overrides),
}

#[derive(Args)]
struct Overrides {
    /// Flat `key = value` config file.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Builtin name (H_1 … H_I3) or spec-file path; `NAME=PATH` for table1.
    #[arg(long)]
    hamiltonian: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    t_max: Option<f64>,
    #[arg(long)]
    dt: Option<f64>,
    /// Output directory.
    #[arg(long)]
    out: Option<PathBuf>,
    /// `haar` or a computational basis bit string such as 0000.
    #[arg(long)]
    initial_state: Option<String>,
}

impl Overrides {
    fn load(&self) -> krylov_sampling::Result<RunConfig> {
        let mut cfg = match &self.config {
            Some(path) => RunConfig::from_file(path)?,
            None => RunConfig::default(),
        };
        if let Some(h) = &self.hamiltonian {
            cfg.hamiltonian = Some(h.clone());
        }
        if let Some(s) = self.seed {
            cfg.seed = s;
        }
        if let Some(t) = self.t_max {
            cfg.t_max = t;
        }
        if let Some(dt) = self.dt {
            cfg.dt = dt;
        }
        if let Some(out) = &self.out {
            cfg.output_dir = out.clone();
        }
        if let Some(s) = &self.initial_state {
            cfg.set("initial_state", s)?;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (run, overrides): (fn(&RunConfig) -> krylov_sampling::Result<CommandOutcome>, _) = match &cli.command {
        Command::Table1(o) => (cli::cmd_table1, o),
        Command::Reconstruct(o) => (cli::cmd_reconstruct, o),
        Command::Effdim(o) => (cli::cmd_effdim, o),
        Command::Spread(o) => (cli::cmd_spread, o),
    };
    let result = overrides.load().and_then(|cfg| run(&cfg));
    match result {
        Ok(outcome) => {
            for f in &outcome.files {
                println!("wrote {}", f.display());
            }
            for m in &outcome.messages {
                eprintln!("check failed: {m}");
            }
            ExitCode::from(outcome.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
