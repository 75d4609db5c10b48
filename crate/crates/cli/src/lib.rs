//! Command-line front end: argument parsing, instance loading and dispatch.
//! Every command yields a [`Report`]; `main` renders it and sets the exit code.

pub mod commands;
pub mod config;
pub mod report;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use partgal::cohomology::{Engine, DEFAULT_BUDGET};
use partgal::partial_action::ActionError;

use config::{load_fixture, parse_config, ConfigError, Instance};
pub use report::{Report, Section};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Config(ConfigError),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Budget(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("defect: {0}")]
    Defect(String),
}

impl CliError {
    /// 1 for defects found by a self-check, 2 for everything that stopped
    /// the computation from running.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Defect(_) => 1,
            _ => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Enumerate,
    Structure,
    Both,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::Enumerate => Engine::Enumerate,
            EngineArg::Structure => Engine::Structure,
            EngineArg::Both => Engine::Both,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "partgal", version, about = "Partial Galois theory of finite commutative rings")]
pub struct Cli {
    /// Instance description in TOML.
    #[arg(long, global = true, conflicts_with = "fixture")]
    pub config: Option<PathBuf>,
    /// Built-in instance (see `partgal fixtures`).
    #[arg(long, global = true)]
    pub fixture: Option<String>,
    /// Also write the report as JSON to this path.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Enumeration budget shared by the searches of one command.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Cohomology engine; by default enumeration for n <= 1, structure above.
    #[arg(long, global = true, value_enum)]
    pub engine: Option<EngineArg>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the partial action axioms.
    Validate,
    /// The invariant subring.
    Invariants,
    /// Search for Galois coordinates and build the regular representation.
    Galois,
    /// H^n(G, alpha, R).
    Cohomology {
        #[arg(long)]
        n: usize,
    },
    /// Build and check a crossed product.
    Crossed {
        /// identity, coboundary:SEED or file:PATH
        #[arg(long, default_value = "identity")]
        twist: String,
        /// Write structure constants to this path.
        #[arg(long)]
        constants: Option<PathBuf>,
    },
    /// The twisted bimodules, their factor set and Delta(Theta).
    DeltaTheta,
    /// PicS(R), the induced action and its first cohomology.
    Pics,
    /// Compute the terms of the seven-term sequence and check consistency.
    Sequence,
    /// Restrictions of a global action to each idempotent.
    Census,
    /// List the built-in fixtures.
    Fixtures,
}

pub fn load_instance(cli: &Cli) -> Result<Instance, CliError> {
    match (&cli.config, &cli.fixture) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            parse_config(&path.display().to_string(), &text).map_err(CliError::Config)
        }
        (None, Some(name)) => load_fixture(name).map_err(CliError::Config),
        (None, None) => Err(CliError::Usage("give --config PATH or --fixture NAME".into())),
    }
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    if let Command::Fixtures = cli.command {
        return Ok(commands::fixtures_cmd());
    }
    let inst = load_instance(cli)?;
    if let Command::Validate = cli.command {
        return Ok(commands::validate_cmd(&inst));
    }
    if let Command::Census = cli.command {
        return commands::census_cmd(&inst, cli.engine.map(Engine::from), cli.budget);
    }
    let act = match inst.action() {
        Ok(a) => a,
        // show the violations instead of computing on a non-action
        Err(ActionError::Invalid(_)) => return Ok(commands::validate_cmd(&inst)),
        Err(e) => return Err(CliError::Precondition(e.to_string())),
    };
    let budget = cli.budget;
    match &cli.command {
        Command::Invariants => Ok(commands::invariants_cmd(&inst, &act)),
        Command::Galois => Ok(commands::galois_cmd(&inst, &act, budget)),
        Command::Cohomology { n } => commands::cohomology_cmd(&inst, &act, *n, cli.engine.map(Engine::from), budget),
        Command::Crossed { twist, constants } => {
            let constants = constants.as_ref().map(|p| p.display().to_string());
            commands::crossed_cmd(&inst, &act, twist, constants.as_deref(), budget)
        }
        Command::DeltaTheta => commands::delta_theta_cmd(&inst, &act, budget),
        Command::Pics => Ok(commands::pics_cmd(&inst, &act, budget)),
        Command::Sequence => commands::sequence_cmd(&inst, &act, budget),
        Command::Validate | Command::Census | Command::Fixtures => unreachable!("handled above"),
    }
}
