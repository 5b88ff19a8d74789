use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use jetvar_cli::commands::{run, Command, RunArgs};
use jetvar_cli::error::CliError;
use jetvar_cli::model::Format;
use jetvar_cli::parser::parse_model;
use jetvar_cli::report::Report;

/// Exact variational calculus on jet bundles: Euler-Lagrange operators,
/// Noether currents, and symmetry classification of field-theory models.
#[derive(Parser)]
#[command(name = "jetvar", version, about)]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Subcommand)]
enum CliCommand {
    /// Euler-Lagrange operator of a Lagrangian
    El(CommonArgs),
    /// First variational split dL = delta L + dH(phi)
    Split(CommonArgs),
    /// Symmetry classification and conserved current
    Noether(CommonArgs),
    /// Lie derivative of a Lagrangian along a symmetry
    Lie(CommonArgs),
    /// Variational triviality of a Lagrangian (local verdict)
    Trivial(CommonArgs),
    /// Helmholtz condition for a source form or a Lagrangian's operator
    Helmholtz(CommonArgs),
    /// Verify the master identity delta(L_u L) = L_u(delta L)
    #[command(name = "master-check")]
    MasterCheck(CommonArgs),
    /// Split a (k, n) form into source part plus horizontal differential
    Decompose(CommonArgs),
    /// Search a horizontal potential xi with dH(xi) equal to a form
    Potential(CommonArgs),
}

impl CliCommand {
    fn split(self) -> (Command, CommonArgs) {
        match self {
            CliCommand::El(args) => (Command::El, args),
            CliCommand::Split(args) => (Command::Split, args),
            CliCommand::Noether(args) => (Command::Noether, args),
            CliCommand::Lie(args) => (Command::Lie, args),
            CliCommand::Trivial(args) => (Command::Trivial, args),
            CliCommand::Helmholtz(args) => (Command::Helmholtz, args),
            CliCommand::MasterCheck(args) => (Command::MasterCheck, args),
            CliCommand::Decompose(args) => (Command::Decompose, args),
            CliCommand::Potential(args) => (Command::Potential, args),
        }
    }
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

#[derive(Args)]
struct CommonArgs {
    /// Model file to load
    #[arg(long, value_name = "FILE")]
    model: PathBuf,
    /// Lagrangian name (defaults to the model's only one)
    #[arg(long, value_name = "NAME")]
    lagrangian: Option<String>,
    /// Symmetry name (defaults to the model's only one)
    #[arg(long, value_name = "NAME")]
    symmetry: Option<String>,
    /// Source-form name (helmholtz)
    #[arg(long, value_name = "NAME")]
    source: Option<String>,
    /// Form name (decompose, potential)
    #[arg(long, value_name = "NAME")]
    form: Option<String>,
    /// Ansatz bound: maximal jet order of the potential search
    #[arg(long, value_name = "K")]
    max_jet_order: Option<u32>,
    /// Ansatz bound: maximal polynomial degree of the potential search
    #[arg(long, value_name = "D")]
    max_degree: Option<u32>,
    /// Output format: text, json or latex (falls back to JETVAR_FORMAT,
    /// then the model's `set output`, then text)
    #[arg(long, env = "JETVAR_FORMAT", value_parser = parse_format)]
    format: Option<Format>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, args) = cli.command.split();
    match execute(command, &args) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("jetvar: {err}");
            if let CliError::Internal(_) = err {
                eprintln!("jetvar: this indicates a bug in the engine, not in the model");
            }
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

fn execute(command: Command, args: &CommonArgs) -> Result<ExitCode, CliError> {
    let source = std::fs::read_to_string(&args.model)
        .map_err(|err| CliError::input(format!("cannot read {}: {err}", args.model.display())))?;
    let model = parse_model(&source).map_err(|err| CliError::Parse {
        path: args.model.display().to_string(),
        source: err,
    })?;
    let format = args.format.or(model.options.output).unwrap_or_default();
    let run_args = RunArgs {
        lagrangian: args.lagrangian.clone(),
        symmetry: args.symmetry.clone(),
        source: args.source.clone(),
        form: args.form.clone(),
        max_jet_order: args.max_jet_order,
        max_degree: args.max_degree,
    };
    let report = run(&model, command, &run_args)?;
    print!("{}", report.render(&model.signature, format));

    // a failed master identity is an engine bug, printed loudly
    if let Report::MasterCheck { pass: false, .. } = report {
        eprintln!("jetvar: internal identity check failed: master identity residual nonzero");
        return Ok(ExitCode::from(3));
    }
    Ok(ExitCode::SUCCESS)
}
