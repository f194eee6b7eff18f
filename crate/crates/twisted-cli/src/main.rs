use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use twisted_cli::output::render;
use twisted_cli::{run, CliError, Command, Format, RunConfig};

#[derive(Parser)]
#[command(name = "twisted", version, about = "Checks cocycles, twisted group algebras and their isomorphisms")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// JSON run configuration
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Override the residual tolerance
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Torus grid size for Laurent norms
    #[arg(long, global = true)]
    grid: Option<usize>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the cocycle identity and normalization exhaustively
    Validate,
    /// Product of two elements
    Mul {
        /// Element literal (JSON); defaults to elements.x in the config
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        y: Option<String>,
    },
    /// Adjoint of an element
    Star {
        #[arg(long)]
        x: Option<String>,
    },
    /// C*-norm from the regular representation
    Norm {
        #[arg(long)]
        x: Option<String>,
    },
    /// Partition f_alpha parameter vectors into cohomology classes
    Classify,
    /// Build and verify a named isomorphism
    Iso,
    /// Clifford cocycle, relations and periodicity maps
    Clifford,
}

fn literal(s: &Option<String>) -> Result<Option<Value>, CliError> {
    s.as_ref()
        .map(|s| serde_json::from_str(s).map_err(|e| CliError::Usage(format!("element literal: {e}"))))
        .transpose()
}

fn execute(cli: &Cli) -> Result<(Value, bool), CliError> {
    let path = cli.config.as_ref().ok_or_else(|| CliError::Usage("--config is required".into()))?;
    let mut cfg = RunConfig::load(path)?;
    if let Some(t) = cli.tol {
        if !(t > 0.0) {
            return Err(CliError::Usage("--tol must be positive".into()));
        }
        cfg.tol = Some(t);
    }
    if let Some(g) = cli.grid {
        if g == 0 {
            return Err(CliError::Usage("--grid must be positive".into()));
        }
        cfg.grid = Some(g);
    }
    let cmd = match &cli.command {
        Cmd::Validate => Command::Validate,
        Cmd::Mul { x, y } => Command::Mul { x: literal(x)?, y: literal(y)? },
        Cmd::Star { x } => Command::Star { x: literal(x)? },
        Cmd::Norm { x } => Command::Norm { x: literal(x)? },
        Cmd::Classify => Command::Classify,
        Cmd::Iso => Command::Iso,
        Cmd::Clifford => Command::Clifford,
    };
    let out = run(&cmd, &cfg)?;
    Ok((out.report, out.ok))
}

fn emit(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Usage(format!("{}: {e}", p.display()))),
        None => {
            std::io::stdout().write_all(text.as_bytes()).ok();
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (report, code) = match execute(&cli) {
        Ok((report, ok)) => (report, if ok { 0 } else { 1 }),
        Err(e @ CliError::Domain(_)) => (json!({ "ok": false, "error": e.to_string() }), 1),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = emit(&cli, &render(&report, cli.format)) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
