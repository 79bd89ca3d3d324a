use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hombi_cli::commands::{self, CliError, Outcome};
use hombi_cli::io::{self, BuilderSpec};
use hombi_core::structures::HomBialgebra;

/// Exact computations with finite-dimensional Hom-bialgebras.
///
/// Exit status: 0 when every check passes, 1 on a mathematical failure, 2 on bad input.
#[derive(Parser)]
#[command(name = "hombi", version)]
struct Cli {
  /// Print machine-readable JSON instead of text.
  #[arg(long, global = true)]
  json: bool,
  /// Print nothing on success; only the exit status reports the result.
  #[arg(long, global = true)]
  quiet: bool,
  #[command(subcommand)]
  command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum BuilderKind {
  Taft,
  Group,
}

/// A structure read from FILE, or produced by a builder.
#[derive(Args)]
struct Source {
  /// Structure file, or a deformation-style builder object.
  file: Option<PathBuf>,
  #[arg(long, value_enum, conflicts_with = "file")]
  builder: Option<BuilderKind>,
  /// Taft parameter, an exact rational such as 2 or -1/2.
  #[arg(long, requires = "builder", allow_hyphen_values = true)]
  lambda: Option<String>,
  /// Group order.
  #[arg(long, requires = "builder")]
  n: Option<usize>,
  /// Group twist g ↦ kg.
  #[arg(long, requires = "builder")]
  k: Option<usize>,
}

impl Source {
  fn load(&self) -> Result<HomBialgebra, CliError> {
    match (&self.file, self.builder) {
      (Some(path), _) => Ok(io::load_bialgebra(path)?),
      (None, Some(kind)) => {
        let builder = match kind {
          BuilderKind::Taft => "taft",
          BuilderKind::Group => "group",
        };
        let spec = BuilderSpec { builder: builder.into(), lambda: self.lambda.clone(), n: self.n, k: self.k };
        Ok(io::build(&spec)?)
      }
      (None, None) => {
        Err(CliError::Input(io::InputError::Schema("give a structure file or --builder".into())))
      }
    }
  }
}

#[derive(Subcommand)]
enum Command {
  /// Check every Hom-bialgebra axiom.
  Validate {
    #[command(flatten)]
    source: Source,
  },
  /// Dimensions of Zⁿ, Bⁿ and Hⁿ of the total complex: `cohomology FILE N` or
  /// `cohomology --builder ... N`.
  Cohomology {
    /// FILE followed by N, or N alone with --builder.
    #[arg(num_args = 1..=2, required = true)]
    operands: Vec<String>,
    #[arg(long, value_enum)]
    builder: Option<BuilderKind>,
    #[arg(long, requires = "builder", allow_hyphen_values = true)]
    lambda: Option<String>,
    #[arg(long, requires = "builder")]
    n: Option<usize>,
    #[arg(long, requires = "builder")]
    k: Option<usize>,
    /// Also print a basis of representatives.
    #[arg(long)]
    representatives: bool,
  },
  /// Work with a truncated deformation file.
  Deform {
    file: PathBuf,
    #[command(subcommand)]
    action: DeformAction,
  },
  /// Solve for the antipode and check its properties.
  Antipode {
    #[command(flatten)]
    source: Source,
  },
  /// The Yau twist by the map in BETA.
  Twist {
    #[command(flatten)]
    source: Source,
    #[arg(long)]
    beta: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
  },
  /// The dual structure.
  Dual {
    #[command(flatten)]
    source: Source,
    #[arg(long)]
    out: Option<PathBuf>,
  },
  /// The tensor product of two structures.
  Tensor {
    left: PathBuf,
    right: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
  },
}

#[derive(Subcommand)]
enum DeformAction {
  /// Residuals of the deformation equations at every order.
  Residuals,
  /// The obstruction to extending to order S.
  Obstruction {
    #[arg(long)]
    order: usize,
    /// Write the extended deformation here when it exists.
    #[arg(long)]
    out: Option<PathBuf>,
  },
  /// Apply the formal automorphism in PHI.
  Gauge {
    #[arg(long)]
    phi: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
  },
  /// Gauge to an equivalent deformation that preserves unit and counit.
  NormalizeUnit {
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    gauge_out: Option<PathBuf>,
  },
  /// Twist every term by the map in BETA.
  Twist {
    #[arg(long)]
    beta: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
  },
}

fn parse_degree(text: &str) -> Result<usize, CliError> {
  text
    .parse()
    .map_err(|_| CliError::Input(io::InputError::Schema(format!("degree \"{text}\" is not a number"))))
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
  match &cli.command {
    Command::Validate { source } => Ok(commands::validate(&source.load()?)),
    Command::Cohomology { operands, builder, lambda, n, k, representatives } => {
      let source = Source {
        file: (operands.len() == 2).then(|| PathBuf::from(&operands[0])),
        builder: *builder,
        lambda: lambda.clone(),
        n: *n,
        k: *k,
      };
      let degree = parse_degree(operands.last().expect("at least one operand"))?;
      commands::cohomology(&source.load()?, degree, *representatives)
    }
    Command::Deform { file, action } => {
      let def = io::load_deformation(file)?;
      match action {
        DeformAction::Residuals => commands::deform_residuals(&def),
        DeformAction::Obstruction { order, out } => {
          commands::deform_obstruction(&def, *order, out.as_deref())
        }
        DeformAction::Gauge { phi, out } => commands::deform_gauge(&def, phi, out.as_deref()),
        DeformAction::NormalizeUnit { out, gauge_out } => {
          commands::deform_normalize(&def, out.as_deref(), gauge_out.as_deref())
        }
        DeformAction::Twist { beta, out } => commands::deform_twist(&def, beta, out.as_deref()),
      }
    }
    Command::Antipode { source } => commands::antipode(&source.load()?),
    Command::Twist { source, beta, out } => commands::twist(&source.load()?, beta, out.as_deref()),
    Command::Dual { source, out } => commands::dual_of(&source.load()?, out.as_deref()),
    Command::Tensor { left, right, out } => {
      commands::tensor(&io::load_bialgebra(left)?, &io::load_bialgebra(right)?, out.as_deref())
    }
  }
}

fn main() -> ExitCode {
  let cli = Cli::parse();
  let code = match run(&cli) {
    Ok(outcome) => {
      if !cli.quiet {
        let body = if cli.json { io::to_pretty(&outcome.json) } else { outcome.text };
        // A closed pipe (e.g. `| head`) is not an error worth reporting.
        let _ = writeln!(std::io::stdout().lock(), "{body}");
      }
      outcome.code
    }
    Err(e) => {
      eprintln!("error: {e}");
      e.exit_code()
    }
  };
  ExitCode::from(code as u8)
}
