use clap::{Args, Parser, Subcommand};

use braided_forge::commands::{
    cmd_bosonize, cmd_check, cmd_eval, cmd_nichols, cmd_verify, CmdOutput, Format, RunConfig,
};
use braided_forge::CliError;
use braided_forge_core::scalar::FieldSpec;

/// Exact computations with braided vector spaces: validate Yang-Baxter and
/// Yetter-Drinfeld data, compute Nichols-type dimensions, machine-check the
/// graded bialgebra identities, bosonize, and evaluate morphism expressions.
#[derive(Parser)]
#[command(name = "braided-forge", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonOpts {
    /// Truncation degree N: all identities are checked in total degree <= N.
    #[arg(long, default_value_t = 4)]
    max_degree: usize,
    /// Override the spec's field: "rational" or a prime modulus.
    #[arg(long)]
    field: Option<String>,
    /// Output format: json or text.
    #[arg(long, default_value = "json")]
    format: String,
    /// Seed for the randomized self-test instances.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a braiding, Yetter-Drinfeld, or bialgebra spec.
    Check {
        spec: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Degreewise dimensions and relations of the type-one bialgebra.
    Nichols {
        spec: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Run the full checker suite on the spec.
    Verify {
        spec: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Compare the bosonization against the relative type-one construction.
    Bosonize {
        spec: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Evaluate the definitions of a .mor file in an environment.
    Eval {
        mor: String,
        env: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
}

fn parse_field(s: &str) -> Result<FieldSpec, CliError> {
    if s.eq_ignore_ascii_case("rational") || s == "q" || s == "Q" {
        return Ok(FieldSpec::Rational);
    }
    let p: u32 = s
        .parse()
        .map_err(|_| CliError::Input(format!("--field must be \"rational\" or a prime, got {s:?}")))?;
    FieldSpec::prime(p).map_err(|e| CliError::Input(format!("--field: {e}")))
}

fn config(opts: &CommonOpts) -> Result<RunConfig, CliError> {
    let format = match opts.format.as_str() {
        "json" => Format::Json,
        "text" => Format::Text,
        other => {
            return Err(CliError::Input(format!(
                "--format must be json or text, got {other:?}"
            )))
        }
    };
    let field_override = match &opts.field {
        Some(s) => Some(parse_field(s)?),
        None => None,
    };
    Ok(RunConfig {
        max_degree: opts.max_degree,
        format,
        seed: opts.seed,
        field_override,
    })
}

/// The thread cap bounds internal parallelism; evaluation is sequential and
/// deterministic, so any positive cap is honored trivially. A malformed
/// value is still an input error.
fn check_thread_cap() -> Result<(), CliError> {
    if let Ok(raw) = std::env::var("BRAIDED_FORGE_THREADS") {
        let parsed: Result<u32, _> = raw.trim().parse();
        match parsed {
            Ok(n) if n >= 1 => Ok(()),
            _ => Err(CliError::Input(format!(
                "BRAIDED_FORGE_THREADS must be a positive integer, got {raw:?}"
            ))),
        }
    } else {
        Ok(())
    }
}

fn run() -> Result<CmdOutput, CliError> {
    check_thread_cap()?;
    let cli = Cli::parse();
    match &cli.command {
        Command::Check { spec, opts } => cmd_check(spec, &config(opts)?),
        Command::Nichols { spec, opts } => cmd_nichols(spec, &config(opts)?),
        Command::Verify { spec, opts } => cmd_verify(spec, &config(opts)?),
        Command::Bosonize { spec, opts } => cmd_bosonize(spec, &config(opts)?),
        Command::Eval { mor, env, opts } => cmd_eval(mor, env, &config(opts)?),
    }
}

fn main() {
    match run() {
        Ok(out) => {
            println!("{}", out.stdout);
            std::process::exit(if out.math_failed { 1 } else { 0 });
        }
        Err(CliError::Math(msg)) => {
            println!("{{\"error\": {msg:?}}}");
            std::process::exit(1);
        }
        Err(CliError::Input(msg)) => {
            eprintln!("input error: {msg}");
            std::process::exit(2);
        }
    }
}
