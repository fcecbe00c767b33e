use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use springer_cli::{
    cmd_check, cmd_lusztig, cmd_stratum, cmd_table, cmd_weights, exit, CharacterSpec, CliError, Format,
    OutputDocument, DEFAULT_MAX_N,
};

/// Type-A generalized Springer correspondence data for SL_n.
#[derive(Debug, Parser)]
#[command(name = "springer", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Largest n accepted by `table` and `lusztig`.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_N)]
    max_n: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, clap::Args)]
struct CharacterArgs {
    /// Character by order (with --index).
    #[arg(long, requires = "index")]
    order: Option<usize>,

    /// 1-based position among the characters of the given order.
    #[arg(long, requires = "order")]
    index: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full generalized Springer correspondence table.
    Table { n: usize },
    /// Decomposition of the Lusztig sheaf for χ_k.
    Lusztig {
        n: usize,
        /// Character exponent k in 0..n.
        #[arg(conflicts_with_all = ["order", "index"], required_unless_present = "order")]
        k: Option<usize>,
        #[command(flatten)]
        by_order: CharacterArgs,
    },
    /// Fundamental and reduced weights with their toric relations.
    Weights { n: usize },
    /// Stabilizer and strata data for a vanishing pattern.
    Stratum {
        n: usize,
        /// Comma-separated positions c with x_c = 0.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        zeros: String,
        /// Character exponent to test for stratum membership.
        #[arg(long, conflicts_with_all = ["order", "index"])]
        chi: Option<usize>,
        #[command(flatten)]
        by_order: CharacterArgs,
    },
    /// Run every invariant suite up to n_max.
    Check { n_max: usize },
}

fn character(k: Option<usize>, by_order: &CharacterArgs) -> Option<CharacterSpec> {
    match (k, by_order.order, by_order.index) {
        (Some(k), _, _) => Some(CharacterSpec::Exponent(k)),
        (None, Some(order), Some(index)) => Some(CharacterSpec::ByOrder { order, index }),
        _ => None,
    }
}

fn emit(doc: &OutputDocument, output: Option<&PathBuf>) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, &doc.payload)?,
        None => std::io::stdout().lock().write_all(doc.payload.as_bytes())?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let doc = match &cli.command {
        Command::Table { n } => cmd_table(*n, cli.format, cli.max_n)?,
        Command::Lusztig { n, k, by_order } => {
            let spec = character(*k, by_order)
                .ok_or_else(|| CliError::Usage("give k or --order with --index".into()))?;
            cmd_lusztig(*n, spec, cli.format, cli.max_n)?
        }
        Command::Weights { n } => cmd_weights(*n, cli.format)?,
        Command::Stratum { n, zeros, chi, by_order } => {
            cmd_stratum(*n, zeros, character(*chi, by_order), cli.format)?
        }
        Command::Check { n_max } => {
            if *n_max == 0 {
                return Err(CliError::Usage("n_max must be positive".into()));
            }
            let (doc, ok) = cmd_check(*n_max, cli.format);
            emit(&doc, cli.output.as_ref())?;
            return Ok(if ok { exit::SUCCESS } else { exit::VERIFICATION_FAILED });
        }
    };
    emit(&doc, cli.output.as_ref())?;
    Ok(exit::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
