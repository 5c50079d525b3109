use std::io::Write;
use std::process::ExitCode;

use blackburn::autos::DEFAULT_AUTC_BUDGET;
use blackburn::cli::{self, GroupSource, Level, Options, Output, EXIT_USAGE};
use blackburn::group::DEFAULT_MAX_ORDER;
use clap::{Args, Parser, Subcommand};

/// Finite group toolkit for class-preserving automorphisms and Blackburn groups.
#[derive(Parser)]
#[command(name = "blackburn", version)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Emit line-oriented key=value records
    #[arg(long, global = true)]
    porcelain: bool,
    /// Refuse to build groups larger than this
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER)]
    max_order: usize,
    /// Node budget for automorphism searches
    #[arg(long, global = true, default_value_t = DEFAULT_AUTC_BUDGET)]
    budget: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Order, Dedekind/Q-group flags, R(G) and the Blackburn verdict
    Classify {
        /// cayley/permgen file, catalog name or catalog expression
        group: String,
    },
    /// Enumerate class-preserving automorphisms and compare with Inn(G)
    Autc { group: String },
    /// Build and verify the order p^(p+2) construction
    Example {
        #[arg(long, default_value_t = 3)]
        p: usize,
    },
    /// Run the verification suites over the catalog
    Suite {
        #[arg(long, default_value = "quick")]
        level: String,
    },
    /// List the versioned catalog manifest
    Catalog,
}

fn run(cli: Cli) -> Output {
    let opts = Options { porcelain: cli.common.porcelain, max_order: cli.common.max_order, budget: cli.common.budget };
    let usage = |msg: String| Output { stdout: String::new(), stderr: format!("error: {msg}\n"), code: EXIT_USAGE };
    match cli.command {
        Command::Classify { group } => match GroupSource::from_arg(&group) {
            Ok(s) => cli::cmd_classify(&s, &opts),
            Err(e) => usage(e.to_string()),
        },
        Command::Autc { group } => match GroupSource::from_arg(&group) {
            Ok(s) => cli::cmd_autc(&s, &opts),
            Err(e) => usage(e.to_string()),
        },
        Command::Example { p } => cli::cmd_example(p, &opts),
        Command::Suite { level } => match Level::parse(&level) {
            Ok(level) => cli::cmd_suite(level, &opts),
            Err(e) => usage(e.to_string()),
        },
        Command::Catalog => cli::cmd_catalog(&opts),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    let out = run(cli);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
