use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use replicated_cli::{read_quiver, run, CliError, Command, GeneratorChoice, Options};

/// Exact certificates for m-replicated algebras of path algebras.
#[derive(Parser)]
#[command(name = "replicated", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// gl.dim End(M) <= 3 for the generator-cogenerator M.
    Repdim(Shared),
    /// dom.dim A^(m) >= m.
    Domdim(Shared),
    /// m + gl.dim A <= gl.dim A^(m) <= (m+1) gl.dim A + m.
    Bounds(Shared),
    /// add(M)-resolutions of length at most two, with Hom-exactness.
    Lemma24 {
        /// A summand or inventory label, or `all-inventory`.
        #[arg(long, default_value = "all-inventory")]
        target: String,
        #[arg(long, value_enum, default_value_t = GenArg::Auslander)]
        generator: GenArg,
        #[command(flatten)]
        shared: Shared,
    },
    /// Ext^1 against stable Hom over the ambient algebra.
    Extcheck {
        /// Check at most this many module pairs.
        #[arg(long)]
        sample: Option<usize>,
        #[command(flatten)]
        shared: Shared,
    },
    /// The built-in Kronecker instance with m = 1.
    Example34(Shared),
    /// Summands of M with dimension vectors and radical layers.
    Inventory(Shared),
}

#[derive(Args)]
struct Shared {
    /// Quiver description (JSON).
    #[arg(long)]
    quiver: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    m: usize,
    /// Resolution cap [default: 4m+4].
    #[arg(long)]
    cap: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    report: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Record wall-clock time in the report.
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenArg {
    Auslander,
    Minimal,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn execute(cmd: Cmd) -> Result<bool, CliError> {
    let (command, shared) = match cmd {
        Cmd::Repdim(s) => (Command::Repdim, s),
        Cmd::Domdim(s) => (Command::Domdim, s),
        Cmd::Bounds(s) => (Command::Bounds, s),
        Cmd::Example34(s) => (Command::Example34, s),
        Cmd::Inventory(s) => (Command::Inventory, s),
        Cmd::Extcheck { sample, shared } => (Command::Extcheck { sample }, shared),
        Cmd::Lemma24 { target, generator, shared } => {
            let target = (target != "all-inventory").then_some(target);
            let generator = match generator {
                GenArg::Auslander => GeneratorChoice::Auslander,
                GenArg::Minimal => GeneratorChoice::Minimal,
            };
            (Command::Lemma24 { target, generator }, shared)
        }
    };
    let quiver = shared.quiver.as_deref().map(read_quiver).transpose()?;
    let opts = Options { quiver, m: shared.m, cap: shared.cap, seed: shared.seed, timing: shared.timing };
    let (report, labels) = run(&command, &opts)?;
    let text = match shared.report {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(&labels),
    };
    match &shared.out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io { path: path.clone(), source })?,
        None => {
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
        }
    }
    Ok(report.passed())
}
