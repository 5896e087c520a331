use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qminor_core::IndexSet;

mod commands;
mod golden;
mod report;

use report::Report;

/// Batch verifier for commutation relations among quantum minors.
#[derive(Parser, Debug)]
#[command(name = "qminor", version)]
struct Cli {
    /// Emit a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Lift the desk-scale guardrails.
    #[arg(long, global = true)]
    force: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 20_240_601)]
    seed: u64,
    /// Report elapsed_ms as 0 so output is reproducible byte for byte.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Split {
    /// The set J, e.g. 1,5,6.
    #[arg(long, value_parser = parse_set)]
    j: IndexSet,
    /// The lower part J' of J ("" for none).
    #[arg(long, value_parser = parse_set)]
    jprime: IndexSet,
    /// |I|; defaults to |J|.
    #[arg(long)]
    isize: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether J surrounds I.
    Surrounds {
        #[arg(long, value_parser = parse_set)]
        j: IndexSet,
        #[arg(long, value_parser = parse_set)]
        i: IndexSet,
    },
    /// Straighten [J][I] and [I][J] and look for a power of q relating them.
    Qcommute {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_set)]
        j: IndexSet,
        #[arg(long, value_parser = parse_set)]
        i: IndexSet,
    },
    /// Classify every pair |J| <= |I| <= D in [n].
    Sweep {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_size: usize,
    },
    /// Reproduce one of the worked tables.
    Tables {
        #[arg(long)]
        which: u8,
        #[arg(long, value_parser = parse_set)]
        j: Option<IndexSet>,
        #[arg(long, value_parser = parse_set)]
        jprime: Option<IndexSet>,
        #[arg(long)]
        isize: Option<usize>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Describe the weighted graph on subsets of J, optionally as DOT.
    Gamma {
        #[command(flatten)]
        split: Split,
        #[arg(long)]
        dot: Option<std::path::PathBuf>,
    },
    /// List the paths of the graph with weights and their pairing.
    Paths {
        #[command(flatten)]
        split: Split,
    },
    /// Compute theta by elimination, by signed path sum and in closed form.
    Theta {
        #[command(flatten)]
        split: Split,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Laplace,
    Plucker,
    Homological,
    Flag,
    Paths,
    Theta,
    Implication,
    All,
}

fn parse_set(s: &str) -> Result<IndexSet, String> {
    IndexSet::parse(s).map_err(|e| e.to_string())
}

/// Failure modes other than a failed check.
#[derive(Debug)]
pub enum Fail {
    Usage(String),
    Guardrail(String),
    Io(String),
    Internal(String),
}

impl Fail {
    fn code(&self) -> u8 {
        match self {
            Fail::Internal(_) => 1,
            Fail::Usage(_) => 2,
            Fail::Guardrail(_) => 3,
            Fail::Io(_) => 4,
        }
    }
}

impl From<qminor_core::Error> for Fail {
    fn from(e: qminor_core::Error) -> Self {
        use qminor_core::Error as E;
        match e {
            E::Guardrail(m) => Fail::Guardrail(m),
            E::Invariant(m) => Fail::Internal(m),
            other => Fail::Usage(other.to_string()),
        }
    }
}

pub struct Ctx {
    pub force: bool,
    pub seed: u64,
}

impl Ctx {
    pub fn guard(&self, ok: bool, what: impl Into<String>) -> Result<(), Fail> {
        let what = what.into();
        if ok {
            Ok(())
        } else if self.force {
            eprintln!("warning: {what}; continuing because of --force");
            Ok(())
        } else {
            Err(Fail::Guardrail(format!("{what} (use --force to override)")))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx { force: cli.force, seed: cli.seed };
    let start = Instant::now();
    let outcome = match &cli.command {
        Command::Surrounds { j, i } => commands::surrounds(j, i),
        Command::Qcommute { n, j, i } => commands::qcommute(&ctx, *n, j, i),
        Command::Sweep { n, max_size } => commands::sweep(&ctx, *n, *max_size),
        Command::Tables { which, j, jprime, isize } => commands::tables(*which, j.as_ref(), jprime.as_ref(), *isize),
        Command::Verify { suite, n } => commands::verify(&ctx, *suite, *n),
        Command::Gamma { split, dot } => commands::gamma(split, dot.as_deref()),
        Command::Paths { split } => commands::paths(split),
        Command::Theta { split } => commands::theta(split),
    };
    let mut report: Report = match outcome {
        Ok(r) => r,
        Err(f) => {
            let msg = match &f {
                Fail::Usage(m) | Fail::Guardrail(m) | Fail::Io(m) | Fail::Internal(m) => m,
            };
            eprintln!("error: {msg}");
            return ExitCode::from(f.code());
        }
    };
    if !cli.no_timing {
        report.elapsed_ms = start.elapsed().as_millis() as u64;
    }
    if cli.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text(!cli.no_timing));
    }
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
