//! Command-line front end for `jointinv-core`.
//!
//! Every subcommand renders both a human-readable text and a JSON document;
//! `--format` picks one. Output is a pure function of the input.
//!
//! Exit codes: `0` success, `2` input or schema error, `3` a Darboux
//! expression that is not invariant, `1` internal failure.

use std::io::{Read, Write};
use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use jointinv_core::lie::Representation;

mod commands;

pub use commands::Rendered;

#[derive(Parser, Debug)]
#[command(
    name = "jointinv",
    version,
    about = "Joint invariants of rational vector-field families"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,

    /// Write the result to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Rep {
    Adjoint,
    Coadjoint,
}

impl From<Rep> for Representation {
    fn from(r: Rep) -> Self {
        match r {
            Rep::Adjoint => Representation::Adjoint,
            Rep::Coadjoint => Representation::Coadjoint,
        }
    }
}

/// Exactly one input; `-` reads stdin and text starting with `{` is taken as
/// inline JSON.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Field system JSON (path, `-` or inline).
    #[arg(long)]
    pub system: Option<String>,

    /// Catalog entry name, e.g. `so3` or `so_pq(2,1)`.
    #[arg(long)]
    pub catalog: Option<String>,

    /// Structure-constants JSON (path, `-` or inline).
    #[arg(long)]
    pub structure: Option<String>,
}

/// Input plus the realisation used when it is given by structure constants.
#[derive(Args, Debug, Clone)]
pub struct Input {
    #[command(flatten)]
    pub source: Source,

    /// Realisation of structure constants as fields.
    #[arg(long, value_enum, default_value_t = Rep::Coadjoint)]
    pub representation: Rep,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduced echelon form over the rational-function field.
    Reduce(Input),
    /// Close the family under brackets until it commutes.
    Closure(Input),
    /// Pairwise brackets of the fields, or the table of an algebra.
    BracketTable(Input),
    /// Field system JSON of an algebra's adjoint or coadjoint realisation.
    Generate(Input),
    /// Polynomial invariants up to a degree bound.
    Invariants {
        #[command(flatten)]
        input: Input,
        /// Largest total degree of the ansatz.
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
    },
    /// Check that a Darboux-type expression is a joint invariant.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Darboux expression JSON (path, `-` or inline).
        #[arg(long)]
        darboux: String,
    },
    /// List the catalog, or show one entry.
    Catalog {
        /// Entry to show.
        name: Option<String>,
    },
    /// Generic rank, and optionally the rank at a point.
    Rank {
        #[command(flatten)]
        input: Input,
        /// Values for every name, e.g. `x=1,y=-2,z=1/3`.
        #[arg(long)]
        at: Option<String>,
    },
}

/// A failure with its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<jointinv_core::Error> for Failure {
    fn from(e: jointinv_core::Error) -> Self {
        Failure::input(e.to_string())
    }
}

/// Result of one invocation, as a process would report it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Reads an argument naming a document.
pub(crate) fn read_document(arg: &str) -> Result<String, Failure> {
    if arg == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::input(format!("cannot read stdin: {e}")))?;
        return Ok(text);
    }
    if arg.trim_start().starts_with('{') {
        return Ok(arg.to_string());
    }
    std::fs::read_to_string(arg).map_err(|e| Failure::input(format!("cannot read {arg}: {e}")))
}

/// Runs a parsed request and renders it in the requested format.
pub fn execute(cli: &Cli) -> Result<(i32, String), Failure> {
    let rendered = commands::dispatch(&cli.command)?;
    let text = match cli.format {
        Format::Human => rendered.human,
        Format::Json => rendered.json,
    };
    Ok((rendered.code, text))
}

/// Parses `args` (program name first), executes, and captures what would be
/// printed. Panics are reported as internal failures.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 {
                (text, String::new())
            } else {
                (String::new(), text)
            };
            return Outcome {
                code,
                stdout,
                stderr,
            };
        }
    };
    let result = panic::catch_unwind(AssertUnwindSafe(|| execute(&cli)));
    let (code, text) = match result {
        Ok(Ok(done)) => done,
        Ok(Err(f)) => {
            return Outcome {
                code: f.code,
                stdout: String::new(),
                stderr: format!("error: {}\n", f.message),
            }
        }
        Err(_) => {
            return Outcome {
                code: 1,
                stdout: String::new(),
                stderr: "error: internal invariant violated\n".to_string(),
            }
        }
    };
    match &cli.output {
        Some(path) => {
            match std::fs::File::create(path).and_then(|mut f| f.write_all(text.as_bytes())) {
                Ok(()) => Outcome {
                    code,
                    stdout: String::new(),
                    stderr: String::new(),
                },
                Err(e) => Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: format!("error: cannot write {}: {e}\n", path.display()),
                },
            }
        }
        None => Outcome {
            code,
            stdout: text,
            stderr: String::new(),
        },
    }
}
