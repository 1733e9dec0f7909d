//! `semigroup` command-line driver.
//!
//! Exit codes: 0 success, 1 usage error, 2 invalid input, 3 limit exceeded.
//! Results go to the output stream, diagnostics to the error stream.

pub mod output;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};

use semigroups::{
    classify, decompose, preimages, reassemble, Census, NumericalSemigroup, SemigroupError,
};

use output::{
    emit, CensusDoc, ClassifyDoc, D2Doc, DecomposeDoc, Format, InfoDoc, PreimagesDoc,
    ReassembleDoc, Summary,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "semigroup",
    version,
    about = "Compute with numerical semigroups and their double covers"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    /// Read semigroup arguments as gap lists instead of generator lists.
    #[arg(long, global = true)]
    gaps: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Gaps, genus, Frobenius number, multiplicity, Apéry set and minimal generators.
    Info { semigroup: String },
    /// Halving map: halves of the even members.
    D2 { semigroup: String },
    /// Split T as 2*d2(T) + <n, n+2l_1, ..., n+2l_s>.
    Decompose { semigroup: String },
    /// Build 2*base + <n, n+2l_1, ..., n+2l_s>.
    Reassemble {
        #[arg(long)]
        base: String,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "")]
        offsets: String,
    },
    /// Every T with d2(T) equal to the given semigroup, up to a genus bound.
    Preimages {
        semigroup: String,
        #[arg(long)]
        max_genus: u32,
    },
    /// All semigroups of one genus.
    Census {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        count_only: bool,
    },
    /// Double covering type verdict with provenance.
    Classify { semigroup: String },
}

#[derive(Debug)]
enum CliError {
    Input(String),
    Semigroup(SemigroupError),
    Io(std::io::Error),
}

impl From<SemigroupError> for CliError {
    fn from(e: SemigroupError) -> Self {
        CliError::Semigroup(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Semigroup(SemigroupError::LimitExceeded { .. }) => EXIT_LIMIT,
            CliError::Input(_) | CliError::Semigroup(_) => EXIT_INVALID,
            CliError::Io(_) => EXIT_USAGE,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Input(m) => m.clone(),
            CliError::Semigroup(e) => e.to_string(),
            CliError::Io(e) => format!("i/o error: {e}"),
        }
    }
}

/// Parse a comma-separated list of non-negative integers. Whitespace is
/// ignored and the empty string is the empty list.
pub fn parse_list(text: &str) -> Result<Vec<u32>, String> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|part| {
            let part = part.trim();
            part.parse::<u32>()
                .map_err(|_| format!("`{part}` is not a non-negative integer"))
        })
        .collect()
}

fn parse_semigroup(text: &str, as_gaps: bool) -> Result<NumericalSemigroup, CliError> {
    let values = parse_list(text).map_err(CliError::Input)?;
    let s = if as_gaps {
        NumericalSemigroup::from_gaps(values)?
    } else {
        NumericalSemigroup::from_generators(&values)?
    };
    Ok(s)
}

fn dispatch<W: Write>(cli: Cli, out: &mut W) -> Result<(), CliError> {
    let format = cli.format;
    let census = Census::from_env();
    match cli.command {
        Command::Info { semigroup } => {
            let s = parse_semigroup(&semigroup, cli.gaps)?;
            emit(&InfoDoc::new(&s), format, out)?;
        }
        Command::D2 { semigroup } => {
            let s = parse_semigroup(&semigroup, cli.gaps)?;
            let doc = D2Doc {
                input: (&s).into(),
                d2: (&semigroups::d2(&s)).into(),
            };
            emit(&doc, format, out)?;
        }
        Command::Decompose { semigroup } => {
            let s = parse_semigroup(&semigroup, cli.gaps)?;
            emit(&DecomposeDoc::new(&s, &decompose(&s)), format, out)?;
        }
        Command::Reassemble { base, n, offsets } => {
            let base = parse_semigroup(&base, cli.gaps)?;
            let offsets = parse_list(&offsets).map_err(CliError::Input)?;
            let result = reassemble(&base, n, &offsets)?;
            let doc = ReassembleDoc {
                base: (&base).into(),
                n,
                offsets,
                result: (&result).into(),
            };
            emit(&doc, format, out)?;
        }
        Command::Preimages {
            semigroup,
            max_genus,
        } => {
            let s = parse_semigroup(&semigroup, cli.gaps)?;
            if max_genus > census.ceiling() {
                return Err(SemigroupError::LimitExceeded {
                    requested: max_genus,
                    ceiling: census.ceiling(),
                }
                .into());
            }
            let found = preimages(&s, max_genus)?;
            let doc = PreimagesDoc {
                base: (&s).into(),
                max_genus,
                count: found.len(),
                semigroups: found.iter().map(Summary::from).collect(),
            };
            emit(&doc, format, out)?;
        }
        Command::Census { genus, count_only } => {
            let doc = if count_only {
                CensusDoc {
                    genus,
                    count: census.count_genus(genus)?,
                    semigroups: None,
                }
            } else {
                let records = census.enumerate_genus(genus)?;
                CensusDoc {
                    genus,
                    count: records.len() as u64,
                    semigroups: Some(records.iter().map(Summary::from).collect()),
                }
            };
            emit(&doc, format, out)?;
        }
        Command::Classify { semigroup } => {
            let s = parse_semigroup(&semigroup, cli.gaps)?;
            emit(&ClassifyDoc::new(&s, &classify(&s)), format, out)?;
        }
    }
    Ok(())
}

/// Run the CLI on `argv` (including the program name) and return the exit code.
pub fn run<I, T, W, E>(argv: I, out: &mut W, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
                return EXIT_USAGE;
            }
            // --help and --version
            let _ = out.write_all(rendered.as_bytes());
            return EXIT_OK;
        }
    };
    match dispatch(cli, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.exit_code()
        }
    }
}
