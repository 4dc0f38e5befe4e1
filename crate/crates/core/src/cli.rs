//! The `angulator` command line.
//!
//! Exit status: 0 success, 1 verification failure, 2 malformed input or
//! arguments, 3 invalid quiver or angulation, 4 index out of range,
//! 5 enumeration guard exceeded.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::annulus::AnnulusError;
use crate::disk::{enumerate_angulations, flip_graph, DiskConfig, DiskError, Guard};
use crate::io::{self as model_io, AnyAngulation};
use crate::quiver::{ColoredQuiver, QuiverError};
use crate::verify::{run_suite, Suite, VerifyOptions};
use crate::Error;

pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_OUT_OF_RANGE: i32 = 4;
pub const EXIT_GUARD: i32 = 5;

#[derive(Debug, Parser)]
#[command(
    name = "angulator",
    version,
    about = "Colored quiver mutation and (m+2)-angulations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Mutate a colored quiver at a vertex.
    Mutate {
        /// Path, inline JSON, or `-` for standard input.
        #[arg(default_value = "-")]
        input: String,
        #[arg(short, long)]
        k: usize,
        /// Apply the inverse mutation.
        #[arg(long)]
        inverse: bool,
        /// Use the three-step procedure instead of the closed formula.
        #[arg(long, conflicts_with = "inverse")]
        procedural: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Flip one arc of an angulation.
    Flip {
        #[arg(default_value = "-")]
        input: String,
        /// Index of the arc in canonical order.
        #[arg(short, long)]
        arc: usize,
    },
    /// Print the colored quiver of an angulation.
    Quiver {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Count the (m+2)-angulations of a polygon.
    Enumerate {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        sides: u32,
        /// Write the flip graph in DOT format to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Largest rank to enumerate; defaults to $ANGULATOR_GUARD or 12.
        #[arg(long)]
        guard: Option<usize>,
    },
    /// Run verification suites: all, compat, counts or cut.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random-walk length per annulus configuration.
        #[arg(long, default_value_t = 500)]
        steps: usize,
        #[arg(long)]
        guard: Option<usize>,
    },
    /// Check a quiver or an angulation.
    Validate {
        #[arg(default_value = "-")]
        input: String,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse(_) | Error::Io(_) => EXIT_MALFORMED,
            Error::Disk(DiskError::GuardExceeded { .. }) => EXIT_GUARD,
            Error::Quiver(QuiverError::VertexOutOfRange { .. }) => EXIT_OUT_OF_RANGE,
            Error::Quiver(_) | Error::Disk(_) | Error::Annulus(_) => EXIT_INVALID,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<DiskError> for Failure {
    fn from(e: DiskError) -> Self {
        Error::from(e).into()
    }
}

impl From<AnnulusError> for Failure {
    fn from(e: AnnulusError) -> Self {
        Error::from(e).into()
    }
}

fn read_input(input: &str, stdin: &mut dyn Read) -> Result<String, Failure> {
    if input == "-" {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|e| Failure::new(EXIT_MALFORMED, format!("reading standard input: {e}")))?;
        Ok(s)
    } else if input.trim_start().starts_with('{') {
        Ok(input.to_string())
    } else {
        fs::read_to_string(input).map_err(|e| Failure::new(EXIT_MALFORMED, format!("{input}: {e}")))
    }
}

fn valid_quiver(text: &str) -> Result<ColoredQuiver, Failure> {
    let q = model_io::quiver_from_json(text).map_err(|e| match e {
        Error::Quiver(q) => Failure::new(EXIT_INVALID, q.to_string()),
        other => other.into(),
    })?;
    let violations = q.validate();
    if violations.is_empty() {
        Ok(q)
    } else {
        let lines: Vec<String> = violations.iter().map(ToString::to_string).collect();
        Err(Failure::new(EXIT_INVALID, lines.join("\n")))
    }
}

fn render_quiver(q: &ColoredQuiver, format: Format) -> String {
    match format {
        Format::Json => model_io::quiver_to_json(q),
        Format::Dot => model_io::quiver_to_dot(q),
    }
}

fn guard(value: Option<usize>) -> Guard {
    value.map(Guard::new).unwrap_or_else(Guard::from_env)
}

fn arc_count(a: &AnyAngulation) -> usize {
    match a {
        AnyAngulation::Disk(d) => d.len(),
        AnyAngulation::Annulus(x) => x.len(),
    }
}

fn execute(
    command: Command,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    let text: String;
    match command {
        Command::Mutate {
            input,
            k,
            inverse,
            procedural,
            format,
        } => {
            let q = valid_quiver(&read_input(&input, stdin)?)?;
            let mutated = if inverse {
                q.mutate_inverse(k)
            } else if procedural {
                q.mutate_procedural(k)
            } else {
                q.mutate(k)
            }
            .map_err(Error::from)?;
            text = render_quiver(&mutated, format);
        }
        Command::Flip { input, arc } => {
            let a = model_io::angulation_from_json(&read_input(&input, stdin)?)?;
            let n = arc_count(&a);
            if arc >= n {
                return Err(Failure::new(
                    EXIT_OUT_OF_RANGE,
                    format!("arc index {arc} out of range for {n} arcs"),
                ));
            }
            let flipped: AnyAngulation = match a {
                AnyAngulation::Disk(d) => d.flip(d.diagonals()[arc])?.into(),
                AnyAngulation::Annulus(x) => x.flip(&x.arcs()[arc])?.into(),
            };
            text = model_io::angulation_to_json(&flipped);
        }
        Command::Quiver { input, format } => {
            let q = match model_io::angulation_from_json(&read_input(&input, stdin)?)? {
                AnyAngulation::Disk(d) => d.quiver(),
                AnyAngulation::Annulus(x) => x.quiver(),
            };
            text = render_quiver(&q, format);
        }
        Command::Enumerate {
            m,
            sides,
            dot,
            guard: g,
        } => {
            let config = DiskConfig::new(m, sides)?;
            let g = guard(g);
            let e = enumerate_angulations(config, g, false)?;
            if let Some(path) = dot {
                let graph = flip_graph(config, g)?;
                fs::write(&path, graph.to_dot()).map_err(|e| {
                    Failure::new(EXIT_MALFORMED, format!("{}: {e}", path.display()))
                })?;
            }
            text = format!("{}\n", e.count);
        }
        Command::Verify {
            suite,
            seed,
            steps,
            guard: g,
        } => {
            let suite: Suite = suite.parse()?;
            let opts = VerifyOptions {
                seed,
                steps,
                guard: guard(g),
                ..VerifyOptions::default()
            };
            let reports = run_suite(suite, &opts);
            let pass = reports.iter().all(|r| r.pass);
            for r in &reports {
                let _ = writeln!(err, "{r}");
            }
            let value = json!({ "pass": pass, "reports": reports });
            text = serde_json::to_string_pretty(&value).expect("reports serialize") + "\n";
            let _ = out.write_all(text.as_bytes());
            return Ok(if pass { 0 } else { EXIT_VERIFY_FAILED });
        }
        Command::Validate { input } => {
            let raw = read_input(&input, stdin)?;
            let value: serde_json::Value = serde_json::from_str(&raw).map_err(Error::from)?;
            if value.get("type").is_some() {
                let kind = match model_io::angulation_from_json(&raw)? {
                    AnyAngulation::Disk(_) => "disk",
                    AnyAngulation::Annulus(_) => "annulus",
                };
                text = serde_json::to_string_pretty(&json!({ "type": kind, "valid": true }))
                    .expect("json")
                    + "\n";
            } else {
                valid_quiver(&raw)?;
                text = serde_json::to_string_pretty(&json!({ "type": "quiver", "valid": true }))
                    .expect("json")
                    + "\n";
            }
        }
    }
    let _ = out.write_all(text.as_bytes());
    Ok(0)
}

/// Runs a parsed command line and returns the exit status.
pub fn run(cli: Cli, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(cli.command, stdin, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

/// Parses `args` (including the program name) and runs them. Argument
/// errors exit with status 2, help and version with 0.
pub fn run_args<I, T>(
    args: I,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, stdin, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_MALFORMED } else { 0 };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
            } else {
                let _ = out.write_all(rendered.as_bytes());
            }
            code
        }
    }
}
