//! Command-line front end for `tensorfin-core`: reads `.qa` files, runs a
//! subcommand and reports the outcome as text or JSON.
//!
//! Exit codes: 0 finite / yes, 1 infinite / no, 2 unsupported or
//! inconclusive, 64 usage or parse error, 70 internal precondition failure.

pub mod dsl;

use std::io::Write;
use std::path::{Path as FsPath, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;

use tensorfin_core::catalog::{contains_quotient, pattern};
use tensorfin_core::classifier::Verdict;
use tensorfin_core::cover::{cover_contains_pattern, cover_window};
use tensorfin_core::separated::{separated_quiver, OracleOutcome, SeparatedGraph};
use tensorfin_core::tensor::classify_triple;
use tensorfin_core::{classify, separated, tensor, AlgebraPresentation, VerdictKind};

use dsl::{Document, ParseError};

pub const EXIT_FINITE: u8 = 0;
pub const EXIT_INFINITE: u8 = 1;
pub const EXIT_UNSUPPORTED: u8 = 2;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_INTERNAL: u8 = 70;

#[derive(Debug, Parser)]
#[command(name = "tensorfin", version, about = "Representation-finiteness of tensor products of bound quiver algebras")]
pub struct Cli {
    /// Machine-readable JSON on stdout; errors as one-line JSON on stderr.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether A (x) B is representation-finite.
    Classify {
        a: PathBuf,
        b: PathBuf,
        /// Print every rule consulted.
        #[arg(long)]
        trace: bool,
    },
    /// Print the tensor product presentation.
    Tensor { a: PathBuf, b: PathBuf },
    /// List the components of the separated quiver.
    Separated {
        a: PathBuf,
        /// Add the Dynkin or Euclidean type of each component.
        #[arg(long)]
        types: bool,
    },
    /// Print a window of the periodic covering.
    Cover {
        a: PathBuf,
        #[arg(long)]
        window: usize,
    },
    /// Does the algebra have the named pattern as a quotient?
    Contains {
        a: PathBuf,
        #[arg(long)]
        pattern: String,
        /// Search a window of the periodic covering instead of the algebra.
        #[arg(long)]
        on_cover: bool,
    },
    /// One-sided infiniteness test on the radical-square-zero quotient of A (x) B.
    Oracle { a: PathBuf, b: PathBuf },
    /// Decide whether A (x) B (x) C is representation-finite.
    Triple { a: PathBuf, b: PathBuf, c: PathBuf },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}:{source}")]
    Parse { path: String, source: ParseError },
    #[error("{0}")]
    Core(#[from] tensorfin_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } | CliError::Parse { .. } => EXIT_USAGE,
            CliError::Core(_) => EXIT_INTERNAL,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Io { .. } => "io",
            CliError::Parse { .. } => "parse",
            CliError::Core(_) => "internal",
        }
    }
}

#[derive(Serialize)]
struct ErrorJson<'a> {
    error: &'a str,
    message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    file: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    line: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    column: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    token: Option<&'a str>,
}

fn error_json(e: &CliError) -> String {
    let mut j =
        ErrorJson { error: e.kind(), message: e.to_string(), file: None, line: None, column: None, token: None };
    if let CliError::Parse { path, source } = e {
        j.message = source.message.clone();
        j.file = Some(path);
        j.line = Some(source.line);
        j.column = Some(source.column);
        j.token = source.token.as_deref();
    }
    serde_json::to_string(&j).expect("serialisable")
}

#[derive(Serialize)]
struct TraceJson {
    rule: &'static str,
    cite: &'static str,
    detail: String,
}

#[derive(Serialize)]
struct VerdictJson {
    verdict: &'static str,
    rule: &'static str,
    trace: Vec<TraceJson>,
    unsupported_reason: Option<&'static str>,
}

fn deciding_rule_id(v: &Verdict) -> &'static str {
    v.deciding_rule().or_else(|| v.trace.last().map(|t| t.rule)).map_or("", |r| r.id())
}

fn verdict_json(v: &Verdict) -> VerdictJson {
    VerdictJson {
        verdict: v.kind.as_str(),
        rule: deciding_rule_id(v),
        trace: v
            .trace
            .iter()
            .map(|t| TraceJson { rule: t.rule.id(), cite: t.rule.cite(), detail: t.detail.clone() })
            .collect(),
        unsupported_reason: v.unsupported_reason.map(|r| r.as_str()),
    }
}

pub fn verdict_exit_code(kind: VerdictKind) -> u8 {
    match kind {
        VerdictKind::Finite => EXIT_FINITE,
        VerdictKind::Infinite => EXIT_INFINITE,
        VerdictKind::Unsupported => EXIT_UNSUPPORTED,
    }
}

pub fn load(path: &FsPath) -> Result<Document, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: shown.clone(), source })?;
    dsl::parse(&text).map_err(|source| CliError::Parse { path: shown, source })
}

fn report_verdict(v: &Verdict, json: bool, trace: bool, out: &mut dyn Write) -> std::io::Result<u8> {
    if json {
        writeln!(out, "{}", serde_json::to_string(&verdict_json(v)).expect("serialisable"))?;
    } else {
        writeln!(out, "{}", v.kind)?;
        if trace {
            for t in &v.trace {
                writeln!(out, "  {:<8} {}  [{}]", t.rule.id(), t.detail, t.rule.cite())?;
            }
        }
    }
    Ok(verdict_exit_code(v.kind))
}

fn write_text_or_json(out: &mut dyn Write, json: bool, text: &str) -> std::io::Result<()> {
    if json {
        writeln!(out, "{}", serde_json::json!({ "presentation": text }))
    } else {
        write!(out, "{text}")
    }
}

#[derive(Serialize)]
struct ComponentJson {
    vertices: Vec<String>,
    #[serde(rename = "type")]
    graph_type: String,
    dynkin: bool,
}

fn separated_report(a: &AlgebraPresentation, types: bool, json: bool, out: &mut dyn Write) -> std::io::Result<()> {
    let q = a.quiver();
    let sep = separated_quiver(q);
    let comps: Vec<ComponentJson> = sep
        .components
        .iter()
        .map(|c| {
            let t = c.graph_type();
            ComponentJson {
                vertices: c.vertices.iter().map(|&v| SeparatedGraph::vertex_name(q, v)).collect(),
                graph_type: t.to_string(),
                dynkin: t.is_dynkin(),
            }
        })
        .collect();
    if json {
        return writeln!(out, "{}", serde_json::json!({ "components": comps }));
    }
    for (i, c) in comps.iter().enumerate() {
        let mut line = format!("component {}: {}", i + 1, c.vertices.join(" "));
        if types {
            let tag = if c.dynkin { "dynkin" } else { "non-dynkin" };
            line.push_str(&format!("  {} {tag}", c.graph_type));
        }
        writeln!(out, "{line}")?;
    }
    Ok(())
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<u8, CliError> {
    let io = |e: std::io::Error| CliError::Io { path: "<stdout>".into(), source: e };
    let json = cli.json;
    match &cli.command {
        Command::Classify { a, b, trace } => {
            let (a, b) = (load(a)?, load(b)?);
            let v = classify(&a.algebra, &b.algebra)?;
            report_verdict(&v, json, *trace, out).map_err(io)
        }
        Command::Triple { a, b, c } => {
            let (a, b, c) = (load(a)?, load(b)?, load(c)?);
            let v = classify_triple(&a.algebra, &b.algebra, &c.algebra)?;
            report_verdict(&v, json, false, out).map_err(io)
        }
        Command::Tensor { a, b } => {
            let (a, b) = (load(a)?, load(b)?);
            let t = tensor(&a.algebra, &b.algebra);
            let name = format!("{}x{}", a.name, b.name);
            write_text_or_json(out, json, &dsl::print(&name, &t.presentation)).map_err(io)?;
            Ok(EXIT_FINITE)
        }
        Command::Separated { a, types } => {
            let a = load(a)?;
            separated_report(&a.algebra, *types, json, out).map_err(io)?;
            Ok(EXIT_FINITE)
        }
        Command::Cover { a, window } => {
            let a = load(a)?;
            let w = cover_window(&a.algebra, *window)?;
            let name = format!("{}_cover{}", a.name, window);
            write_text_or_json(out, json, &dsl::print(&name, &w.algebra)).map_err(io)?;
            Ok(EXIT_FINITE)
        }
        Command::Contains { a, pattern: name, on_cover } => {
            let a = load(a)?;
            let pat = pattern(name).ok_or_else(|| CliError::Usage(format!("unknown pattern `{name}`")))?;
            let found =
                if *on_cover { cover_contains_pattern(&a.algebra, &pat)? } else { contains_quotient(&a.algebra, &pat) };
            let answer = if found { "yes" } else { "no" };
            if json {
                let j = serde_json::json!({ "pattern": name, "on_cover": on_cover, "result": answer });
                writeln!(out, "{j}").map_err(io)?;
            } else {
                writeln!(out, "{answer}").map_err(io)?;
            }
            Ok(if found { EXIT_FINITE } else { EXIT_INFINITE })
        }
        Command::Oracle { a, b } => {
            let (a, b) = (load(a)?, load(b)?);
            let t = tensor(&a.algebra, &b.algebra);
            let (answer, code) = match separated::sound_infinite_test(&t.presentation) {
                OracleOutcome::Infinite => ("infinite", EXIT_INFINITE),
                OracleOutcome::Inconclusive => ("inconclusive", EXIT_UNSUPPORTED),
            };
            if json {
                writeln!(out, "{}", serde_json::json!({ "result": answer })).map_err(io)?;
            } else {
                writeln!(out, "{answer}").map_err(io)?;
            }
            Ok(code)
        }
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let json_requested = argv.iter().any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_FINITE;
            }
            if json_requested {
                let first = e.to_string().lines().next().unwrap_or_default().trim_start_matches("error: ").to_string();
                let _ = writeln!(err, "{}", error_json(&CliError::Usage(first)));
            } else {
                let _ = write!(err, "{}", e.render());
            }
            return EXIT_USAGE;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            if cli.json {
                let _ = writeln!(err, "{}", error_json(&e));
            } else {
                let _ = writeln!(err, "error: {e}");
            }
            e.exit_code()
        }
    }
}
