use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use jacobsthal::{EvalMethod, IdentityForm, IdentityId, SequenceKind};

#[derive(Debug, Parser)]
#[command(
    name = "jacobsthal",
    version,
    about = "Generalized Jacobsthal / Jacobsthal-Lucas numbers in exact arithmetic"
)]
pub struct Cli {
    /// Write data to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print consecutive terms of one sequence.
    Gen(GenArgs),
    /// Evaluate a single term with one or all strategies.
    Eval(EvalArgs),
    /// Sweep identities over a grid of k and indices.
    Verify(VerifyArgs),
    /// Expand a generating function and compare it with the recurrence.
    Series(SeriesArgs),
    /// Time the evaluation strategies against each other.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
    Bfile,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Table,
    Json,
}

#[derive(Debug, Args)]
pub struct Sequence {
    /// `J` (Jacobsthal) or `j` (Jacobsthal-Lucas).
    #[arg(value_parser = parse_kind)]
    pub kind: SequenceKind,

    /// Family parameter, an integer >= 2.
    #[arg(long)]
    pub k: u64,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub seq: Sequence,
    #[arg(long, default_value_t = 0)]
    pub from: u64,
    #[arg(long)]
    pub to: u64,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodChoice {
    One(EvalMethod),
    All,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub seq: Sequence,
    #[arg(long)]
    pub n: u64,
    /// iter, binet, matrix or all.
    #[arg(long, default_value = "matrix", value_parser = parse_method_choice)]
    pub method: MethodChoice,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormChoice {
    Paper,
    Corrected,
    Both,
}

impl FormChoice {
    pub fn forms(self) -> Vec<IdentityForm> {
        match self {
            FormChoice::Paper => vec![IdentityForm::PaperLiteral],
            FormChoice::Corrected => vec![IdentityForm::Corrected],
            FormChoice::Both => IdentityForm::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Comma-separated identity names, or `all`.
    #[arg(long, value_parser = parse_identities, default_value = "all")]
    pub identity: IdentitySelection,
    /// Inclusive range of k, `A..B` or a single value.
    #[arg(long, value_parser = parse_k_range)]
    pub k: RangeInclusive<u64>,
    /// Largest index value in the grid.
    #[arg(long)]
    pub n_max: u64,
    #[arg(long, value_enum, default_value_t = FormChoice::Corrected)]
    pub form: FormChoice,
    #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
    pub format: ReportFormat,
    /// Failing instances listed per identity and form.
    #[arg(long, default_value_t = 10)]
    pub max_failures: usize,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[command(flatten)]
    pub seq: Sequence,
    /// Number of coefficients, at least 1.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub count: u64,
    #[arg(long, value_enum, default_value_t = FormChoice::Corrected)]
    pub form: FormChoice,
    #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
    pub format: ReportFormat,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub seq: Sequence,
    /// Comma-separated indices.
    #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
    pub n: Vec<u64>,
    /// Comma-separated strategies.
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "iter,binet,matrix",
        value_parser = parse_method
    )]
    pub methods: Vec<EvalMethod>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentitySelection(pub Vec<IdentityId>);

fn parse_kind(s: &str) -> Result<SequenceKind, String> {
    s.parse()
}

fn parse_method(s: &str) -> Result<EvalMethod, String> {
    s.parse()
}

fn parse_method_choice(s: &str) -> Result<MethodChoice, String> {
    if s == "all" {
        Ok(MethodChoice::All)
    } else {
        s.parse().map(MethodChoice::One)
    }
}

fn parse_identities(s: &str) -> Result<IdentitySelection, String> {
    if s == "all" {
        return Ok(IdentitySelection(IdentityId::ALL.to_vec()));
    }
    let ids = s
        .split(',')
        .map(|part| part.trim().parse::<IdentityId>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| {
            let known: Vec<&str> = IdentityId::ALL.iter().map(|id| id.slug()).collect();
            format!("{e}; known: all, {}", known.join(", "))
        })?;
    Ok(IdentitySelection(ids))
}

pub fn parse_k_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let number = |t: &str| {
        t.trim()
            .parse::<u64>()
            .map_err(|_| format!("`{t}` is not a non-negative integer"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (number(lo)?, number(hi.strip_prefix('=').unwrap_or(hi))?),
        None => {
            let v = number(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok(lo..=hi)
}
