//! `jacobsthal` command-line tool.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error.

mod args;
mod render;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use jacobsthal::identities::sweep;
use jacobsthal::series::match_report;
use jacobsthal::{term_stream, BigInt, EvalMethod, SequenceParams, SweepConfig};
use serde_json::json;

use args::{
    BenchArgs, Cli, Command, EvalArgs, Format, GenArgs, MethodChoice, ReportFormat, Sequence,
    SeriesArgs, VerifyArgs,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Outcome {
    Success,
    Mismatch,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<jacobsthal::Error> for Failure {
    fn from(e: jacobsthal::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<Outcome, Failure>;

fn params(seq: &Sequence) -> Result<SequenceParams, Failure> {
    Ok(SequenceParams::new(seq.kind, seq.k)?)
}

fn cmd_gen(args: &GenArgs, out: &mut dyn Write) -> CmdResult {
    let p = params(&args.seq)?;
    let terms = term_stream(&p, args.from, args.to)?;
    match args.format {
        Format::Csv => {
            let values: Vec<String> = terms.map(|(_, v)| v.to_string()).collect();
            writeln!(out, "{}", values.join(","))?;
        }
        Format::Bfile => {
            for (n, v) in terms {
                writeln!(out, "{n} {v}")?;
            }
        }
        Format::Table => {
            let width = args.to.to_string().len().max(1);
            writeln!(out, "{:>width$}  {}({},n)", "n", p.kind(), p.k())?;
            for (n, v) in terms {
                writeln!(out, "{n:>width$}  {v}")?;
            }
        }
        Format::Json => {
            let values: Vec<_> = terms.map(|(_, v)| render::big(&v)).collect();
            let doc = json!({
                "kind": p.kind().symbol(),
                "k": p.k(),
                "from": args.from,
                "to": args.to,
                "terms": values,
            });
            writeln!(out, "{doc}")?;
        }
    }
    Ok(Outcome::Success)
}

fn cmd_eval(args: &EvalArgs, out: &mut dyn Write) -> CmdResult {
    let p = params(&args.seq)?;
    match args.method {
        MethodChoice::One(method) => {
            writeln!(out, "{}", method.evaluate(&p, args.n))?;
            Ok(Outcome::Success)
        }
        MethodChoice::All => {
            let values: Vec<BigInt> = EvalMethod::ALL
                .iter()
                .map(|m| m.evaluate(&p, args.n))
                .collect();
            for (m, v) in EvalMethod::ALL.iter().zip(&values) {
                writeln!(out, "{m} {v}")?;
            }
            let agree = values.windows(2).all(|w| w[0] == w[1]);
            writeln!(out, "agreement={agree}")?;
            if agree {
                Ok(Outcome::Success)
            } else {
                eprintln!(
                    "error: evaluation strategies disagree for {p} at n={}",
                    args.n
                );
                Ok(Outcome::Mismatch)
            }
        }
    }
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let mut config = SweepConfig::new(
        args.identity.0.iter().copied(),
        args.k.clone(),
        args.n_max,
        args.form.forms(),
    );
    config.keep_failures = args.max_failures;
    let report = sweep(&config)?;
    match args.format {
        ReportFormat::Json => {
            for entry in &report.entries {
                writeln!(out, "{}", render::sweep_entry(entry))?;
            }
        }
        ReportFormat::Table => write!(out, "{}", render::sweep_table(&report.entries))?,
    }
    if report.all_pass() {
        Ok(Outcome::Success)
    } else {
        eprintln!(
            "{} of {} checks failed",
            report.total_failures(),
            report.total_checks()
        );
        Ok(Outcome::Mismatch)
    }
}

fn cmd_series(args: &SeriesArgs, out: &mut dyn Write) -> CmdResult {
    let p = params(&args.seq)?;
    let count = usize::try_from(args.count)
        .map_err(|_| Failure::Usage(format!("count {} is too large", args.count)))?;
    let report = match_report(&p, count)?;
    let mut all_match = true;
    for form in args.form.forms() {
        let m = report.form(form);
        all_match &= m.matches();
        match args.format {
            ReportFormat::Json => writeln!(out, "{}", render::series_json(&report, m))?,
            ReportFormat::Table => write!(out, "{}", render::series_text(m))?,
        }
    }
    Ok(if all_match {
        Outcome::Success
    } else {
        Outcome::Mismatch
    })
}

fn cmd_bench(args: &BenchArgs, out: &mut dyn Write) -> CmdResult {
    let p = params(&args.seq)?;
    if args.methods.is_empty() {
        return Err(Failure::Usage("no methods given".into()));
    }
    writeln!(out, "method,k,n,seconds,digits")?;
    let mut outcome = Outcome::Success;
    for &n in &args.n {
        let mut reference: Option<BigInt> = None;
        for &method in &args.methods {
            let start = Instant::now();
            let value = method.evaluate(&p, n);
            let seconds = start.elapsed().as_secs_f64();
            let digits = value.to_string().trim_start_matches('-').len();
            writeln!(out, "{method},{},{n},{seconds:.6},{digits}", p.k())?;
            match &reference {
                None => reference = Some(value),
                Some(r) if *r != value => {
                    eprintln!(
                        "error: {method} disagrees with {} at n={n}",
                        args.methods[0]
                    );
                    outcome = Outcome::Mismatch;
                }
                Some(_) => {}
            }
        }
    }
    Ok(outcome)
}

fn run(cli: &Cli) -> CmdResult {
    let mut sink: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(BufWriter::new(File::create(path).map_err(|e| {
            Failure::Usage(format!("cannot create {}: {e}", path.display()))
        })?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let outcome = match &cli.command {
        Command::Gen(a) => cmd_gen(a, &mut sink),
        Command::Eval(a) => cmd_eval(a, &mut sink),
        Command::Verify(a) => cmd_verify(a, &mut sink),
        Command::Series(a) => cmd_series(a, &mut sink),
        Command::Bench(a) => cmd_bench(a, &mut sink),
    }?;
    sink.flush()?;
    Ok(outcome)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(u8::try_from(e.exit_code()).unwrap_or(2));
        }
    };
    match run(&cli) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
