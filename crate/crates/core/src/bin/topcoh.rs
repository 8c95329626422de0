use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use topcoh::job::{error_json, parse_job, run, COMMANDS};
use topcoh::{Error, Result};

/// Top local cohomology annihilators, cd-filtrations and Hochster ranks for
/// cyclic modules over polynomial rings.
#[derive(Parser, Debug)]
#[command(name = "topcoh", version)]
struct Cli {
    /// One of: gb, dim, primdec, att-top, ann-top, filtration, hochster,
    /// equivalences, verify.
    command: String,
    /// Job document path, or `-` for standard input. Optional for `verify`.
    #[arg(long)]
    job: Option<String>,
    /// Seed for `verify`, overriding the job document.
    #[arg(long)]
    seed: Option<u64>,
    /// Write the JSON result here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn read_job(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(fs::read_to_string(path)?)
    }
}

fn execute(cli: &Cli) -> Result<serde_json::Value> {
    if !COMMANDS.contains(&cli.command.as_str()) {
        return Err(Error::InvalidArgument(format!(
            "unknown command `{}`; expected one of {}",
            cli.command,
            COMMANDS.join(", ")
        )));
    }
    let mut job = match &cli.job {
        Some(path) => parse_job(&read_job(path)?)?,
        None if cli.command == "verify" => Default::default(),
        None => return Err(Error::InvalidArgument("--job is required".into())),
    };
    if cli.seed.is_some() {
        job.seed = cli.seed;
    }
    let value = run(Some(&cli.command), &job)?;
    if cli.command == "verify" && value["all_pass"] == serde_json::Value::Bool(false) {
        // the report is still written; the exit status flags the failure
        emit(cli, &value)?;
        return Err(Error::TheoremViolation(
            "verification found counterexamples".into(),
        ));
    }
    Ok(value)
}

fn emit(cli: &Cli, value: &serde_json::Value) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| Error::Io(e.to_string()))?;
    text.push('\n');
    match &cli.out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = execute(&cli).and_then(|v| emit(&cli, &v));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !(cli.command == "verify" && matches!(e, Error::TheoremViolation(_))) {
                let text = serde_json::to_string_pretty(&error_json(&e)).unwrap_or_default();
                let _ = match &cli.out {
                    Some(path) => fs::write(path, text + "\n"),
                    None => writeln!(io::stdout(), "{text}"),
                };
            }
            eprintln!("topcoh: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
