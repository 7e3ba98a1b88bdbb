//! `qhurwitz`: batch front end for the quantum Hurwitz engine.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error, 3 verification
//! mismatch under `--strict`.

mod commands;
mod options;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use commands::{execute, inputs, CliError};
use options::Cli;
use output::render;

fn run() -> Result<u8, (u8, String)> {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    Ok(0)
                }
                _ => Err((1, e.render().to_string())),
            };
        }
    };
    let opts = &cli.opts;
    let run = || execute(cli.command, opts);
    let result = match opts.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build()
            .map_err(|e| (2, format!("error: cannot start worker pool: {e}")))?
            .install(run),
        None => run(),
    };
    let doc = match result {
        Ok(doc) => doc,
        Err(CliError::Usage(msg)) => return Err((1, format!("error: {msg}"))),
        Err(CliError::Domain(e)) => return Err((2, format!("error: {e}"))),
    };
    let text = render(cli.command.name(), inputs(opts), &doc, opts.format).map_err(|e| (2, format!("error: {e}")))?;
    match &opts.out {
        Some(path) => std::fs::write(path, text).map_err(|e| (2, format!("error: cannot write {}: {e}", path.display())))?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).map_err(|e| (2, format!("error: {e}")))?;
        }
    }
    Ok(if opts.strict && !doc.verified { 3 } else { 0 })
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err((code, msg)) => {
            eprintln!("{}", msg.trim_end());
            ExitCode::from(code)
        }
    }
}
