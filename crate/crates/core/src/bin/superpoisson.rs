use std::io::{self, BufRead, IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use superpoisson::graded::{PrintMode, DEFAULT_TRUNCATION};
use superpoisson::lang::{run_session, Session};

#[derive(Parser)]
#[command(
    name = "superpoisson",
    version,
    about = "Scripted checks of higher Poisson and Koszul brackets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Cutoff on total degree in dx, x* and pi.
    #[arg(long, global = true)]
    trunc_fiber: Option<u32>,
    /// Cutoff on total degree in formal parameters.
    #[arg(long, global = true)]
    trunc_lambda: Option<u32>,
    /// Cutoff on total degree in base coordinates.
    #[arg(long, global = true)]
    trunc_base: Option<u32>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Canonical)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Run a script and print every result.
    Run { script: PathBuf },
    /// Read statements interactively.
    Repl,
    /// Run a script and write its check reports to a file.
    Check {
        script: PathBuf,
        /// Report lines go here; JSON records go to `<path>.jsonl`.
        #[arg(long)]
        report: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Canonical,
    Latex,
}

fn session(cli: &Cli) -> Session {
    let mut t = DEFAULT_TRUNCATION;
    t.fiber = cli.trunc_fiber.or(t.fiber);
    t.lambda = cli.trunc_lambda.or(t.lambda);
    t.base = cli.trunc_base.or(t.base);
    let mode = match cli.format {
        Format::Canonical => PrintMode::Canonical,
        Format::Latex => PrintMode::Latex,
    };
    Session::new(t, mode)
}

fn run_file(cli: &Cli, script: &PathBuf, report: Option<&PathBuf>) -> io::Result<u8> {
    let src = match std::fs::read_to_string(script) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", script.display());
            return Ok(2);
        }
    };
    let mut s = session(cli);
    let stdout = io::stdout();
    let outcome = run_session(&src, &mut s, &mut stdout.lock())?;
    if let Some(e) = &outcome.error {
        eprintln!("{}: {e}", script.display());
    }
    if let Some(path) = report {
        let mut lines = String::new();
        let mut json = String::new();
        for r in &outcome.reports {
            lines.push_str(&r.to_line());
            lines.push('\n');
            json.push_str(&r.to_json());
            json.push('\n');
        }
        std::fs::write(path, lines)?;
        let mut jsonl = path.clone().into_os_string();
        jsonl.push(".jsonl");
        std::fs::write(jsonl, json)?;
    }
    Ok(outcome.exit_code as u8)
}

fn repl(cli: &Cli) -> io::Result<u8> {
    let mut s = session(cli);
    let interactive = io::stdin().is_terminal();
    let mut out = io::stdout();
    let mut buf = String::new();
    let mut status = 0u8;
    let prompt = |out: &mut io::Stdout, cont: bool| -> io::Result<()> {
        if interactive {
            write!(out, "{}", if cont { "... " } else { "> " })?;
            out.flush()?;
        }
        Ok(())
    };
    prompt(&mut out, false)?;
    for line in io::stdin().lock().lines() {
        let line = line?;
        buf.push_str(&line);
        buf.push('\n');
        let code = line.split('#').next().unwrap_or("").trim_end();
        if !code.ends_with(';') {
            prompt(&mut out, !buf.trim().is_empty())?;
            continue;
        }
        match s.run(&buf) {
            Ok(outputs) => {
                for o in &outputs {
                    writeln!(out, "{}", s.render(o))?;
                    if matches!(o, superpoisson::lang::Output::Report(r) if !r.pass) {
                        status = status.max(1);
                    }
                }
            }
            Err(e) => {
                eprintln!("{e}");
                status = 2;
            }
        }
        buf.clear();
        prompt(&mut out, false)?;
    }
    Ok(status)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match &cli.command {
        Command::Run { script } => run_file(&cli, script, None),
        Command::Check { script, report } => run_file(&cli, script, Some(report)),
        Command::Repl => repl(&cli),
    };
    match code {
        Ok(c) => ExitCode::from(c),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
