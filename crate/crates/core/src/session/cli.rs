use std::path::PathBuf;

use clap::{Parser, ValueEnum};

use crate::error::{Error, Result};
use crate::field::Field;

use super::doc::SessionDoc;
use super::execute::execute;
use super::report::{exit_code, render_json, render_text, Report};
use super::{Overrides, Session};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

/// Regular-sequence checks on finitely presented modules.
///
/// COMMAND is a session command such as `check f on M`, `run` to execute
/// every command in the session file, or `dump` to print the parsed session
/// as JSON.
#[derive(Debug, Clone, Parser)]
#[command(name = "regseq", version)]
pub struct CliArgs {
    /// Command words, e.g. `check f on M`.
    #[arg(required = true, num_args = 1.., value_name = "COMMAND")]
    pub words: Vec<String>,
    #[arg(long, value_name = "FILE")]
    pub session: PathBuf,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// `q` for the rationals or `gf:P` for a prime field.
    #[arg(long, value_name = "q|gf:P")]
    pub field: Option<String>,
    #[arg(long, value_name = "N")]
    pub degree_cap: Option<u32>,
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub stdout: String,
    pub code: i32,
}

fn parse_field_flag(s: &str) -> Result<Field> {
    let lower = s.to_ascii_lowercase();
    if lower == "q" || lower == "qq" {
        return Ok(Field::Rational);
    }
    let p = lower
        .strip_prefix("gf:")
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| Error::Precondition(format!("bad --field `{s}`; use q or gf:P")))?;
    Field::prime(p)
}

fn overrides(args: &CliArgs, env_cap: Option<&str>) -> Result<Overrides> {
    let env_cap = match env_cap {
        Some(v) => Some(
            v.trim()
                .parse::<u32>()
                .map_err(|_| Error::Precondition(format!("bad REGSEQ_DEGREE_CAP `{v}`")))?,
        ),
        None => None,
    };
    Ok(Overrides {
        field: args.field.as_deref().map(parse_field_flag).transpose()?,
        degree_cap: args.degree_cap.or(env_cap),
        strict: args.strict,
    })
}

fn render(reports: &[Report], format: OutputFormat) -> CliOutput {
    let stdout = match format {
        OutputFormat::Text => render_text(reports),
        OutputFormat::Json => render_json(reports),
    };
    CliOutput {
        stdout,
        code: exit_code(reports),
    }
}

/// Runs one invocation. `env_cap` is the value of `REGSEQ_DEGREE_CAP`, if
/// set; the `--degree-cap` flag wins over it.
pub fn run_cli(args: &CliArgs, env_cap: Option<&str>) -> CliOutput {
    let command_text = args.words.join(" ");
    let session = overrides(args, env_cap).and_then(|o| {
        let text = std::fs::read_to_string(&args.session)
            .map_err(|e| Error::Io(format!("{}: {e}", args.session.display())))?;
        Session::parse_with(&text, &o)
    });
    let session = match session {
        Ok(s) => s,
        Err(e) => return render(&[Report::error(command_text, &e)], args.format),
    };
    match args.words[0].as_str() {
        "run" if args.words.len() == 1 => {
            let reports: Vec<Report> = session.commands().iter().map(|c| execute(c, &session)).collect();
            render(&reports, args.format)
        }
        "dump" if args.words.len() == 1 => {
            let mut stdout = SessionDoc::from_session(&session).to_json();
            stdout.push('\n');
            CliOutput { stdout, code: 0 }
        }
        _ => match session.parse_command(&command_text) {
            Ok(cmd) => render(&[execute(&cmd, &session)], args.format),
            Err(e) => render(&[Report::error(command_text, &e)], args.format),
        },
    }
}
