//! Command-line parsing into a validated [`RunConfig`].

use std::ffi::OsString;
use std::fmt;

use clap::error::ErrorKind;
use clap::{Parser, ValueEnum};
use fibprod::{IdentityId, Params};

/// Upper limit on `--digits`.
pub const MAX_DIGITS: u32 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Print the identity catalog
    List,
    /// Check one identity at one (n, q)
    Verify,
    /// Check every identity for 1 <= n <= n-max, 1 <= q <= q-max
    Grid,
    /// Print the partial product P_N as a decimal
    Eval,
    /// Check the five named constants
    Special,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Markdown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    Limit,
    Both,
}

impl ModeArg {
    pub fn modes(self) -> &'static [fibprod::Mode] {
        use fibprod::Mode;
        match self {
            ModeArg::Exact => &[Mode::Exact],
            ModeArg::Limit => &[Mode::Limit],
            ModeArg::Both => &[Mode::Exact, Mode::Limit],
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "fibprod",
    version,
    about = "Verify Fibonacci/Lucas infinite product identities exactly in Q(√5)",
    after_help = "Exit status: 0 when every check passes, 1 when any check fails, 2 on a usage error.\n\n\
                  The defaults --terms 40 --digits 30 make every identity with n, q <= 2 pass \
                  limit verification with a tail bound far below 1e-6."
)]
struct Cli {
    #[arg(value_enum)]
    command: Command,

    /// Identity label such as T1.4 (verify, eval; optional filter for grid)
    #[arg(long, value_parser = parse_identity)]
    identity: Option<IdentityId>,

    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: Option<u32>,

    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    q: Option<u32>,

    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n_max: Option<u32>,

    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    q_max: Option<u32>,

    /// Truncation point N of the partial product
    #[arg(long, default_value_t = 40)]
    terms: u64,

    /// Fractional digits in decimal output
    #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u32).range(0..=i64::from(MAX_DIGITS)))]
    digits: u32,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[arg(long, value_enum, default_value_t = ModeArg::Limit)]
    mode: ModeArg,

    /// Record wall-clock time per check (makes output vary between runs)
    #[arg(long)]
    timing: bool,
}

fn parse_identity(s: &str) -> Result<IdentityId, String> {
    s.parse().map_err(|e: fibprod::Error| e.to_string())
}

/// Everything a run needs, already validated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub identity: Option<IdentityId>,
    pub params: Option<Params>,
    pub n_max: Option<u32>,
    pub q_max: Option<u32>,
    pub terms: u64,
    pub digits: u32,
    pub format: Format,
    pub mode: ModeArg,
    pub timing: bool,
}

/// Why argument parsing stopped.
#[derive(Debug)]
pub enum ParseOutcome {
    /// `--help` or `--version`; print and exit 0.
    Info(String),
    /// Bad input; print and exit 2.
    Usage(String),
}

impl fmt::Display for ParseOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseOutcome::Info(s) | ParseOutcome::Usage(s) => f.write_str(s),
        }
    }
}

/// Parses `argv` without the program name.
pub fn parse_args<I, T>(argv: I) -> Result<RunConfig, ParseOutcome>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let full = std::iter::once(OsString::from("fibprod")).chain(argv.into_iter().map(Into::into));
    let cli = Cli::try_parse_from(full).map_err(|e| match e.kind() {
        ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ParseOutcome::Info(e.to_string()),
        _ => ParseOutcome::Usage(e.to_string()),
    })?;
    validate(cli)
}

fn usage(msg: impl Into<String>) -> ParseOutcome {
    ParseOutcome::Usage(format!("error: {}\n\nFor more information, try '--help'.\n", msg.into()))
}

fn validate(cli: Cli) -> Result<RunConfig, ParseOutcome> {
    let params = match (cli.n, cli.q) {
        (Some(n), Some(q)) => Some(Params::new(n, q).map_err(|e| usage(e.to_string()))?),
        _ => None,
    };
    match cli.command {
        Command::Verify | Command::Eval => {
            let name = if cli.command == Command::Verify { "verify" } else { "eval" };
            if cli.identity.is_none() {
                return Err(usage(format!("{name} requires --identity")));
            }
            if params.is_none() {
                return Err(usage(format!("{name} requires both --n and --q")));
            }
        }
        Command::Grid => {
            if cli.n_max.is_none() || cli.q_max.is_none() {
                return Err(usage("grid requires both --n-max and --q-max"));
            }
            Params::new(cli.n_max.unwrap_or(1), cli.q_max.unwrap_or(1)).map_err(|e| usage(e.to_string()))?;
        }
        Command::List | Command::Special => {}
    }
    Ok(RunConfig {
        command: cli.command,
        identity: cli.identity,
        params,
        n_max: cli.n_max,
        q_max: cli.q_max,
        terms: cli.terms,
        digits: cli.digits,
        format: cli.format,
        mode: cli.mode,
        timing: cli.timing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_flags() {
        let c = parse_args(["verify", "--identity", "T1.4", "--n", "1", "--q", "1", "--terms", "40"]).unwrap();
        assert_eq!(c.command, Command::Verify);
        assert_eq!(c.identity.unwrap().to_string(), "T1.4");
        assert_eq!(c.params, Some(Params::new(1, 1).unwrap()));
        assert_eq!(c.terms, 40);
        assert_eq!(c.digits, 30);
        assert_eq!(c.mode, ModeArg::Limit);
    }

    #[test]
    fn unknown_label_is_a_usage_error() {
        assert!(matches!(parse_args(["verify", "--identity", "T9.9"]), Err(ParseOutcome::Usage(_))));
    }

    #[test]
    fn grid_flags() {
        let c = parse_args(["grid", "--n-max", "3", "--q-max", "3", "--format", "json"]).unwrap();
        assert_eq!(c.command, Command::Grid);
        assert_eq!((c.n_max, c.q_max), (Some(3), Some(3)));
        assert_eq!(c.format, Format::Json);
    }

    #[test]
    fn missing_and_bad_values() {
        for argv in [
            &["verify", "--identity", "T1.1"][..],
            &["verify", "--n", "1", "--q", "1"],
            &["grid", "--n-max", "2"],
            &["verify", "--identity", "T1.1", "--n", "0", "--q", "1"],
            &["verify", "--identity", "T1.1", "--n", "-1", "--q", "1"],
            &["verify", "--identity", "T1.1", "--n", "2000000", "--q", "1"],
            &["list", "--format", "yaml"],
            &["frobnicate"],
            &[],
        ] {
            assert!(matches!(parse_args(argv.iter().copied()), Err(ParseOutcome::Usage(_))), "{argv:?}");
        }
    }

    #[test]
    fn help_is_not_an_error() {
        assert!(matches!(parse_args(["--help"]), Err(ParseOutcome::Info(_))));
    }
}
