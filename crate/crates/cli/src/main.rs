use std::process::ExitCode;

use fibprod_cli::{parse_args, run, ParseOutcome};

fn main() -> ExitCode {
    let config = match parse_args(std::env::args_os().skip(1)) {
        Ok(config) => config,
        Err(ParseOutcome::Info(text)) => {
            print!("{text}");
            return ExitCode::SUCCESS;
        }
        Err(ParseOutcome::Usage(text)) => {
            eprint!("{text}");
            return ExitCode::from(2);
        }
    };
    let output = run(&config);
    for line in &output.diagnostics {
        eprintln!("{line}");
    }
    print!("{}", output.document);
    ExitCode::from(output.exit_code)
}
