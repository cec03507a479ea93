use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use residues_cli::{exit, run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) {
                let _ = err.print();
                return ExitCode::SUCCESS;
            }
            let rendered = err.render().to_string();
            let line = rendered.lines().next().unwrap_or("error: invalid usage");
            eprintln!("{line}");
            return code(exit::USAGE);
        }
    };

    match run(&cli) {
        Ok((output, status)) => {
            let mut stdout = std::io::stdout().lock();
            if let Err(err) = stdout
                .write_all(output.as_bytes())
                .and_then(|_| stdout.flush())
            {
                eprintln!("error: output failed: {err}");
                return code(exit::INTERNAL);
            }
            code(status)
        }
        Err(err) => {
            eprintln!("error: {err}");
            code(err.exit_code())
        }
    }
}

fn code(value: i32) -> ExitCode {
    ExitCode::from(value as u8)
}
