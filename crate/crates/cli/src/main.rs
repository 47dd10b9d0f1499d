use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use permstat::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = match run(cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            let _ = out.flush();
            if !e.message.is_empty() {
                eprintln!("permstat: {}", e.message);
            }
            e.code
        }
    };
    let _ = out.flush();
    ExitCode::from(code)
}
