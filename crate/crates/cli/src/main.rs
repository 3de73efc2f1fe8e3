use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use modinv::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let result = run(cli, &mut out);
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(modinv::Failure::BrokenPipe) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("modinv: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
