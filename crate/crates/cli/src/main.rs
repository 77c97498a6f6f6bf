use std::process::ExitCode;

use arp_cli::{run, Cli};
use clap::Parser;

fn main() -> ExitCode {
    // clap reports usage errors itself, with exit code 2
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("arp: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
