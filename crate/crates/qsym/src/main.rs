use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use qsym::cli::{exit, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let code = match run(&cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {}", e);
            exit::ERROR
        }
    };
    if let Err(e) = out.flush() {
        eprintln!("error: {}", e);
        return ExitCode::from(exit::ERROR);
    }
    ExitCode::from(code)
}
