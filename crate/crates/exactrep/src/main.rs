use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(exactrep::cli::run(std::env::args()) as u8)
}
