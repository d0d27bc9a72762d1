use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(conformal_nuclearity::cli::run(std::env::args_os()))
}
