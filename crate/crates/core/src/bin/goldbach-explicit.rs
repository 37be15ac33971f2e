use std::process::ExitCode;

fn main() -> ExitCode {
    goldbach_explicit::cli::run()
}
