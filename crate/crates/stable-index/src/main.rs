use std::process::ExitCode;

fn main() -> ExitCode {
    stable_index::cli::run()
}
