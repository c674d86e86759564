use std::process::ExitCode;

fn main() -> ExitCode {
    ordcat::cli::main()
}
