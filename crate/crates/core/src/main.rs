use std::io;
use std::process::ExitCode;

use excgamma::harness::cli;

fn main() -> ExitCode {
    let code = cli::run(std::env::args_os(), &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code as u8)
}
