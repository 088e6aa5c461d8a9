use std::io::Write;
use std::process::ExitCode;

use ucpp::cli::run;
use ucpp::suites::Config;

fn main() -> ExitCode {
    let out = run(std::env::args_os(), &Config::default());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
