use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    // any panic is an internal error; keep the exit-code contract anyway
    let out = match std::panic::catch_unwind(|| poisson_norm_cli::run(args)) {
        Ok(out) => out,
        Err(_) => return ExitCode::from(poisson_norm_cli::EXIT_INPUT),
    };
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code)
}
