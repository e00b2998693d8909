use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = adoforge_cli::run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(u8::try_from(out.code).unwrap_or(3))
}
