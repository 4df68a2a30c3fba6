use std::process::ExitCode;

fn main() -> ExitCode {
    let out = autmg::cli::run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.exit_code as u8)
}
