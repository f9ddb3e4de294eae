use std::io::Write;

fn main() {
    let (code, out) = setcat::cli::run(std::env::args_os());
    // a closed pipe is not an error worth reporting
    let _ = writeln!(std::io::stdout(), "{out}");
    std::process::exit(code);
}
