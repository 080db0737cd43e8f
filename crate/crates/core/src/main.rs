use std::io;

fn main() {
    let code = supercong::cli::run(std::env::args_os(), io::stdout(), io::stderr());
    std::process::exit(code);
}
