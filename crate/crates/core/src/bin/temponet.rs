use clap::Parser;

use temponet::cli::{exit_code, run, Cli};

fn main() {
    if let Err(e) = run(Cli::parse()) {
        eprintln!("error: {e}");
        let code = exit_code(&e);
        if code == 2 {
            eprintln!("\nFor more information, try '--help'.");
        }
        std::process::exit(code);
    }
}
