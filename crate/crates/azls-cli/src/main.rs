use clap::Parser;

fn main() {
    let cli = azls_cli::Cli::parse();
    if let Err(e) = azls_cli::run(cli) {
        eprintln!("azls: error: {e}");
        std::process::exit(e.exit_code());
    }
}
