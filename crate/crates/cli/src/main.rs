use clap::Parser;

fn main() {
    let config = gfrob_cli::RunConfig::parse();
    let stdout = std::io::stdout();
    let status = gfrob_cli::run(&config, &mut stdout.lock());
    std::process::exit(status);
}
