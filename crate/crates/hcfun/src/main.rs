use clap::Parser;

fn main() {
    let cli = hcfun::cli::Cli::parse();
    let outcome = hcfun::cli::run(&cli);
    print!("{}", outcome.report);
    std::process::exit(outcome.exit_code);
}
