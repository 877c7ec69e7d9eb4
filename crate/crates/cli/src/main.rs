use clap::Parser;

fn main() {
    let cli = match acspec_cli::Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { acspec_cli::exit::USAGE } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    std::process::exit(acspec_cli::run(&cli));
}
