fn main() {
    std::process::exit(sigma_cli::run(std::env::args_os()));
}
