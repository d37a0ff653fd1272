fn main() {
    std::process::exit(idemrel::cli::run(std::env::args_os()));
}
