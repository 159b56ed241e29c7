fn main() {
    std::process::exit(laplace_polya::cli::run(std::env::args_os()));
}
