fn main() {
    std::process::exit(integral_graphs::cli::run(std::env::args_os()));
}
