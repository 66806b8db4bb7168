fn main() {
    std::process::exit(fidelity_frontier::cli::run(std::env::args_os()));
}
