fn main() {
    std::process::exit(kronlab::cli::run_main());
}
