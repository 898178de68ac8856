fn main() {
    std::process::exit(truecomm::cli::run_main());
}
