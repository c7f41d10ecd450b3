fn main() {
    std::process::exit(polycollatz_cli::run());
}
