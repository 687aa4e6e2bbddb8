fn main() {
    std::process::exit(mapcensus::cli::run());
}
