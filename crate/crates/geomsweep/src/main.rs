fn main() {
    std::process::exit(geomsweep::cli::run_from_env());
}
