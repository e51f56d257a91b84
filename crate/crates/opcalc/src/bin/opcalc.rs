fn main() {
    std::process::exit(opcalc::cli::run(std::env::args().skip(1)));
}
