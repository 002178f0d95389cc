fn main() {
    std::process::exit(multiplier_hopf::cli::run());
}
