fn main() {
    std::process::exit(mops::cli::run());
}
