fn main() {
    std::process::exit(mcmtop::cli::run());
}
