fn main() {
    std::process::exit(hopfsmooth::cli::run());
}
