fn main() {
    std::process::exit(hom_algebra::cli::run());
}
