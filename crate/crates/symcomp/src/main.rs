fn main() {
    std::process::exit(symcomp::cli::run());
}
