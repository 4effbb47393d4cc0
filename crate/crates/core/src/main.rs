fn main() {
    std::process::exit(gpnd::cli::main());
}
