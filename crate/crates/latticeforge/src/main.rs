fn main() {
    std::process::exit(latticeforge::cli::main_with(std::env::args()));
}
