fn main() {
    std::process::exit(specrank::cli::main_with_args(std::env::args()));
}
