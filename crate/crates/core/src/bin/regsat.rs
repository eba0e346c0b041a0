fn main() {
    std::process::exit(regsat::cli::main());
}
