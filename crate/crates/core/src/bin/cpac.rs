fn main() {
    std::process::exit(cpac::cli::main());
}
