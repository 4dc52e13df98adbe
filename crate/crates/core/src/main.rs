fn main() {
    std::process::exit(iasi::cli::main());
}
