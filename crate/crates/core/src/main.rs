fn main() {
    std::process::exit(chainring_gray::cli::main_entry());
}
