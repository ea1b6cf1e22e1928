fn main() {
    std::process::exit(minvar::cli::main_entry());
}
