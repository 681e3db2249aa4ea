fn main() {
    std::process::exit(ramseycert::cli::main_entry());
}
