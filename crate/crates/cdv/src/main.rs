fn main() {
    std::process::exit(cdv::cli::main_entry());
}
