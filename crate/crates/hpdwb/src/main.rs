fn main() {
    std::process::exit(hpdwb::cli::main_entry(std::env::args_os()));
}
