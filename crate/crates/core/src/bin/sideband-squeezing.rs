fn main() {
    std::process::exit(sideband_squeezing::cli::main_entry(std::env::args_os()));
}
