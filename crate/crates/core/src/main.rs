fn main() {
    std::process::exit(hlzeta::cli::run(std::env::args_os()));
}
