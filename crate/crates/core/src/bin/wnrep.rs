fn main() {
    std::process::exit(wnrep::cli::main_with_args(std::env::args_os()));
}
